#include "oracles.hpp"

#include <skewdd/permutation.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace skewdd;

namespace {

Permutation P(std::vector<int> images) { return Permutation::from_one_line(std::move(images)); }

} // namespace

TEST(Permutation, ComposeExamples) {
    const Permutation w = P({3, 4, 1, 2});
    EXPECT_EQ(compose(w, Permutation(4)), w);
    EXPECT_EQ(compose(Permutation::simple(3, 2), Permutation::simple(3, 1)), P({3, 1, 2}));
    EXPECT_EQ(compose(Permutation::simple(3, 1), Permutation::simple(3, 2)), P({2, 3, 1}));
}

TEST(Permutation, InverseExamples) {
    EXPECT_EQ(inverse(Permutation(4)), Permutation(4));
    EXPECT_EQ(inverse(P({3, 1, 2})), P({2, 3, 1}));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            const Permutation t = Permutation::transposition(4, {i, j});
            EXPECT_EQ(inverse(t), t);
        }
}

TEST(Permutation, LengthExamples) {
    EXPECT_EQ(length(Permutation(4)), 0);
    EXPECT_EQ(length(longest_element(4)), 6);
    EXPECT_EQ(length(P({3, 4, 1, 2})), 4);
    EXPECT_EQ(longest_element(1), P({1}));
    EXPECT_EQ(longest_element(3), P({3, 2, 1}));
}

TEST(Permutation, FromWordExamples) {
    EXPECT_TRUE(from_word({}, 3).is_identity());
    EXPECT_EQ(from_word({2, 1, 3, 2}, 4), P({3, 4, 1, 2}));
    EXPECT_TRUE(from_word({1, 1}, 2).is_identity());
    EXPECT_THROW(from_word({4}, 4), std::out_of_range);
}

TEST(Permutation, ReducedWordExamples) {
    EXPECT_EQ(reduced_words(Permutation(3), WordMode::all), (std::vector<SimpleWord>{{}}));
    const auto w0 = reduced_words(longest_element(3), WordMode::all);
    EXPECT_EQ(std::set<SimpleWord>(w0.begin(), w0.end()), (std::set<SimpleWord>{{1, 2, 1}, {2, 1, 2}}));
    EXPECT_EQ(reduced_words(P({3, 4, 1, 2}), WordMode::one), (std::vector<SimpleWord>{{2, 1, 3, 2}}));
}

TEST(Permutation, BruhatExamples) {
    const Permutation s1 = Permutation::simple(3, 1);
    const Permutation s2 = Permutation::simple(3, 2);
    EXPECT_TRUE(bruhat_leq(Permutation(4), P({3, 4, 1, 2})));
    EXPECT_FALSE(bruhat_leq(s1 * s2, s2 * s1));
    EXPECT_TRUE(bruhat_leq(Permutation::simple(4, 2), P({3, 4, 1, 2})));
}

TEST(Permutation, LowerCoverExamples) {
    EXPECT_TRUE(lower_covers(Permutation(3)).empty());
    const auto c1 = lower_covers(Permutation::simple(3, 1));
    ASSERT_EQ(c1.size(), 1u);
    EXPECT_TRUE(c1[0].lower.is_identity());
    EXPECT_EQ(c1[0].reflection, Transposition(1, 2));
    const Permutation s1 = Permutation::simple(3, 1);
    const Permutation s2 = Permutation::simple(3, 2);
    std::set<Permutation> lower;
    for (const auto& c : lower_covers(s1 * s2))
        lower.insert(c.lower);
    EXPECT_EQ(lower, (std::set<Permutation>{s1, s2}));
}

TEST(Permutation, ReflectionOrderingExamples) {
    using T = Transposition;
    EXPECT_EQ(reflection_ordering(3), (std::vector<T>{{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(reflection_ordering(4), (std::vector<T>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}));
    for (int n = 2; n <= 6; ++n)
        EXPECT_TRUE(is_reflection_ordering(reflection_ordering(n), n));
}

TEST(Permutation, ReflectionOrderingsFromEveryReducedWordOfW0) {
    for (int n = 3; n <= 5; ++n)
        for (const SimpleWord& word : all_reduced_words(longest_element(n)))
            EXPECT_TRUE(is_reflection_ordering(reflection_ordering_from_word(word, n), n)) << to_word_string(word);
    std::vector<Transposition> bad = reflection_ordering(3);
    std::swap(bad[0], bad[1]);
    EXPECT_FALSE(is_reflection_ordering(bad, 3));
}

TEST(Permutation, ReducedSubwordExamples) {
    using Sets = std::vector<std::vector<std::size_t>>;
    EXPECT_EQ(reduced_subwords({2, 1, 2}, Permutation(3)), Sets{{}});
    const Permutation s1s3 = from_word({1, 3}, 4);
    EXPECT_EQ(reduced_subwords({3, 2, 1, 2, 3}, s1s3), (Sets{{1, 3}, {3, 5}}));
    EXPECT_EQ(reduced_subwords({1, 1}, Permutation::simple(2, 1)), (Sets{{1}, {2}}));
}

TEST(Permutation, ExhaustiveAgainstOracles) {
    for (int n = 1; n <= 5; ++n) {
        const auto perms = all_permutations(n);
        for (const Permutation& w : perms) {
            EXPECT_EQ(length(w), oracle::inversions(w.one_line()));
            EXPECT_EQ(compose(w, inverse(w)), Permutation(n));
            EXPECT_EQ(compose(inverse(w), w), Permutation(n));
            if (n <= 4) {
                const auto all = all_reduced_words(w);
                EXPECT_EQ(std::set<SimpleWord>(all.begin(), all.end()), oracle::brute_reduced_words(w.one_line()));
                EXPECT_EQ(canonical_reduced_word(w), *oracle::brute_reduced_words(w.one_line()).begin());
                EXPECT_EQ(last_reduced_word(w), *oracle::brute_reduced_words(w.one_line()).rbegin());
            }
            for (const SimpleWord& word : all_reduced_words(w)) {
                EXPECT_EQ(static_cast<int>(word.size()), length(w));
                EXPECT_EQ(from_word(word, n).one_line(), oracle::word_product(word, n));
            }
        }
    }
}

TEST(Permutation, LengthOfWordProducts) {
    for (int n = 2; n <= 4; ++n)
        for (int len = 0; len <= 5; ++len)
            for (const SimpleWord& word : oracle::all_simple_words(n, len)) {
                const Permutation p = from_word(word, n);
                EXPECT_LE(length(p), len);
                EXPECT_EQ(length(p) == len, is_reduced(word, n));
            }
}

TEST(Permutation, ComposeIsAssociativeOnS4) {
    const auto perms = all_permutations(4);
    for (const auto& a : perms)
        for (const auto& b : perms)
            for (const auto& c : perms)
                ASSERT_EQ((a * b) * c, a * (b * c));
}

TEST(Permutation, BruhatIsPartialOrderMatchingRankCriterion) {
    for (int n = 1; n <= 5; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& v : perms)
            for (const auto& w : perms) {
                const bool leq = bruhat_leq(v, w);
                ASSERT_EQ(leq, oracle::bruhat_rank(v.one_line(), w.one_line()));
                ASSERT_EQ(leq, bruhat_leq_tableau(v, w));
                if (leq && bruhat_leq(w, v))
                    ASSERT_EQ(v, w);
            }
    }
    const auto perms = all_permutations(4);
    for (const auto& a : perms) {
        EXPECT_TRUE(bruhat_leq(a, a));
        for (const auto& b : perms)
            for (const auto& c : perms)
                if (bruhat_leq(a, b) && bruhat_leq(b, c))
                    ASSERT_TRUE(bruhat_leq(a, c));
    }
}

TEST(Permutation, CoversAndStrongExchangeOnS4) {
    const auto perms = all_permutations(4);
    for (const auto& w : perms) {
        std::set<Permutation> expected;
        for (const auto& v : perms)
            if (bruhat_leq(v, w) && length(v) + 1 == length(w))
                expected.insert(v);
        std::set<Permutation> got;
        for (const Cover& c : lower_covers(w)) {
            got.insert(c.lower);
            EXPECT_EQ(w * Permutation::transposition(4, c.reflection), c.lower);
            EXPECT_TRUE(covers(w, c.lower));
        }
        EXPECT_EQ(got, expected);
        for (const auto& v : expected)
            for (const SimpleWord& word : all_reduced_words(w)) {
                int deletable = 0;
                for (std::size_t k = 0; k < word.size(); ++k) {
                    SimpleWord shorter = word;
                    shorter.erase(shorter.begin() + static_cast<long>(k));
                    deletable += from_word(shorter, 4) == v;
                }
                EXPECT_EQ(deletable, 1);
            }
    }
}

TEST(Permutation, ReducedSubwordsMatchBruteForce) {
    const auto perms = all_permutations(4);
    for (const auto& w : perms)
        for (const auto& u : perms) {
            bool some = false;
            for (const SimpleWord& word : all_reduced_words(w)) {
                const auto got = reduced_subwords(word, u);
                const std::set<std::vector<std::size_t>> as_set(got.begin(), got.end());
                ASSERT_EQ(as_set.size(), got.size());
                ASSERT_EQ(as_set, oracle::brute_reduced_subwords(word, u.one_line()));
                some = some || !got.empty();
            }
            EXPECT_EQ(some, bruhat_leq(u, w));
        }
}

TEST(Permutation, WindowEmbedding) {
    const Permutation s1 = Permutation::simple(2, 1);
    const Permutation big = from_word({1, 3}, 4);
    EXPECT_EQ((s1 * big).size(), 4);
    EXPECT_TRUE(s1.same_as(Permutation::simple(4, 1)));
    EXPECT_TRUE(bruhat_leq(s1, big));
}

TEST(Permutation, TextRoundTrip) {
    for (const auto& w : all_permutations(4)) {
        EXPECT_EQ(parse_one_line(to_one_line_string(w)), w);
        const SimpleWord word = canonical_reduced_word(w);
        EXPECT_EQ(parse_word(to_word_string(word)), word);
    }
    EXPECT_THROW(parse_word("2,,1"), ParseError);
    EXPECT_THROW(parse_one_line("3a12"), ParseError);
    try {
        parse_one_line("31x2");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
    EXPECT_THROW(Transposition(3, 3), std::invalid_argument);
}
