#ifndef SKEWDD_TESTS_ORACLES_HPP
#define SKEWDD_TESTS_ORACLES_HPP

// Brute-force reference computations used by the tests. They avoid the library
// algorithms they are compared against.

#include <skewdd/fk_algebra.hpp>
#include <skewdd/permutation.hpp>
#include <skewdd/polynomial.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <set>
#include <vector>

namespace oracle {

using skewdd::FKElement;
using skewdd::FKWord;
using skewdd::Generator;
using skewdd::parse_fk_element;
using skewdd::Integer;
using skewdd::Permutation;
using skewdd::Polynomial;
using skewdd::Rational;
using skewdd::SimpleWord;

/// One-line images of s_{a1} o ... o s_{al}: apply letters right to left to each point.
inline std::vector<int> word_product(const SimpleWord& word, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int x = i;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (x == *it)
                x = *it + 1;
            else if (x == *it + 1)
                x = *it;
        }
        images[static_cast<std::size_t>(i - 1)] = x;
    }
    return images;
}

inline int inversions(const std::vector<int>& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            count += w[i] > w[j];
    return count;
}

/// Every word of the given length over 1..n-1.
inline std::vector<SimpleWord> all_simple_words(int n, int len) {
    std::vector<SimpleWord> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<SimpleWord> next;
        for (const auto& w : out)
            for (int a = 1; a < n; ++a) {
                SimpleWord e = w;
                e.push_back(a);
                next.push_back(e);
            }
        out = std::move(next);
    }
    return out;
}

/// Reduced words of w by filtering all words of length l(w).
inline std::set<SimpleWord> brute_reduced_words(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::set<SimpleWord> out;
    for (const auto& word : all_simple_words(n, inversions(w)))
        if (word_product(word, n) == w)
            out.insert(word);
    return out;
}

/// Rank-matrix criterion for Bruhat order.
inline bool bruhat_rank(const std::vector<int>& v, const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            int cv = 0, cw = 0;
            for (int a = 0; a < i; ++a) {
                cv += v[static_cast<std::size_t>(a)] >= k;
                cw += w[static_cast<std::size_t>(a)] >= k;
            }
            if (cv > cw)
                return false;
        }
    return true;
}

/// All increasing 1-based position sets whose letters multiply to u with |J| = l(u).
inline std::set<std::vector<std::size_t>> brute_reduced_subwords(const SimpleWord& word, const std::vector<int>& u) {
    const int n = static_cast<int>(u.size());
    const int target = inversions(u);
    std::set<std::vector<std::size_t>> out;
    for (unsigned mask = 0; mask < (1u << word.size()); ++mask) {
        if (__builtin_popcount(mask) != target)
            continue;
        SimpleWord sub;
        std::vector<std::size_t> pos;
        for (std::size_t k = 0; k < word.size(); ++k)
            if (mask & (1u << k)) {
                sub.push_back(word[k]);
                pos.push_back(k + 1);
            }
        if (word_product(sub, n) == u)
            out.insert(pos);
    }
    return out;
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            const Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Permutation of 1..m with the given Lehmer code.
inline std::vector<int> from_code(std::vector<int> code, int m) {
    code.resize(static_cast<std::size_t>(m), 0);
    std::vector<int> avail;
    for (int i = 1; i <= m; ++i)
        avail.push_back(i);
    std::vector<int> out;
    for (int c : code) {
        out.push_back(avail[static_cast<std::size_t>(c)]);
        avail.erase(avail.begin() + c);
    }
    return out;
}

/// Expansion of p in the Schubert basis of S_m by peeling off leading monomials.
/// In reverse lex order (compare exponents from the last variable) S_w leads with x^{code(w)}.
inline std::map<std::vector<int>, Integer> schubert_expansion(Polynomial p, int m) {
    std::map<std::vector<int>, Integer> out;
    while (!p.is_zero()) {
        std::vector<int> lead;
        Integer coeff;
        bool first = true;
        for (const auto& [mono, c] : p.terms()) {
            std::vector<int> e = mono.exponents();
            e.resize(static_cast<std::size_t>(m), 0);
            if (first || std::lexicographical_compare(lead.rbegin(), lead.rend(), e.rbegin(), e.rend())) {
                lead = e;
                coeff = c;
                first = false;
            }
        }
        const std::vector<int> w = from_code(lead, m);
        out[w] += coeff;
        p -= skewdd::schubert(Permutation::from_one_line(w)) * coeff;
    }
    return out;
}

/// The FK_3 relations written out by hand as signed combinations of words.
inline std::vector<FKElement> hand_relations_n3() {
    return {
        parse_fk_element("x(1,2)x(1,2)"), parse_fk_element("x(1,3)x(1,3)"), parse_fk_element("x(2,3)x(2,3)"),
        // x12 x23 + x23 x31 + x31 x12
        parse_fk_element("x(1,2)x(2,3) - x(2,3)x(1,3) - x(1,3)x(1,2)"),
        // x21 x13 + x13 x32 + x32 x21
        parse_fk_element("-x(1,2)x(1,3) - x(1,3)x(2,3) + x(2,3)x(1,2)"),
    };
}

/// Words of length d over the three FK_3 letters, with repeats.
inline std::vector<FKWord> words_n3(int d) {
    const std::vector<Generator> letters = {{1, 2}, {1, 3}, {2, 3}};
    std::vector<FKWord> out{{}};
    for (int k = 0; k < d; ++k) {
        std::vector<FKWord> next;
        for (const auto& w : out)
            for (const auto& g : letters) {
                FKWord e = w;
                e.push_back(g);
                next.push_back(e);
            }
        out = std::move(next);
    }
    return out;
}

/// Coefficient of `word` in u r v, with squares kept (no adjacent-letter cancellation).
inline std::map<FKWord, Integer> raw_product(const FKWord& u, const FKElement& r, const FKWord& v) {
    std::map<FKWord, Integer> out;
    for (const auto& [w, c] : r.terms()) {
        FKWord full = u;
        full.insert(full.end(), w.begin(), w.end());
        full.insert(full.end(), v.begin(), v.end());
        out[full] += c;
    }
    return out;
}

/// Dimension of the degree-d part of FK_3 by dense elimination over all products u r v.
inline std::size_t dense_dimension_n3(int d) {
    const std::vector<FKWord> cols = words_n3(d);
    if (d < 2)
        return cols.size();
    std::map<FKWord, std::size_t> index;
    for (std::size_t k = 0; k < cols.size(); ++k)
        index[cols[k]] = k;
    std::vector<std::vector<Rational>> rows;
    // Squares are stored as x x words: add them explicitly since FKElement drops them.
    const std::vector<Generator> letters = {{1, 2}, {1, 3}, {2, 3}};
    for (int left = 0; left <= d - 2; ++left)
        for (const FKWord& u : words_n3(left))
            for (const FKWord& v : words_n3(d - 2 - left)) {
                for (const Generator& g : letters) {
                    FKWord full = u;
                    full.push_back(g);
                    full.push_back(g);
                    full.insert(full.end(), v.begin(), v.end());
                    std::vector<Rational> row(cols.size(), Rational(0));
                    row[index.at(full)] = 1;
                    rows.push_back(row);
                }
                for (std::size_t r = 3; r < hand_relations_n3().size(); ++r) {
                    std::vector<Rational> row(cols.size(), Rational(0));
                    for (const auto& [w, c] : raw_product(u, hand_relations_n3()[r], v))
                        row[index.at(w)] += Rational(c);
                    rows.push_back(row);
                }
            }
    return cols.size() - oracle::dense_rank(rows);
}

} // namespace oracle

#endif // SKEWDD_TESTS_ORACLES_HPP
