#include "oracles.hpp"

#include <skewdd/fk_canonical.hpp>
#include <skewdd/random.hpp>
#include <skewdd/skew.hpp>
#include <skewdd/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace skewdd;

namespace {

FKElement E(const std::string& s) { return parse_fk_element(s); }

struct Tally {
    long checked = 0;
    long failures = 0;
    std::string first;
    std::ostringstream info;

    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures++ == 0)
            first = what;
    }
};

int failed_criteria = 0;

void criterion(int id, const std::string& title, const std::function<void(Tally&)>& body) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(t);
    } catch (const std::exception& e) {
        t.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = t.failures == 0 && t.checked > 0;
    failed_criteria += !pass;
    std::printf("%s criterion %d: %s (checks=%ld failures=%ld%s time=%.2fs)%s%s\n", pass ? "PASS" : "FAIL", id,
                title.c_str(), t.checked, t.failures, t.info.str().c_str(), secs, t.first.empty() ? "" : " first: ",
                t.first.c_str());
    std::fflush(stdout);
}

std::string pair_name(const Permutation& w, const Permutation& v) {
    return "w=" + to_one_line_string(w) + " v=" + to_one_line_string(v);
}

/// One-line images of a product of transpositions t_1 ... t_k (applied right to left).
std::vector<int> transposition_product(const FKWord& p, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int x = i;
        for (auto it = p.rbegin(); it != p.rend(); ++it)
            x = x == it->i ? it->j : x == it->j ? it->i : x;
        images[static_cast<std::size_t>(i - 1)] = x;
    }
    return images;
}

std::vector<int> inverse_line(const std::vector<int>& w) {
    std::vector<int> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
    return out;
}

/// Brute-force saturated chain test: every suffix product must gain exactly one inversion.
int chain_oracle(const std::vector<int>& w, const FKWord& p) {
    const int n = static_cast<int>(w.size());
    if (static_cast<int>(p.size()) != oracle::inversions(w))
        return 0;
    for (std::size_t k = p.size(); k-- > 0;) {
        const FKWord suffix(p.begin() + static_cast<std::ptrdiff_t>(k), p.end());
        if (oracle::inversions(transposition_product(suffix, n)) != static_cast<int>(suffix.size()))
            return 0;
    }
    return transposition_product(p, n) == inverse_line(w) ? 1 : 0;
}

std::vector<int> compose_lines(const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = u[static_cast<std::size_t>(v[i] - 1)];
    return out;
}

} // namespace

int main() {
    criterion(1, "worked examples", [](Tally& t) {
        t.check(to_string(coproduct(E("x(1,2)x(2,3)"))) ==
                    "1 (x) x(1,2)x(2,3) + x(1,2) (x) x(2,3) + x(1,2)x(2,3) (x) 1 + x(2,3) (x) x(1,3)",
                "coproduct x12x23");
        t.check(delta_op(E("x(2,3)"), E("x(1,2)x(2,3)x(1,2)")) == E("x(1,3)x(1,2)"), "delta_23");
        t.check(nabla_op(E("x(1,2)x(2,3)x(1,2)"), E("x(2,3)")) == E("x(2,3)x(1,2)"), "nabla_23");
        t.check(antipode(E("x(1,2)x(2,3)x(3,4)")) == E("-x(3,4)x(2,4)x(1,4)"), "antipode");
        t.check(sbar(E("x(1,2)x(2,3)x(3,4)")) == E("x(1,4)x(2,4)x(3,4)"), "sbar");
        const Permutation w = from_word({2, 1, 3, 2}, 4);
        const Permutation v = Permutation::simple(4, 2);
        const FKElement sg = skew_signed(w, v);
        const FKElement ex = skew_explicit(w, v);
        const FKElement rc = skew_recurrence(w, v);
        t.check(sg == E("x(1,2)x(3,4)x(2,3) - x(2,3)x(1,3)x(2,4)"), "skew_signed");
        t.check(ex == E("x(1,2)x(2,4)x(3,4) + x(1,3)x(1,2)x(2,4)"), "skew_explicit");
        t.check(rc == ex, "skew_recurrence");
        t.check(fk_equal(4, sg, ex), "fk_equal signed explicit");
    });

    criterion(2, "main theorem on S4", [](Tally& t) {
        const auto perms = all_permutations(4);
        long ordered = 0, comparable = 0;
        for (const auto& w : perms)
            for (const auto& v : perms) {
                ++ordered;
                const FKElement ex = skew_explicit(w, v);
                const FKElement sg = skew_signed(w, v);
                const FKElement pr = skew_pairing(w, v);
                if (!oracle::bruhat_rank(v.one_line(), w.one_line())) {
                    t.check(ex.is_zero() && sg.is_zero() && pr.is_zero(), "nonzero outside interval " + pair_name(w, v));
                    continue;
                }
                ++comparable;
                t.check(!ex.is_zero() && ex.is_positive(), "not positive " + pair_name(w, v));
                t.check(fk_equal(4, ex, sg), "explicit != signed " + pair_name(w, v));
                t.check(fk_equal(4, ex, pr), "explicit != pairing " + pair_name(w, v));
            }
        t.info << " ordered_pairs=" << ordered << " pairs_v_le_w=" << comparable;
        if (comparable != 213)
            t.check(false, "unexpected interval count");
    });

    criterion(3, "Leibniz identity on S4", [](Tally& t) {
        Rng rng(2024);
        const auto perms = all_permutations(4);
        const int samples = 100;
        for (int s = 0; s < samples; ++s) {
            const Polynomial p = random_polynomial(rng, 4, 3);
            const Polynomial q = random_polynomial(rng, 4, 3);
            for (const auto& w : perms) {
                Polynomial rhs;
                for (const auto& v : perms)
                    if (oracle::bruhat_rank(v.one_line(), w.one_line()))
                        rhs += act(v, skew_direct_apply(w, v, p)) * del_word(v, q);
                t.check(del_word(w, p * q) == rhs, "w=" + to_one_line_string(w) + " P=" + to_string(p));
            }
        }
        t.info << " pairs=" << samples;
    });

    criterion(4, "structure constants", [](Tally& t) {
        const auto perms = all_permutations(4);
        long triples = 0;
        for (const auto& u : perms)
            for (const auto& v : perms)
                for (const auto& w : perms) {
                    if (oracle::inversions(u.one_line()) + oracle::inversions(v.one_line()) !=
                        oracle::inversions(w.one_line()))
                        continue;
                    ++triples;
                    const Integer c = structure_constant(u, v, w);
                    t.check(c == structure_constant_oracle(u, v, w) && c >= 0,
                            "u=" + to_one_line_string(u) + " " + pair_name(w, v));
                }
        const auto s3 = all_permutations(3);
        const auto s5 = all_permutations(5);
        for (const auto& u : s3)
            for (const auto& v : s3) {
                const auto expansion = oracle::schubert_expansion(schubert(u) * schubert(v), 5);
                for (const auto& w : s5) {
                    if (length(w) != length(u) + length(v))
                        continue;
                    const auto it = expansion.find(w.one_line());
                    const Integer expected = it == expansion.end() ? Integer(0) : it->second;
                    t.check(structure_constant(u.embedded(5), v.embedded(5), w) == expected,
                            "table u=" + to_one_line_string(u) + " v=" + to_one_line_string(v) +
                                " w=" + to_one_line_string(w));
                }
            }
        t.info << " s4_triples=" << triples;
    });

    criterion(5, "Hopf properties in the free algebra", [](Tally& t) {
        for (int n = 3; n <= 5; ++n) {
            const Report r = verify_hopf(VerifyOptions{n, 6, 200, 42u + static_cast<unsigned>(n)});
            for (const auto& prop : r.properties) {
                if (prop.name.rfind("sbar_", 0) != 0 && prop.name.rfind("pairing_", 0) != 0 &&
                    prop.name.rfind("delta_", 0) != 0 && prop.name.rfind("coproduct_", 0) != 0)
                    continue;
                for (std::size_t k = 0; k < prop.checked; ++k)
                    t.check(k >= prop.failures,
                            "n=" + std::to_string(n) + " " + prop.name + ": " + prop.first_failure);
            }
        }
        t.info << " samples_per_n=200";
    });

    criterion(6, "Bruhat and nabla suite", [](Tally& t) {
        const int n = 4;
        for (const auto& w : all_permutations(n)) {
            const auto wl = w.one_line();
            const int lw = oracle::inversions(wl);
            const FKElement xw = x_perm(w);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    FKWord tw = {{i, j}};
                    const auto vl = compose_lines(wl, transposition_product(tw, n));
                    const bool cover = oracle::inversions(vl) == lw - 1;
                    const FKElement expected = cover ? x_perm(Permutation::from_one_line(vl)) : FKElement{};
                    t.check(fk_equal(n, nabla_op(xw, tw), expected),
                            "cover w=" + to_one_line_string(w) + " t=" + to_string(tw));
                }
            for (const auto& v : all_permutations(n)) {
                const auto vl = v.one_line();
                const auto ul = compose_lines(wl, vl);
                const bool reduced = oracle::inversions(ul) + oracle::inversions(vl) == lw;
                const FKElement expected = reduced ? x_perm(Permutation::from_one_line(ul)) : FKElement{};
                t.check(fk_equal(n, nabla_op(xw, nilcoxeter_word(v)), expected),
                        "factorization w=" + to_one_line_string(w) + " v=" + to_one_line_string(v));
            }
            for (const FKWord& p : all_words(n, lw)) {
                if (has_adjacent_repeat(p))
                    continue;
                const int chain = chain_oracle(wl, p);
                t.check(pairing(xw, FKElement::word(p)) == chain && pairing_bruhat(w, p) == chain,
                        "chain w=" + to_one_line_string(w) + " P=" + to_string(p));
            }
        }
        Rng rng(606);
        std::vector<Permutation> sample = all_permutations(4);
        for (int s = 0; s < 200; ++s)
            sample.push_back(random_permutation(rng, 5));
        for (const auto& w : sample) {
            const auto wl = w.one_line();
            std::set<Generator> inv;
            for (std::size_t i = 0; i < wl.size(); ++i)
                for (std::size_t j = i + 1; j < wl.size(); ++j)
                    if (wl[i] > wl[j])
                        inv.insert({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
            const FKElement sb = sbar(x_perm(w));
            bool ok = sb.size() == 1 && sb.is_positive();
            if (ok) {
                const FKWord word = sb.terms().begin()->first;
                ok = std::set<Generator>(word.begin(), word.end()) == inv && word.size() == inv.size();
            }
            t.check(ok, "inversion set w=" + to_one_line_string(w));
        }
    });

    criterion(7, "longest element from reflection orderings", [](Tally& t) {
        for (int n = 3; n <= 4; ++n) {
            FKWord ordered;
            for (const Transposition& r : reflection_ordering(n))
                ordered.push_back({r.i, r.j});
            t.check(fk_equal(n, x_perm(longest_element(n)), FKElement::word(ordered)), "fixed n=" + std::to_string(n));
        }
        Rng rng(707);
        const auto words = all_reduced_words(longest_element(4));
        for (int s = 0; s < 50; ++s) {
            const SimpleWord& word = words[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(words.size()) - 1))];
            FKWord ordered;
            for (const Transposition& r : reflection_ordering_from_word(word, 4))
                ordered.push_back({r.i, r.j});
            t.check(ordered.size() == 6 && std::set<Generator>(ordered.begin(), ordered.end()).size() == 6 &&
                        fk_equal(4, x_perm(longest_element(4)), FKElement::word(ordered)),
                    "induced " + to_word_string(word));
        }
        t.info << " induced=50";
    });

    criterion(8, "fkcanon sanity", [](Tally& t) {
        const std::vector<std::size_t> expected = {1, 3, 4, 3, 1};
        for (int d = 0; d <= 4; ++d) {
            const std::size_t dim = graded_dimension(3, d);
            t.check(dim == expected[static_cast<std::size_t>(d)] && dim == oracle::dense_dimension_n3(d),
                    "dim(3," + std::to_string(d) + ")=" + std::to_string(dim));
        }
        Rng rng(808);
        for (int s = 0; s < 1000; ++s) {
            const int n = uniform(rng, 2, 4);
            const FKElement a = random_ideal_element(rng, n, uniform(rng, 2, n == 4 ? 6 : 5));
            t.check(canonical_form(n, a).is_zero(), "ideal element " + to_string(a));
        }
        t.info << " ideal_elements=1000";
    });

    return failed_criteria == 0 ? 0 : 1;
}
