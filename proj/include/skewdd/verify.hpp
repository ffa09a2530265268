#ifndef SKEWDD_VERIFY_HPP
#define SKEWDD_VERIFY_HPP

// Property suites behind `skewdd verify`. Each suite is deterministic for a
// given seed and reports one line per property.

#include "fk_algebra.hpp"
#include "fk_canonical.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "skew.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace skewdd {

struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

struct Report {
    std::string suite;
    std::vector<PropertyResult> properties;
    std::vector<std::string> notes;

    bool passed() const {
        for (const auto& p : properties)
            if (!p.passed())
                return false;
        return true;
    }

    PropertyResult& property(const std::string& name) {
        for (auto& p : properties)
            if (p.name == name)
                return p;
        properties.push_back({name});
        return properties.back();
    }

    void check(const std::string& name, bool ok, const std::function<std::string()>& describe = {}) {
        PropertyResult& p = property(name);
        ++p.checked;
        if (!ok) {
            if (p.failures == 0 && describe)
                p.first_failure = describe();
            ++p.failures;
        }
    }
};

inline void print_report(std::ostream& out, const Report& r) {
    for (const auto& note : r.notes)
        out << r.suite << ": " << note << '\n';
    for (const auto& p : r.properties) {
        out << (p.passed() ? "PASS " : "FAIL ") << r.suite << '.' << p.name << " checked=" << p.checked
            << " failures=" << p.failures;
        if (!p.first_failure.empty())
            out << " first: " << p.first_failure;
        out << '\n';
    }
}

struct VerifyOptions {
    int n = 4;
    int max_degree = 4;
    int samples = 100;
    unsigned long long seed = 42;
};

// ---------------------------------------------------------------------------

inline Report verify_leibniz(const VerifyOptions& opt) {
    Report r{"leibniz"};
    const int n = opt.n;
    Rng rng(opt.seed);
    const std::vector<Permutation> perms = all_permutations(n);

    for (int s = 0; s < opt.samples; ++s) {
        const Polynomial p = random_polynomial(rng, n, opt.max_degree);
        const Polynomial q = random_polynomial(rng, n, opt.max_degree);
        const int i = uniform(rng, 1, n);
        int j = uniform(rng, 1, n - 1);
        j += j >= i;

        r.check("antisymmetry", divided_difference(i, j, p) == -divided_difference(j, i, p));
        r.check("square_zero", divided_difference(i, j, divided_difference(i, j, p)).is_zero());
        r.check("twisted_leibniz", divided_difference(i, j, p * q) ==
                                       divided_difference(i, j, p) * q + swap_variables(i, j, p) * divided_difference(i, j, q));
        const Permutation w = random_permutation(rng, n);
        const Permutation winv = inverse(w);
        r.check("conjugation", divided_difference(i, j, act(w, p)) == act(w, divided_difference(winv(i), winv(j), p)));
        if (n >= 3) {
            std::vector<int> pts(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k)
                pts[static_cast<std::size_t>(k)] = k + 1;
            std::shuffle(pts.begin(), pts.end(), rng);
            const int a = pts[0], b = pts[1], c = pts[2];
            auto dd = [](int x, int y, const Polynomial& f) { return divided_difference(x, y, f); };
            r.check("three_term", (dd(a, b, dd(b, c, p)) + dd(b, c, dd(c, a, p)) + dd(c, a, dd(a, b, p))).is_zero());
            const Polynomial braid = dd(a, b, dd(b, c, dd(a, b, p)));
            r.check("braid_yang_baxter", braid == dd(b, c, dd(a, b, dd(b, c, p))) &&
                                             braid == dd(a, b, dd(a, c, dd(b, c, p))) &&
                                             braid == dd(b, c, dd(a, c, dd(a, b, p))));
            if (n >= 4) {
                const int d = pts[3];
                r.check("disjoint_commute", dd(a, b, dd(c, d, p)) == dd(c, d, dd(a, b, p)));
            }
        }

        for (const Permutation& x : perms) {
            const Polynomial lhs = del_word(x, p * q);
            Polynomial rhs;
            for (const Permutation& v : perms) {
                if (!bruhat_leq(v, x))
                    continue;
                rhs += act(v, skew_direct_apply(x, v, p)) * del_word(v, q);
            }
            r.check("skew_leibniz", lhs == rhs, [&] { return "w=" + to_one_line_string(x) + " P=" + to_string(p); });
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

inline Report verify_hopf(const VerifyOptions& opt) {
    Report r{"hopf"};
    const int n = opt.n;
    Rng rng(opt.seed);
    auto word_of = [&](int max_len) { return random_nonzero_word(rng, n, uniform(rng, 0, max_len)); };
    const int dmax = opt.max_degree;

    for (int s = 0; s < opt.samples; ++s) {
        const FKWord pw = word_of(dmax);
        const FKWord qw = random_nonzero_word(rng, n, uniform(rng, 0, std::max(0, dmax - static_cast<int>(pw.size()))));
        const FKElement p = FKElement::word(pw);
        const FKElement q = FKElement::word(qw);
        auto show = [&] { return "P=" + to_string(pw) + " Q=" + to_string(qw); };

        r.check("sbar_involution", sbar(sbar(p)) == p, show);
        r.check("sbar_definition", sbar(p) == sbar_by_definition(p), show);
        const Permutation sq_inv = inverse(sn_degree(qw, n));
        r.check("sbar_product", sbar(p * q) == act(sq_inv, sbar(p)) * sbar(q), show);
        const auto sbar_fn = [](const FKElement& e) { return sbar(e); };
        r.check("sbar_coproduct", coproduct(sbar(p)) == swap_factors(map_factors(coproduct(p), sbar_fn, sbar_fn)), show);

        const Generator g = random_word(rng, n, 1)[0];
        const bool flip = uniform(rng, 0, 1) == 1;
        const int a = flip ? g.j : g.i;
        const int b = flip ? g.i : g.j;
        r.check("sbar_delta_nabla", delta_generator(a, b, sbar(p)) == sbar(nabla_generator(p, a, b)), show);

        // Same-degree partner for the pairing checks.
        const FKElement q2 = FKElement::word(random_nonzero_word(rng, n, static_cast<int>(pw.size())));
        r.check("sbar_adjoint", pairing(q2, sbar(p)) == pairing(p, reverse(q2)), show);
        r.check("pairing_symmetric", pairing(p, q2) == pairing(q2, p), show);
        const FKWord q2w = q2.terms().begin()->first;
        if (sn_degree(pw, n) != inverse(sn_degree(q2w, n)))
            r.check("pairing_vanishing", pairing(p, q2) == 0, show);
        r.check("pairing_vanishing", pairing(p, q) == 0 || (pw.size() == qw.size() && sn_degree(pw, n) == inverse(sn_degree(qw, n))), show);

        const FKWord big = random_nonzero_word(rng, n, uniform(rng, 0, dmax));
        const FKWord p1 = random_nonzero_word(rng, n, uniform(rng, 0, std::min<int>(2, static_cast<int>(big.size()))));
        const FKWord p2 = random_nonzero_word(rng, n, uniform(rng, 0, std::min<int>(2, static_cast<int>(big.size()))));
        const FKElement bigx = FKElement::word(big);
        r.check("delta_nabla_commute", delta_op(p1, nabla_op(bigx, p2)) == nabla_op(delta_op(p1, bigx), p2),
                [&] { return "Q=" + to_string(big) + " P1=" + to_string(p1) + " P2=" + to_string(p2); });

        bool subwords = true;
        const FKTensor cop = coproduct(p);
        for (const auto& [k, c] : cop.terms()) {
            std::size_t at = 0;
            for (const Generator& letter : k.first) {
                while (at < pw.size() && pw[at] != letter)
                    ++at;
                if (at == pw.size()) {
                    subwords = false;
                    break;
                }
                ++at;
            }
        }
        r.check("coproduct_first_factor_subword", subwords, show);
    }

    // Bruhat side: exhaustive on S_n for n <= 4, sampled for larger n.
    std::vector<Permutation> perms;
    if (n <= 4) {
        perms = all_permutations(n);
    } else {
        for (int s = 0; s < opt.samples; ++s)
            perms.push_back(random_permutation(rng, n));
    }
    for (const Permutation& w : perms) {
        const FKElement xw = x_perm(w);
        const FKWord sb = sbar(xw).terms().empty() ? FKWord{} : sbar(xw).terms().begin()->first;
        std::set<Generator> letters(sb.begin(), sb.end());
        std::set<Generator> inversions;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (w(i) > w(j))
                    inversions.insert({i, j});
        r.check("sbar_xw_inversion_set", sbar(xw).size() == 1 && sbar(xw).is_positive() && letters == inversions &&
                                             sb.size() == inversions.size(),
                [&] { return "w=" + to_one_line_string(w); });
        if (n > 4 || n > canon_limits().max_n)
            continue;
        // These identities hold in FK_n; the free model may leave words that vanish there.
        for (const Generator& t : generators(n)) {
            const FKElement out = nabla_generator(xw, t.i, t.j);
            const Permutation v = w * Permutation::transposition(n, {t.i, t.j});
            const bool cover = length(v) + 1 == length(w);
            const bool ok = fk_equal(n, out, cover ? x_perm(v) : FKElement{});
            r.check("nabla_covers", ok, [&] { return "w=" + to_one_line_string(w) + " t=" + to_string(FKWord{t}); });
        }
        for (const Permutation& v : all_permutations(n)) {
            const FKElement out = nabla_op(xw, nilcoxeter_word(v));
            const Permutation vp = w * v;
            const bool reduced = length(vp) + length(v) == length(w);
            const bool ok = fk_equal(n, out, reduced ? x_perm(vp) : FKElement{});
            r.check("nabla_reduced_factorization", ok, [&] { return "w=" + to_one_line_string(w); });
        }
        // All positive words over inversion-free letters of length l(w).
        for (const FKWord& pw : all_words(n, length(w))) {
            if (has_adjacent_repeat(pw))
                continue;
            r.check("pairing_saturated_chain", pairing(xw, FKElement::word(pw)) == pairing_bruhat(w, pw),
                    [&] { return "w=" + to_one_line_string(w) + " P=" + to_string(pw); });
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

inline Report verify_positivity(const VerifyOptions& opt) {
    Report r{"positivity"};
    const int n = opt.n;
    std::vector<std::pair<Permutation, Permutation>> pairs;
    if (n <= 5) {
        const auto perms = all_permutations(n);
        for (const auto& w : perms)
            for (const auto& v : perms)
                if (bruhat_leq(v, w))
                    pairs.emplace_back(w, v);
    } else {
        Rng rng(opt.seed);
        while (static_cast<int>(pairs.size()) < opt.samples) {
            const Permutation w = random_permutation(rng, n);
            const Permutation v = random_permutation(rng, n);
            if (bruhat_leq(v, w))
                pairs.emplace_back(w, v);
        }
    }
    for (const auto& [w, v] : pairs) {
        auto show = [&, w = w, v = v] { return "w=" + to_one_line_string(w) + " v=" + to_one_line_string(v); };
        const FKElement ex = skew_explicit(w, v);
        const FKElement rec = skew_recurrence(w, v);
        const Permutation expected_degree = inverse(v) * w;
        const int expected_length = length(w) - length(v);
        r.check("explicit_positive", ex.is_positive() && !ex.is_zero(), show);
        r.check("recurrence_positive", rec.is_positive() && !rec.is_zero(), show);
        bool graded = true;
        bool no_repeat = true;
        for (const auto& [word, c] : ex.terms()) {
            graded = graded && static_cast<int>(word.size()) == expected_length &&
                     sn_degree(word, n).same_as(expected_degree);
            std::set<Generator> letters(word.begin(), word.end());
            no_repeat = no_repeat && letters.size() == word.size();
        }
        for (const auto& [word, c] : rec.terms())
            graded = graded && static_cast<int>(word.size()) == expected_length &&
                     sn_degree(word, n).same_as(expected_degree);
        r.check("degree_and_sn_degree", graded, show);
        r.check("explicit_no_repeated_letter", no_repeat, show);
        r.check("explicit_matches_recurrence", ex == rec, show);
    }
    r.notes.push_back("pairs v <= w checked: " + std::to_string(pairs.size()));
    return r;
}

// ---------------------------------------------------------------------------

inline Report verify_agreement(const VerifyOptions& opt) {
    Report r{"agreement"};
    const int n = opt.n;
    Rng rng(opt.seed);
    if (n <= canon_limits().max_n && n * (n - 1) / 2 <= canon_limits().max_degree) {
        const auto perms = all_permutations(n);
        std::size_t pairs = 0;
        for (const auto& w : perms) {
            for (const auto& v : perms) {
                auto show = [&] { return "w=" + to_one_line_string(w) + " v=" + to_one_line_string(v); };
                const FKElement sg = skew_signed(w, v);
                const FKElement pr = skew_pairing(w, v);
                const FKElement ex = skew_explicit(w, v);
                const FKElement rc = skew_recurrence(w, v);
                if (!bruhat_leq(v, w)) {
                    r.check("zero_outside_interval", sg.is_zero() && pr.is_zero() && ex.is_zero() && rc.is_zero(), show);
                    continue;
                }
                ++pairs;
                r.check("signed_eq_pairing", fk_equal(n, sg, pr), show);
                r.check("signed_eq_explicit", fk_equal(n, sg, ex), show);
                r.check("explicit_eq_recurrence", fk_equal(n, ex, rc), show);
                r.check("coproduct_component", fk_equal(n, coproduct_component(w, v), ex), show);
            }
        }
        r.notes.push_back("pairs v <= w compared in FK_" + std::to_string(n) + ": " + std::to_string(pairs));
        for (const auto& u : perms) {
            for (const auto& v : perms) {
                for (const auto& w : perms) {
                    if (length(u) + length(v) != length(w))
                        continue;
                    const Integer c = structure_constant(u, v, w);
                    r.check("structure_constant_oracle", c == structure_constant_oracle(u, v, w) && c >= 0, [&] {
                        return "u=" + to_one_line_string(u) + " v=" + to_one_line_string(v) + " w=" + to_one_line_string(w);
                    });
                }
            }
        }
    } else {
        r.notes.push_back("n beyond canonical-form limits: comparing through the polynomial representation");
    }
    // Representation-level agreement on random pairs and polynomials.
    for (int s = 0; s < opt.samples; ++s) {
        const Permutation w = random_permutation(rng, n);
        Permutation v = random_permutation(rng, n);
        if (!bruhat_leq(v, w))
            v = Permutation(n);
        const Polynomial p = random_polynomial(rng, n, std::min(opt.max_degree + length(w) - length(v), 8));
        const Polynomial direct = skew_direct_apply(w, v, p);
        auto show = [&] { return "w=" + to_one_line_string(w) + " v=" + to_one_line_string(v) + " P=" + to_string(p); };
        r.check("represent_signed", represent(skew_signed(w, v), p) == direct, show);
        r.check("represent_pairing", represent(skew_pairing(w, v), p) == direct, show);
        r.check("represent_explicit", represent(skew_explicit(w, v), p) == direct, show);
        r.check("represent_recurrence", represent(skew_recurrence(w, v), p) == direct, show);
    }
    return r;
}

// ---------------------------------------------------------------------------

inline Report verify_canon(const VerifyOptions& opt) {
    Report r{"canon"};
    const int n = opt.n;
    Rng rng(opt.seed);
    const int top = std::min(canon_limits().max_degree, n * (n - 1));
    std::size_t total = 0;
    for (int d = 0; d <= top; ++d) {
        const std::size_t dim = graded_dimension(n, d);
        total += dim;
        r.notes.push_back("dim(" + std::to_string(n) + "," + std::to_string(d) + ")=" + std::to_string(dim));
    }
    r.notes.push_back("sum of dims through degree " + std::to_string(top) + " = " + std::to_string(total));

    const int max_d = std::min(top, std::max(2, opt.max_degree));
    for (int s = 0; s < opt.samples; ++s) {
        const int d = uniform(rng, 2, std::max(2, max_d));
        const FKElement ideal = random_ideal_element(rng, n, d);
        r.check("ideal_elements_vanish", canonical_form(n, ideal).is_zero(), [&] { return to_string(ideal); });
        const FKElement a = random_element(rng, n, d);
        const FKElement ca = canonical_form(n, a);
        r.check("idempotent", canonical_form(n, ca) == ca, [&] { return to_string(a); });
        r.check("differs_by_ideal", fk_equal(n, a, ca), [&] { return to_string(a); });
        const Permutation w = random_permutation(rng, n);
        const FKElement b = random_element(rng, n, d);
        r.check("sn_action_invariant", fk_equal(n, act(w, a), act(w, b)) == fk_equal(n, a, b));
        r.check("sn_action_on_ideal", canonical_form(n, act(w, ideal)).is_zero());
    }

    if (n >= 2 && n * (n - 1) / 2 <= canon_limits().max_degree) {
        const Permutation w0 = longest_element(n);
        FKWord ordered;
        for (const Transposition& t : reflection_ordering(n))
            ordered.push_back({t.i, t.j});
        r.check("x_w0_reflection_ordering", fk_equal(n, x_perm(w0), FKElement::word(ordered)));
        const auto words = all_reduced_words(w0);
        for (int s = 0; s < std::min(opt.samples, 50); ++s) {
            const SimpleWord& word = words[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(words.size()) - 1))];
            FKWord induced;
            for (const Transposition& t : reflection_ordering_from_word(word, n))
                induced.push_back({t.i, t.j});
            r.check("x_w0_induced_orderings", fk_equal(n, x_perm(w0), FKElement::word(induced)),
                    [&] { return to_word_string(word); });
        }
        for (const Permutation& w : all_permutations(n)) {
            const FKElement xw = x_perm(w);
            for (const SimpleWord& word : all_reduced_words(w))
                r.check("x_w_reduced_word_independent", fk_equal(n, xw, FKElement::word(nilcoxeter_word(word))));
        }
    }
    return r;
}

inline std::vector<Report> run_suite(const std::string& suite, const VerifyOptions& opt) {
    static const std::map<std::string, std::function<Report(const VerifyOptions&)>> suites = {
        {"leibniz", verify_leibniz}, {"hopf", verify_hopf},   {"positivity", verify_positivity},
        {"agreement", verify_agreement}, {"canon", verify_canon},
    };
    if (suite == "all") {
        std::vector<Report> out;
        for (const auto& [name, fn] : suites)
            out.push_back(fn(opt));
        return out;
    }
    auto it = suites.find(suite);
    if (it == suites.end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    return {it->second(opt)};
}

} // namespace skewdd

#endif // SKEWDD_VERIFY_HPP
