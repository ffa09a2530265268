#ifndef SKEWDD_SKEW_HPP
#define SKEWDD_SKEW_HPP

// Skew elements x_{w/v} of the Fomin-Kirillov algebra, four ways:
//
//   signed      v^{-1} sum_J phi_J over the canonical reduced word of w, with the
//               transpositions collected to the left (x_ij u = u x_{u^{-1}(i) u^{-1}(j)});
//   pairing     Delta_{x_{v^{-1}}}(x_w);
//   explicit    sum over reduced subwords J for w0 w inside a reduced word of w0 v of
//               prod_{k not in J} y_k, y_k = w_{k+1}^{-1}(x_{i_k, i_k + 1});
//   recurrence  x_{w/v} = x_ab x_{w/v'} (+ x_{w'/v'} when w < w'), v' = s_i v, w' = s_i w.
//
// The last two are positive. Everything acts on polynomials through
// x_ij -> d_ij, which gives structure constants of Schubert polynomials.

#include "common.hpp"
#include "fk_algebra.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace skewdd {

enum class SkewMethod { signed_sum, pairing, explicit_sum, recurrence };

inline std::string to_string(SkewMethod m) {
    switch (m) {
    case SkewMethod::signed_sum:
        return "signed";
    case SkewMethod::pairing:
        return "pairing";
    case SkewMethod::explicit_sum:
        return "explicit";
    case SkewMethod::recurrence:
        return "recurrence";
    }
    return "?";
}

inline SkewMethod parse_skew_method(const std::string& s) {
    if (s == "signed")
        return SkewMethod::signed_sum;
    if (s == "pairing")
        return SkewMethod::pairing;
    if (s == "explicit")
        return SkewMethod::explicit_sum;
    if (s == "recurrence")
        return SkewMethod::recurrence;
    throw std::invalid_argument("unknown skew method '" + s + "'");
}

/// Signed expansion along a given reduced word of w.
inline FKElement skew_signed(const SimpleWord& w_word, const Permutation& v, int n) {
    FKElement out;
    for (const auto& positions : reduced_subwords(w_word, v.embedded(n))) {
        FKWord word;
        int sign = 1;
        Permutation h_inv(n); // inverse of the J-transpositions to the right
        std::size_t next = positions.size();
        for (std::size_t k = w_word.size(); k-- > 0;) {
            const int a = w_word[k];
            if (next > 0 && positions[next - 1] == k + 1) {
                --next;
                h_inv = h_inv * Permutation::simple(n, a);
                continue;
            }
            const SignedGenerator g = gen(h_inv(a), h_inv(a + 1));
            word.push_back(g.letter);
            sign *= g.sign;
        }
        out.add_term(reverse_word(word), sign);
    }
    return out;
}

inline FKElement skew_signed(const Permutation& w, const Permutation& v) {
    const int n = std::max(w.size(), v.size());
    return skew_signed(canonical_reduced_word(w.embedded(n)), v, n);
}

inline FKElement skew_pairing(const Permutation& w, const Permutation& v) {
    return delta_op(nilcoxeter_word(inverse(v)), x_perm(w));
}

/// y_1 ... y_l for a reduced word i_1 ... i_l: y_k = (s_{i_{k+1}} ... s_{i_l})^{-1}(x_{i_k, i_k + 1}).
inline FKWord sbar_letters(const SimpleWord& word, int n) {
    FKWord ys(word.size());
    Permutation suffix_inv(n);
    for (std::size_t k = word.size(); k-- > 0;) {
        const int a = word[k];
        const SignedGenerator y = gen(suffix_inv(a), suffix_inv(a + 1));
        if (y.sign < 0)
            throw std::logic_error("word is not reduced");
        ys[k] = y.letter;
        suffix_inv = suffix_inv * Permutation::simple(n, a);
    }
    return ys;
}

/// Positive expansion along a chosen reduced word of w0 v.
inline FKElement skew_explicit(const Permutation& w, const SimpleWord& w0v_word, int n) {
    const Permutation w0 = longest_element(n);
    const FKWord ys = sbar_letters(w0v_word, n);
    FKElement out;
    for (const auto& positions : reduced_subwords(w0v_word, w0 * w.embedded(n))) {
        FKWord word;
        std::size_t next = 0;
        for (std::size_t k = 0; k < ys.size(); ++k) {
            if (next < positions.size() && positions[next] == k + 1) {
                ++next;
                continue;
            }
            word.push_back(ys[k]);
        }
        out.add_term(word, 1);
    }
    return out;
}

/// Uses the lexicographically largest reduced word of w0 v; this choice matches the
/// recurrence below term for term.
inline FKElement skew_explicit(const Permutation& w, const Permutation& v) {
    const int n = std::max({w.size(), v.size(), 1});
    return skew_explicit(w, last_reduced_word(longest_element(n) * v.embedded(n)), n);
}

namespace detail {

class SkewRecurrence {
public:
    explicit SkewRecurrence(int n) : n_(n) {}

    FKElement operator()(const Permutation& w, const Permutation& v) {
        const auto key = std::make_pair(w, v);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        FKElement out = compute(w, v);
        memo_.emplace(key, out);
        return out;
    }

private:
    FKElement compute(const Permutation& w, const Permutation& v) {
        const int lw = length(w);
        const int lv = length(v);
        if (lv >= lw)
            return v == w ? FKElement::one() : FKElement{};
        if (!bruhat_leq(v, w))
            return {};
        const Permutation vinv = inverse(v);
        int i = 1;
        while (vinv(i) > vinv(i + 1))
            ++i;
        const int a = vinv(i);
        const int b = vinv(i + 1);
        const Permutation si = Permutation::simple(n_, i);
        const Permutation v_next = si * v;
        const Permutation w_next = si * w;
        FKElement out = FKElement::word({Generator{a, b}}) * (*this)(w, v_next);
        if (length(w_next) == lw + 1)
            out += (*this)(w_next, v_next);
        return out;
    }

    int n_;
    std::map<std::pair<Permutation, Permutation>, FKElement> memo_;
};

} // namespace detail

/// Positive recurrence, always splitting off the smallest i with v^{-1}(i) < v^{-1}(i+1).
inline FKElement skew_recurrence(const Permutation& w, const Permutation& v) {
    const int n = std::max({w.size(), v.size(), 1});
    return detail::SkewRecurrence(n)(w.embedded(n), v.embedded(n));
}

inline FKElement skew(const Permutation& w, const Permutation& v, SkewMethod method) {
    switch (method) {
    case SkewMethod::signed_sum:
        return skew_signed(w, v);
    case SkewMethod::pairing:
        return skew_pairing(w, v);
    case SkewMethod::explicit_sum:
        return skew_explicit(w, v);
    case SkewMethod::recurrence:
        return skew_recurrence(w, v);
    }
    throw std::invalid_argument("unknown skew method");
}

/// sum_v' <x_{v^{-1}}, L> R over the terms L (x) R of Delta(x_w): the v-component of the coproduct.
inline FKElement coproduct_component(const Permutation& w, const Permutation& v) {
    const Permutation vinv = inverse(v);
    FKElement out;
    const FKTensor cop = coproduct(x_perm(w));
    for (const auto& [k, c] : cop.terms()) {
        if (pairing_bruhat(vinv, k.first) == 1)
            out.add_term(k.second, c);
    }
    return out;
}

/// x_{i1 j1} ... x_{ik jk} acts as d_{i1 j1} o ... o d_{ik jk}.
inline Polynomial represent(const FKElement& a, const Polynomial& p) {
    Polynomial out;
    for (const auto& [word, c] : a.terms()) {
        Polynomial term = p;
        for (auto it = word.rbegin(); it != word.rend() && !term.is_zero(); ++it)
            term = divided_difference(it->i, it->j, term);
        out += term * c;
    }
    return out;
}

namespace detail {

inline int common_window(const Permutation& u, const Permutation& v, const Permutation& w) {
    if (length(u) + length(v) != length(w))
        throw std::domain_error("structure constant needs l(u) + l(v) = l(w)");
    return std::max({u.size(), v.size(), w.size(), 1});
}

} // namespace detail

/// c_{uv}^w = x_{w/v} applied to S_u, using the positive explicit expansion.
inline Integer structure_constant(const Permutation& u, const Permutation& v, const Permutation& w) {
    const int n = detail::common_window(u, v, w);
    const Polynomial value = represent(skew_explicit(w.embedded(n), v.embedded(n)), schubert(u.embedded(n)));
    if (value.degree() > 0)
        throw std::logic_error("skew operator on a Schubert polynomial left a non-constant result");
    return constant_term(value);
}

/// Constant term of d_w(S_u S_v).
inline Integer structure_constant_oracle(const Permutation& u, const Permutation& v, const Permutation& w) {
    const int n = detail::common_window(u, v, w);
    return constant_term(del_word(w.embedded(n), schubert(u.embedded(n)) * schubert(v.embedded(n))));
}

} // namespace skewdd

#endif // SKEWDD_SKEW_HPP
