#ifndef SKEWDD_POLYNOMIAL_HPP
#define SKEWDD_POLYNOMIAL_HPP

// Sparse integer polynomials in x_1, x_2, ... with the left S_n action
// (wP)(x_1, ..., x_n) = P(x_{w(1)}, ..., x_{w(n)}), divided differences,
// Schubert polynomials and the direct skew divided difference action.

#include "common.hpp"
#include "permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skewdd {

/// Exponent vector; trailing zeros are stripped so x1 in any window compares equal.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
        for (int e : exponents_)
            if (e < 0)
                throw std::invalid_argument("negative exponent");
        trim();
    }

    static Monomial variable(int i, int power = 1) {
        std::vector<int> e(static_cast<std::size_t>(i), 0);
        e[static_cast<std::size_t>(i - 1)] = power;
        return Monomial(std::move(e));
    }

    /// Exponent of x_i (1-based).
    int exponent(int i) const {
        return i >= 1 && static_cast<std::size_t>(i) <= exponents_.size() ? exponents_[static_cast<std::size_t>(i - 1)] : 0;
    }

    int num_variables() const { return static_cast<int>(exponents_.size()); }

    int degree() const {
        int d = 0;
        for (int e : exponents_)
            d += e;
        return d;
    }

    bool is_one() const { return exponents_.empty(); }

    const std::vector<int>& exponents() const { return exponents_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        std::vector<int> e(std::max(a.exponents_.size(), b.exponents_.size()), 0);
        for (std::size_t k = 0; k < e.size(); ++k)
            e[k] = (k < a.exponents_.size() ? a.exponents_[k] : 0) + (k < b.exponents_.size() ? b.exponents_[k] : 0);
        return Monomial(std::move(e));
    }

    /// Same monomial with exponent of x_i replaced.
    Monomial with_exponent(int i, int power) const {
        std::vector<int> e = exponents_;
        if (e.size() < static_cast<std::size_t>(i))
            e.resize(static_cast<std::size_t>(i), 0);
        e[static_cast<std::size_t>(i - 1)] = power;
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    void trim() {
        while (!exponents_.empty() && exponents_.back() == 0)
            exponents_.pop_back();
    }

    std::vector<int> exponents_;
};

/// Graded lexicographic order, largest first.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree())
            return a.degree() > b.degree();
        const int n = std::max(a.num_variables(), b.num_variables());
        for (int i = 1; i <= n; ++i)
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) > b.exponent(i);
        return false;
    }
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Integer, GrlexDescending>;

    Polynomial() = default;
    Polynomial(long long constant) { add_term(Monomial{}, Integer(constant)); }
    Polynomial(const Integer& constant) { add_term(Monomial{}, constant); }

    static Polynomial variable(int i) {
        Polynomial p;
        p.add_term(Monomial::variable(i), 1);
        return p;
    }

    static Polynomial monomial(const Monomial& m, const Integer& coeff = 1) {
        Polynomial p;
        p.add_term(m, coeff);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Largest variable index that occurs.
    int num_variables() const {
        int n = 0;
        for (const auto& [m, c] : terms_)
            n = std::max(n, m.num_variables());
        return n;
    }

    /// Degree of the top term; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Monomial& m, const Integer& coeff) {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& other) {
        for (const auto& [m, c] : other.terms_)
            add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        for (const auto& [m, c] : other.terms_)
            add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Integer& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= scalar;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Integer(-1); }
    friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
    friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

enum class PolyOp { add, mul };

inline Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op) {
    return op == PolyOp::add ? p + q : p * q;
}

inline Polynomial scale(const Polynomial& p, const Integer& s) { return p * s; }

/// Left action: substitute x_j -> x_{w(j)}.
inline Polynomial act(const Permutation& w, const Polynomial& p) {
    Polynomial out;
    const int n = std::max(w.size(), p.num_variables());
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int j = 1; j <= m.num_variables(); ++j)
            e[static_cast<std::size_t>(w(j) - 1)] += m.exponent(j);
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

inline Polynomial swap_variables(int i, int j, const Polynomial& p) {
    return act(Permutation::transposition(std::max(i, j), Transposition(i, j)), p);
}

/// (P - s_ij P) / (x_i - x_j), by synthetic division in x_i with x_j as the root.
inline Polynomial divided_difference(int i, int j, const Polynomial& p) {
    if (i == j || i < 1 || j < 1)
        throw std::invalid_argument("divided_difference needs distinct positive indices");
    const Polynomial numerator = p - swap_variables(i, j, p);
    if (numerator.is_zero())
        return {};

    // numerator = sum_e x_i^e C_e with C_e free of x_i.
    std::map<int, Polynomial> by_power;
    for (const auto& [m, c] : numerator.terms())
        by_power[m.exponent(i)].add_term(m.with_exponent(i, 0), c);

    const int top = by_power.rbegin()->first;
    const Polynomial xj = Polynomial::variable(j);
    Polynomial quotient;
    Polynomial carry; // Q_{e-1} = C_e + x_j * Q_e
    for (int e = top; e >= 1; --e) {
        auto it = by_power.find(e);
        carry = (it == by_power.end() ? Polynomial{} : it->second) + xj * carry;
        for (const auto& [m, c] : carry.terms())
            quotient.add_term(m.with_exponent(i, e - 1), c);
    }
    auto c0 = by_power.find(0);
    const Polynomial remainder = (c0 == by_power.end() ? Polynomial{} : c0->second) + xj * carry;
    if (!remainder.is_zero())
        throw std::logic_error("divided difference left a nonzero remainder");
    return quotient;
}

/// d_{a1} ... d_{al} P, rightmost operator applied first. Non-reduced words are applied literally.
inline Polynomial del_word(const SimpleWord& word, const Polynomial& p) {
    Polynomial out = p;
    for (auto it = word.rbegin(); it != word.rend() && !out.is_zero(); ++it)
        out = divided_difference(*it, *it + 1, out);
    return out;
}

inline Polynomial del_word(const Permutation& w, const Polynomial& p) { return del_word(canonical_reduced_word(w), p); }

/// x1^{n-1} x2^{n-2} ... x_{n-1}.
inline Polynomial staircase(int n) {
    if (n < 1)
        throw std::invalid_argument("staircase needs n >= 1");
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        e[static_cast<std::size_t>(k)] = n - 1 - k;
    return Polynomial::monomial(Monomial(std::move(e)));
}

/// S_w = d_{w^{-1} w0} x^delta in the window of w.
inline Polynomial schubert(const Permutation& w) {
    const int n = std::max(w.size(), 1);
    const Permutation rest = inverse(w) * longest_element(n);
    return del_word(canonical_reduced_word(rest), staircase(n));
}

/// Direct skew action: v^{-1} sum_J phi_J P over the canonical reduced word of w,
/// J ranging over position sets spelling a reduced word of v.
inline Polynomial skew_direct_apply(const Permutation& w, const Permutation& v, const Polynomial& p) {
    const int n = std::max(w.size(), v.size());
    const SimpleWord word = canonical_reduced_word(w.embedded(n));
    Polynomial sum;
    for (const auto& positions : reduced_subwords(word, v.embedded(n))) {
        Polynomial term = p;
        std::size_t next = positions.size();
        for (std::size_t k = word.size(); k-- > 0 && !term.is_zero();) {
            const int a = word[k];
            if (next > 0 && positions[next - 1] == k + 1) {
                --next;
                term = act(Permutation::simple(n, a), term);
            } else {
                term = divided_difference(a, a + 1, term);
            }
        }
        sum += term;
    }
    return act(inverse(v.embedded(n)), sum);
}

inline Integer constant_term(const Polynomial& p) { return p.coefficient(Monomial{}); }

// Text format: "3*x1^2*x2 - x3", graded lexicographic order, largest first.

inline std::string to_string(const Monomial& m) {
    std::string s;
    for (int i = 1; i <= m.num_variables(); ++i) {
        const int e = m.exponent(i);
        if (e == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'x' + std::to_string(i);
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        if (m.is_one()) {
            s += mag.str();
        } else {
            if (mag != 1)
                s += mag.str() + '*';
            s += to_string(m);
        }
    }
    return s;
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    Polynomial parse() {
        Polynomial out;
        skip_space();
        if (pos_ == text_.size())
            throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            auto [m, c] = term();
            out.add_term(m, c * sign);
            skip_space();
        }
        return out;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    Integer number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected a number", start);
        return Integer(text_.substr(start, pos_ - start));
    }

    std::pair<Monomial, Integer> term() {
        Monomial m;
        Integer c = 1;
        while (true) {
            skip_space();
            if (peek() == 'x') {
                ++pos_;
                const std::size_t at = pos_;
                const Integer index = number();
                if (index < 1 || index > 1000)
                    throw ParseError("variable index out of range", at);
                int power = 1;
                skip_space();
                if (peek() == '^') {
                    ++pos_;
                    skip_space();
                    const std::size_t pat = pos_;
                    const Integer e = number();
                    if (e > 1000)
                        throw ParseError("exponent too large", pat);
                    power = static_cast<int>(e);
                }
                m = m * Monomial::variable(static_cast<int>(index), power);
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= number();
            } else {
                throw ParseError("expected a coefficient or variable", pos_);
            }
            skip_space();
            if (peek() != '*')
                break;
            ++pos_;
        }
        return {m, c};
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(const std::string& text) { return detail::PolyParser(text).parse(); }

} // namespace skewdd

#endif // SKEWDD_POLYNOMIAL_HPP
