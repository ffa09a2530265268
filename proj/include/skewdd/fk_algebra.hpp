#ifndef SKEWDD_FK_ALGEBRA_HPP
#define SKEWDD_FK_ALGEBRA_HPP

// Free-algebra model of the Fomin-Kirillov algebra.
//
// Elements are integer combinations of words in generators x_ij, i < j.
// Only two normalizations are applied eagerly: x_ji = -x_ij and words with two
// equal adjacent letters vanish. Commutation and three-term relations are left
// to fk_canonical.hpp, so every identity computed here is an exact equality of
// term multisets.
//
// Hopf structure, with s_P the S_n-degree of a homogeneous P:
//   braided product    (P1 (x) P2)(Q1 (x) Q2) = P1 Q1 (x) s_{Q1}^{-1}(P2) Q2
//   coproduct          x_ij -> x_ij (x) 1 + 1 (x) x_ij, a braided homomorphism
//   Delta_ab           Delta_ab(PQ) = Delta_ab(P) Q + s_ab(P) Delta_ab(Q)
//   nabla_ab (right)   (PQ)nabla_ab = P (Q)nabla_ab + (P)nabla_{s_Q(a) s_Q(b)} Q
//   antipode           S(PQ) = S(Q) s_Q^{-1}(S(P)),  S(x_ij) = -x_ij
//   Sbar               Sbar(P) = (-1)^deg P reverse(S(P))

#include "common.hpp"
#include "permutation.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skewdd {

/// x_ij with i < j.
struct Generator {
    int i = 1;
    int j = 2;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

using FKWord = std::vector<Generator>;

struct SignedGenerator {
    Generator letter;
    int sign = 1;
};

/// x_ij as a canonical letter and a sign; x_ji = -x_ij.
inline SignedGenerator gen(int i, int j) {
    if (i == j || i < 1 || j < 1)
        throw std::invalid_argument("generator x(" + std::to_string(i) + "," + std::to_string(j) +
                                    ") needs distinct positive indices");
    if (i < j)
        return {{i, j}, 1};
    return {{j, i}, -1};
}

inline bool has_adjacent_repeat(const FKWord& w) {
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k] == w[k - 1])
            return true;
    return false;
}

inline int max_index(const FKWord& w) {
    int n = 0;
    for (const Generator& g : w)
        n = std::max(n, g.j);
    return n;
}

class FKElement {
public:
    using Terms = std::map<FKWord, Integer>;

    FKElement() = default;

    static FKElement one() { return word({}); }

    static FKElement word(const FKWord& w, const Integer& coeff = 1) {
        FKElement e;
        e.add_term(w, coeff);
        return e;
    }

    /// x_ij with sign canonicalization.
    static FKElement generator(int i, int j) {
        const SignedGenerator g = gen(i, j);
        return word({g.letter}, g.sign);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Integer coefficient(const FKWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Adds coeff * w; words with equal adjacent letters are dropped.
    void add_term(const FKWord& w, const Integer& coeff) {
        if (coeff == 0 || has_adjacent_repeat(w))
            return;
        auto [it, inserted] = terms_.try_emplace(w, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Degree shared by all terms, if any.
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [w, c] : terms_) {
            if (d && *d != static_cast<int>(w.size()))
                return std::nullopt;
            d = static_cast<int>(w.size());
        }
        return d;
    }

    int max_index() const {
        int n = 0;
        for (const auto& [w, c] : terms_)
            n = std::max(n, skewdd::max_index(w));
        return n;
    }

    bool is_positive() const {
        for (const auto& [w, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    FKElement& operator+=(const FKElement& o) {
        for (const auto& [w, c] : o.terms_)
            add_term(w, c);
        return *this;
    }

    FKElement& operator-=(const FKElement& o) {
        for (const auto& [w, c] : o.terms_)
            add_term(w, -c);
        return *this;
    }

    FKElement& operator*=(const Integer& s) {
        if (s == 0)
            terms_.clear();
        for (auto& [w, c] : terms_)
            c *= s;
        return *this;
    }

    friend FKElement operator+(FKElement a, const FKElement& b) { return a += b; }
    friend FKElement operator-(FKElement a, const FKElement& b) { return a -= b; }
    friend FKElement operator-(FKElement a) { return a *= Integer(-1); }
    friend FKElement operator*(FKElement a, const Integer& s) { return a *= s; }
    friend FKElement operator*(const Integer& s, FKElement a) { return a *= s; }

    friend FKElement operator*(const FKElement& a, const FKElement& b) {
        FKElement out;
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                FKWord w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                out.add_term(w, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const FKElement&, const FKElement&) = default;

private:
    Terms terms_;
};

inline FKElement multiply(const FKElement& a, const FKElement& b) { return a * b; }

/// Integer combination of ordered pairs of words.
class FKTensor {
public:
    using Key = std::pair<FKWord, FKWord>;
    using Terms = std::map<Key, Integer>;

    static FKTensor pure(const FKWord& left, const FKWord& right, const Integer& coeff = 1) {
        FKTensor t;
        t.add_term(left, right, coeff);
        return t;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const FKWord& left, const FKWord& right, const Integer& coeff) {
        if (coeff == 0 || has_adjacent_repeat(left) || has_adjacent_repeat(right))
            return;
        auto [it, inserted] = terms_.try_emplace(Key{left, right}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add(const FKElement& left, const FKElement& right, const Integer& coeff = 1) {
        for (const auto& [wl, cl] : left.terms())
            for (const auto& [wr, cr] : right.terms())
                add_term(wl, wr, coeff * cl * cr);
    }

    FKTensor& operator+=(const FKTensor& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k.first, k.second, c);
        return *this;
    }

    friend bool operator==(const FKTensor&, const FKTensor&) = default;

private:
    Terms terms_;
};

/// S_n-degree of a word: s_{g1} * s_{g2} * ... in letter order.
inline Permutation sn_degree(const FKWord& w, int n = 0) {
    const int size = std::max(n, max_index(w));
    std::vector<int> images(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k)
        images[static_cast<std::size_t>(k)] = k + 1;
    // Right multiplication by a transposition swaps two positions.
    for (const Generator& g : w)
        std::swap(images[static_cast<std::size_t>(g.i - 1)], images[static_cast<std::size_t>(g.j - 1)]);
    return Permutation::from_one_line(std::move(images));
}

/// w(x_{i1 j1} ... ) = x_{w(i1) w(j1)} ..., returned as canonical word and sign.
inline std::pair<FKWord, int> act_word(const Permutation& w, const FKWord& word) {
    FKWord out;
    out.reserve(word.size());
    int sign = 1;
    for (const Generator& g : word) {
        const SignedGenerator h = gen(w(g.i), w(g.j));
        out.push_back(h.letter);
        sign *= h.sign;
    }
    return {std::move(out), sign};
}

inline FKElement act(const Permutation& w, const FKElement& a) {
    FKElement out;
    for (const auto& [word, c] : a.terms()) {
        auto [image, sign] = act_word(w, word);
        out.add_term(image, c * sign);
    }
    return out;
}

inline FKWord reverse_word(FKWord w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline FKElement reverse(const FKElement& a) {
    FKElement out;
    for (const auto& [w, c] : a.terms())
        out.add_term(reverse_word(w), c);
    return out;
}

/// x_w along the canonical reduced word of w.
inline FKWord nilcoxeter_word(const Permutation& w) {
    FKWord out;
    for (int a : canonical_reduced_word(w))
        out.push_back({a, a + 1});
    return out;
}

inline FKWord nilcoxeter_word(const SimpleWord& word) {
    FKWord out;
    for (int a : word)
        out.push_back({a, a + 1});
    return out;
}

inline FKElement x_perm(const Permutation& w) { return FKElement::word(nilcoxeter_word(w)); }

// ---------------------------------------------------------------------------
// Braided tensor product and coproduct

inline FKTensor braided_multiply(const FKTensor& p, const FKTensor& q) {
    FKTensor out;
    for (const auto& [pk, pc] : p.terms()) {
        for (const auto& [qk, qc] : q.terms()) {
            const Permutation twist = inverse(sn_degree(qk.first));
            auto [moved, sign] = act_word(twist, pk.second);
            FKWord left = pk.first;
            left.insert(left.end(), qk.first.begin(), qk.first.end());
            moved.insert(moved.end(), qk.second.begin(), qk.second.end());
            out.add_term(left, moved, pc * qc * sign);
        }
    }
    return out;
}

/// Folds Delta(g) = g (x) 1 + 1 (x) g letter by letter under the braided product.
inline FKTensor coproduct(const FKElement& a) {
    FKTensor out;
    for (const auto& [word, c] : a.terms()) {
        FKTensor acc = FKTensor::pure({}, {}, c);
        for (const Generator& g : word) {
            FKTensor next;
            for (const auto& [k, kc] : acc.terms()) {
                // (P1 (x) P2)(g (x) 1) = P1 g (x) s_g(P2)
                FKWord left = k.first;
                left.push_back(g);
                auto [moved, sign] = act_word(Permutation::transposition(g.j, {g.i, g.j}), k.second);
                next.add_term(left, moved, kc * sign);
                // (P1 (x) P2)(1 (x) g) = P1 (x) P2 g
                FKWord right = k.second;
                right.push_back(g);
                next.add_term(k.first, right, kc);
            }
            acc = std::move(next);
        }
        out += acc;
    }
    return out;
}

inline FKTensor swap_factors(const FKTensor& t) {
    FKTensor out;
    for (const auto& [k, c] : t.terms())
        out.add_term(k.second, k.first, c);
    return out;
}

/// (f (x) g)(t), applying f and g to single words.
template <typename Left, typename Right>
FKTensor map_factors(const FKTensor& t, Left&& f, Right&& g) {
    FKTensor out;
    for (const auto& [k, c] : t.terms())
        out.add(f(FKElement::word(k.first)), g(FKElement::word(k.second)), c);
    return out;
}

// ---------------------------------------------------------------------------
// Delta and nabla actions

/// Delta_ab on a single word; (a, b) in either orientation.
inline FKElement delta_generator(int a, int b, const FKWord& word) {
    const SignedGenerator target = gen(a, b);
    const Permutation sab = Permutation::transposition(target.letter.j, {a, b});
    FKElement out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (word[k] != target.letter)
            continue;
        FKWord prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
        auto [moved, sign] = act_word(sab, prefix);
        moved.insert(moved.end(), word.begin() + static_cast<std::ptrdiff_t>(k + 1), word.end());
        out.add_term(moved, Integer(sign * target.sign));
    }
    return out;
}

inline FKElement delta_generator(int a, int b, const FKElement& x) {
    FKElement out;
    for (const auto& [w, c] : x.terms())
        out += delta_generator(a, b, w) * c;
    return out;
}

/// Delta_P = Delta_{p1} ... Delta_{pk}; Delta_{pk} is applied first.
inline FKElement delta_op(const FKWord& p, const FKElement& x) {
    FKElement out = x;
    for (auto it = p.rbegin(); it != p.rend() && !out.is_zero(); ++it)
        out = delta_generator(it->i, it->j, out);
    return out;
}

inline FKElement delta_op(const FKElement& p, const FKElement& x) {
    FKElement out;
    for (const auto& [w, c] : p.terms())
        out += delta_op(w, x) * c;
    return out;
}

/// (word)nabla_ab; (a, b) in either orientation.
inline FKElement nabla_generator(const FKWord& word, int a, int b) {
    FKElement out;
    int ca = a; // s_Q(a), Q the suffix after position k
    int cb = b;
    for (std::size_t k = word.size(); k-- > 0;) {
        const Generator g = word[k];
        const SignedGenerator h = gen(ca, cb);
        if (g == h.letter) {
            FKWord rest(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
            rest.insert(rest.end(), word.begin() + static_cast<std::ptrdiff_t>(k + 1), word.end());
            out.add_term(rest, Integer(h.sign));
        }
        auto swap = [&](int x) { return x == g.i ? g.j : x == g.j ? g.i : x; };
        ca = swap(ca);
        cb = swap(cb);
    }
    return out;
}

inline FKElement nabla_generator(const FKElement& x, int a, int b) {
    FKElement out;
    for (const auto& [w, c] : x.terms())
        out += nabla_generator(w, a, b) * c;
    return out;
}

/// (x)nabla_P = (...((x)nabla_{p1})nabla_{p2}...); right action.
inline FKElement nabla_op(const FKElement& x, const FKWord& p) {
    FKElement out = x;
    for (auto it = p.begin(); it != p.end() && !out.is_zero(); ++it)
        out = nabla_generator(out, it->i, it->j);
    return out;
}

inline FKElement nabla_op(const FKElement& x, const FKElement& p) {
    FKElement out;
    for (const auto& [w, c] : p.terms())
        out += nabla_op(x, w) * c;
    return out;
}

/// <P, Q> = Delta_P(Q) in degree 0, summed over homogeneous parts.
inline Integer pairing(const FKElement& p, const FKElement& q) {
    Integer total = 0;
    for (const auto& [wp, cp] : p.terms()) {
        FKElement same_degree;
        for (const auto& [wq, cq] : q.terms())
            if (wq.size() == wp.size())
                same_degree.add_term(wq, cq);
        if (same_degree.is_zero())
            continue;
        total += cp * delta_op(wp, same_degree).coefficient({});
    }
    return total;
}

/// <x_w, P> for a positive word P = x_{i1 j1} ... x_{il jl}: 1 iff
/// id < v_l < ... < v_1 = w^{-1} is a saturated Bruhat chain, v_k = s_{ik jk} ... s_{il jl}.
inline int pairing_bruhat(const Permutation& w, const FKWord& p) {
    if (static_cast<int>(p.size()) != length(w))
        return 0;
    const int n = std::max(w.size(), max_index(p));
    Permutation v(n);
    int len = 0;
    for (std::size_t k = p.size(); k-- > 0;) {
        v = Permutation::transposition(n, {p[k].i, p[k].j}) * v;
        if (length(v) != ++len)
            return 0;
    }
    return v.same_as(inverse(w)) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Antipode and its reversed variant

/// Recursion S(g R) = S(R) s_R^{-1}(S(g)) on each word.
inline FKElement antipode(const FKElement& a) {
    FKElement out;
    for (const auto& [word, c] : a.terms()) {
        FKElement acc = FKElement::one();
        FKWord rest;
        for (std::size_t k = word.size(); k-- > 0;) {
            const Generator g = word[k];
            const Permutation twist = inverse(sn_degree(rest));
            acc = acc * act(twist, FKElement::word({g}, -1));
            rest.insert(rest.begin(), g);
        }
        out += acc * c;
    }
    return out;
}

/// Closed form Sbar(x_{i1 j1} ... x_{il jl}) = y_1 ... y_l with
/// y_k = s_{il jl} ... s_{i(k+1) j(k+1)}(x_{ik jk}).
inline FKElement sbar(const FKElement& a) {
    FKElement out;
    for (const auto& [word, c] : a.terms()) {
        const int n = max_index(word);
        FKWord image(word.size());
        int sign = 1;
        Permutation twist(n); // s_{gl} * ... * s_{g(k+1)}
        for (std::size_t k = word.size(); k-- > 0;) {
            const SignedGenerator y = gen(twist(word[k].i), twist(word[k].j));
            image[k] = y.letter;
            sign *= y.sign;
            twist = twist * Permutation::transposition(n, {word[k].i, word[k].j});
        }
        out.add_term(image, c * sign);
    }
    return out;
}

/// Sbar from its definition, (-1)^deg reverse(S(P)).
inline FKElement sbar_by_definition(const FKElement& a) {
    FKElement out;
    for (const auto& [word, c] : a.terms()) {
        FKElement part = reverse(antipode(FKElement::word(word, c)));
        if (word.size() % 2 == 1)
            part *= Integer(-1);
        out += part;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text and JSON forms: "x(1,2)x(2,3)", "x(1,2)x(2,4) + 2*x(1,3) - 1",
// {"terms":[{"coeff":c,"word":[[i,j],...]}]}.

inline std::string to_string(const FKWord& w) {
    if (w.empty())
        return "1";
    std::string s;
    for (const Generator& g : w)
        s += "x(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
    return s;
}

namespace detail {

inline std::string coefficient_prefix(const Integer& mag, bool empty_word) {
    if (empty_word)
        return mag.str();
    return mag == 1 ? std::string() : mag.str() + "*";
}

} // namespace detail

inline std::string to_string(const FKElement& a) {
    if (a.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : a.terms()) {
        const Integer mag = c < 0 ? Integer(-c) : c;
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        s += detail::coefficient_prefix(mag, w.empty());
        if (!w.empty())
            s += to_string(w);
    }
    return s;
}

inline std::string to_string(const FKTensor& t) {
    if (t.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
        const Integer mag = c < 0 ? Integer(-c) : c;
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            s += mag.str() + "*";
        s += to_string(k.first) + " (x) " + to_string(k.second);
    }
    return s;
}

namespace detail {

class FKParser {
public:
    explicit FKParser(const std::string& text) : text_(text) {}

    FKElement parse_element() {
        FKElement out;
        skip_space();
        if (pos_ == text_.size())
            throw ParseError("empty element", pos_);
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
            Integer coeff = 1;
            bool have_number = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = number();
                have_number = true;
                skip_space();
                if (peek() == '*') {
                    ++pos_;
                    skip_space();
                    if (peek() != 'x')
                        throw ParseError("expected a word after '*'", pos_);
                }
            }
            FKWord w;
            int word_sign = 1;
            if (peek() == 'x') {
                word_sign = parse_word_into(w);
            } else if (!have_number) {
                throw ParseError("expected a coefficient or word", pos_);
            }
            out.add_term(w, coeff * sign * word_sign);
            skip_space();
        }
        return out;
    }

    /// Parses a single signed word; the whole text must be consumed.
    std::pair<FKWord, int> parse_word() {
        skip_space();
        FKWord w;
        int sign = 1;
        if (peek() == '1') {
            ++pos_;
        } else {
            sign = parse_word_into(w);
        }
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("trailing characters after word", pos_);
        return {w, sign};
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    Integer number() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected a number", start);
        return Integer(text_.substr(start, pos_ - start));
    }

    int parse_word_into(FKWord& w) {
        int sign = 1;
        while (true) {
            skip_space();
            if (peek() != 'x')
                break;
            const std::size_t at = pos_;
            ++pos_;
            expect('(');
            const Integer i = number();
            expect(',');
            const Integer j = number();
            expect(')');
            if (i == j || i < 1 || j < 1 || i > 1000 || j > 1000)
                throw ParseError("invalid generator indices", at);
            const SignedGenerator g = gen(static_cast<int>(i), static_cast<int>(j));
            w.push_back(g.letter);
            sign *= g.sign;
        }
        return sign;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline FKElement parse_fk_element(const std::string& text) { return detail::FKParser(text).parse_element(); }

/// A single word, possibly with reversed letters; returns the canonical word and its sign.
inline std::pair<FKWord, int> parse_fk_word(const std::string& text) { return detail::FKParser(text).parse_word(); }

inline nlohmann::json word_to_json(const FKWord& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Generator& g : w)
        arr.push_back({g.i, g.j});
    return arr;
}

namespace detail {

inline nlohmann::json coeff_to_json(const Integer& c) {
    if (fits_int64(c))
        return static_cast<std::int64_t>(c);
    return c.str();
}

inline Integer coeff_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

inline std::pair<FKWord, int> word_from_json(const nlohmann::json& j) {
    FKWord w;
    int sign = 1;
    for (const auto& letter : j) {
        if (!letter.is_array() || letter.size() != 2)
            throw std::invalid_argument("word letters must be [i, j] pairs");
        const SignedGenerator g = gen(letter[0].get<int>(), letter[1].get<int>());
        w.push_back(g.letter);
        sign *= g.sign;
    }
    return {w, sign};
}

} // namespace detail

inline nlohmann::json to_json(const FKElement& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : a.terms())
        terms.push_back({{"coeff", detail::coeff_to_json(c)}, {"word", word_to_json(w)}});
    return {{"terms", terms}};
}

inline nlohmann::json to_json(const FKTensor& t) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : t.terms())
        terms.push_back({{"coeff", detail::coeff_to_json(c)},
                         {"left", word_to_json(k.first)},
                         {"right", word_to_json(k.second)}});
    return {{"terms", terms}};
}

inline FKElement fk_element_from_json(const nlohmann::json& j) {
    FKElement out;
    for (const auto& term : j.at("terms")) {
        auto [w, sign] = detail::word_from_json(term.at("word"));
        out.add_term(w, detail::coeff_from_json(term.at("coeff")) * sign);
    }
    return out;
}

} // namespace skewdd

#endif // SKEWDD_FK_ALGEBRA_HPP
