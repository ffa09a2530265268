#ifndef SKEWDD_PERMUTATION_HPP
#define SKEWDD_PERMUTATION_HPP

// Symmetric-group combinatorics: permutations in one-line notation, reduced
// words, Bruhat order, reflection orderings and reduced subword enumeration.
//
// Conventions used throughout the library:
//   * points are 1-based, a permutation of window n stores images w(1..n);
//   * (u * v)(i) = u(v(i));
//   * a simple word [a1, ..., al] denotes s_{a1} * ... * s_{al}.
// Operations on permutations of different windows embed the smaller one into
// the larger symmetric group by fixing the trailing points.

#include "common.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewdd {

/// Sequence of simple-generator indices; letter a stands for s_a = (a a+1).
using SimpleWord = std::vector<int>;

/// A transposition s_ij stored with i < j.
struct Transposition {
    int i = 1;
    int j = 2;

    Transposition() = default;
    Transposition(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
        if (a == b || a < 1 || b < 1)
            throw std::invalid_argument("transposition needs two distinct positive points");
    }

    friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

class Permutation {
public:
    Permutation() = default;

    /// Identity of S_n.
    explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
        if (n < 0)
            throw std::invalid_argument("negative window");
        for (int k = 0; k < n; ++k)
            images_[static_cast<std::size_t>(k)] = k + 1;
    }

    /// From one-line notation; throws unless `images` is a bijection on 1..n.
    static Permutation from_one_line(std::vector<int> images) {
        std::vector<bool> seen(images.size() + 1, false);
        for (int x : images) {
            if (x < 1 || static_cast<std::size_t>(x) > images.size() || seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("one-line notation is not a permutation");
            seen[static_cast<std::size_t>(x)] = true;
        }
        Permutation p;
        p.images_ = std::move(images);
        return p;
    }

    static Permutation transposition(int n, Transposition t) {
        Permutation p(std::max({n, t.i, t.j}));
        std::swap(p.images_[static_cast<std::size_t>(t.i - 1)], p.images_[static_cast<std::size_t>(t.j - 1)]);
        return p;
    }

    static Permutation simple(int n, int a) { return transposition(n, Transposition(a, a + 1)); }

    int size() const { return static_cast<int>(images_.size()); }

    /// w(i); points beyond the window are fixed.
    int operator()(int i) const {
        return i >= 1 && i <= size() ? images_[static_cast<std::size_t>(i - 1)] : i;
    }

    const std::vector<int>& one_line() const { return images_; }

    /// Copy of this permutation in the window max(n, size()).
    Permutation embedded(int n) const {
        if (n <= size())
            return *this;
        Permutation p = *this;
        for (int k = size() + 1; k <= n; ++k)
            p.images_.push_back(k);
        return p;
    }

    bool is_identity() const {
        for (int k = 1; k <= size(); ++k)
            if ((*this)(k) != k)
                return false;
        return true;
    }

    /// Equality up to window embedding.
    bool same_as(const Permutation& other) const {
        const int n = std::max(size(), other.size());
        for (int k = 1; k <= n; ++k)
            if ((*this)(k) != other(k))
                return false;
        return true;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

inline Permutation compose(const Permutation& u, const Permutation& v) {
    const int n = std::max(u.size(), v.size());
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        images[static_cast<std::size_t>(k - 1)] = u(v(k));
    return Permutation::from_one_line(std::move(images));
}

inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

inline Permutation inverse(const Permutation& w) {
    std::vector<int> images(static_cast<std::size_t>(w.size()));
    for (int k = 1; k <= w.size(); ++k)
        images[static_cast<std::size_t>(w(k) - 1)] = k;
    return Permutation::from_one_line(std::move(images));
}

/// Number of inversions.
inline int length(const Permutation& w) {
    int count = 0;
    for (int a = 1; a <= w.size(); ++a)
        for (int b = a + 1; b <= w.size(); ++b)
            if (w(a) > w(b))
                ++count;
    return count;
}

inline Permutation longest_element(int n) {
    if (n < 1)
        throw std::invalid_argument("longest_element needs n >= 1");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        images[static_cast<std::size_t>(k)] = n - k;
    return Permutation::from_one_line(std::move(images));
}

/// s_{a1} * ... * s_{al}; letters must lie in 1..n-1.
inline Permutation from_word(const SimpleWord& word, int n) {
    std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
    for (int k = 0; k < n; ++k)
        images[static_cast<std::size_t>(k)] = k + 1;
    // Right multiplication by s_a swaps positions a and a+1.
    for (int a : word) {
        if (a < 1 || a >= n)
            throw std::out_of_range("simple generator index " + std::to_string(a) + " out of range for n = " +
                                    std::to_string(n));
    }
    for (int a : word)
        std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(a)]);
    return Permutation::from_one_line(std::move(images));
}

/// True when s_a * w is shorter than w, i.e. w^{-1}(a) > w^{-1}(a+1).
inline bool is_left_descent(const Permutation& w, int a) {
    const Permutation winv = inverse(w);
    return winv(a) > winv(a + 1);
}

inline bool is_right_descent(const Permutation& w, int a) { return w(a) > w(a + 1); }

namespace detail {

/// s_a * w: swaps the values a and a+1 in one-line notation.
inline Permutation left_multiply_simple(const Permutation& w, int a) {
    std::vector<int> images = w.embedded(a + 1).one_line();
    for (int& x : images) {
        if (x == a)
            x = a + 1;
        else if (x == a + 1)
            x = a;
    }
    return Permutation::from_one_line(std::move(images));
}

/// w * s_a: swaps positions a and a+1.
inline Permutation right_multiply_simple(const Permutation& w, int a) {
    std::vector<int> images = w.embedded(a + 1).one_line();
    std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(a)]);
    return Permutation::from_one_line(std::move(images));
}

inline void collect_reduced_words(const Permutation& w, SimpleWord& prefix, std::set<SimpleWord>& out) {
    if (w.is_identity()) {
        out.insert(prefix);
        return;
    }
    const Permutation winv = inverse(w);
    for (int a = 1; a < w.size(); ++a) {
        if (winv(a) > winv(a + 1)) {
            prefix.push_back(a);
            collect_reduced_words(left_multiply_simple(w, a), prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace detail

/// Lexicographically smallest reduced word: peel off the smallest left descent.
inline SimpleWord canonical_reduced_word(const Permutation& w) {
    SimpleWord word;
    Permutation cur = w;
    while (!cur.is_identity()) {
        const Permutation inv = inverse(cur);
        int a = 1;
        while (inv(a) < inv(a + 1))
            ++a;
        word.push_back(a);
        cur = detail::left_multiply_simple(cur, a);
    }
    return word;
}

/// Lexicographically largest reduced word: peel off the largest left descent.
inline SimpleWord last_reduced_word(const Permutation& w) {
    SimpleWord word;
    Permutation cur = w;
    while (!cur.is_identity()) {
        const Permutation inv = inverse(cur);
        int a = cur.size() - 1;
        while (inv(a) < inv(a + 1))
            --a;
        word.push_back(a);
        cur = detail::left_multiply_simple(cur, a);
    }
    return word;
}

/// Every reduced word of w, in lexicographic order. Exponential; meant for l(w) <= ~10.
inline std::vector<SimpleWord> all_reduced_words(const Permutation& w) {
    std::set<SimpleWord> words;
    SimpleWord prefix;
    detail::collect_reduced_words(w, prefix, words);
    return {words.begin(), words.end()};
}

enum class WordMode { one, all };

inline std::vector<SimpleWord> reduced_words(const Permutation& w, WordMode mode) {
    if (mode == WordMode::one)
        return {canonical_reduced_word(w)};
    return all_reduced_words(w);
}

inline bool is_reduced(const SimpleWord& word, int n) {
    return length(from_word(word, n)) == static_cast<int>(word.size());
}

/// Subword test: v <= w iff the canonical reduced word of w has a subword that
/// is a reduced word of v. Tracks the set of reduced subword products.
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
    const int n = std::max(v.size(), w.size());
    const Permutation target = v.embedded(n);
    std::set<Permutation> reachable{Permutation(n)};
    for (int a : canonical_reduced_word(w.embedded(n))) {
        std::vector<Permutation> grown;
        for (const Permutation& x : reachable) {
            if (!is_right_descent(x, a))
                grown.push_back(detail::right_multiply_simple(x, a));
        }
        reachable.insert(grown.begin(), grown.end());
    }
    return reachable.contains(target);
}

struct Cover {
    Permutation lower;
    Transposition reflection;

    friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// All (w * s_ij, s_ij) with length exactly l(w) - 1, ordered by transposition.
inline std::vector<Cover> lower_covers(const Permutation& w) {
    std::vector<Cover> covers;
    const int target = length(w) - 1;
    for (int i = 1; i <= w.size(); ++i) {
        for (int j = i + 1; j <= w.size(); ++j) {
            Transposition t(i, j);
            Permutation v = w * Permutation::transposition(w.size(), t);
            if (length(v) == target)
                covers.push_back({std::move(v), t});
        }
    }
    return covers;
}

inline bool covers(const Permutation& w, const Permutation& v) {
    const int n = std::max(v.size(), w.size());
    const Permutation ve = v.embedded(n);
    if (length(ve) + 1 != length(w))
        return false;
    for (const Cover& c : lower_covers(w.embedded(n)))
        if (c.lower == ve)
            return true;
    return false;
}

/// s12, s13, s23, s14, s24, s34, ..., s_{n-1,n}.
inline std::vector<Transposition> reflection_ordering(int n) {
    if (n < 2)
        throw std::invalid_argument("reflection_ordering needs n >= 2");
    std::vector<Transposition> order;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            order.emplace_back(i, j);
    return order;
}

/// Reflection ordering t_k = s_{iN}...s_{i(k+1)} s_{ik} s_{i(k+1)}...s_{iN} induced by a
/// reduced word of w0.
inline std::vector<Transposition> reflection_ordering_from_word(const SimpleWord& w0_word, int n) {
    if (length(from_word(w0_word, n)) != n * (n - 1) / 2 || static_cast<int>(w0_word.size()) != n * (n - 1) / 2)
        throw std::invalid_argument("not a reduced word for the longest element");
    std::vector<Transposition> order(w0_word.size());
    Permutation suffix_inv(n); // (s_{i(k+1)} ... s_{iN})^{-1}
    for (std::size_t k = w0_word.size(); k-- > 0;) {
        const int a = w0_word[k];
        order[k] = Transposition(suffix_inv(a), suffix_inv(a + 1));
        suffix_inv = detail::right_multiply_simple(suffix_inv, a);
    }
    return order;
}

/// For every i < j < k, s_ik sits strictly between s_ij and s_jk.
inline bool is_reflection_ordering(const std::vector<Transposition>& order, int n) {
    if (static_cast<int>(order.size()) != n * (n - 1) / 2)
        return false;
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), -1));
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto [i, j] = order[k];
        if (j > n || pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != -1)
            return false;
        pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(k);
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                const int pij = pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const int pik = pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                const int pjk = pos[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                if (!((pij < pik && pik < pjk) || (pjk < pik && pik < pij)))
                    return false;
            }
        }
    }
    return true;
}

/// All position sets J (1-based, increasing) such that the letters of `word` at J
/// form a reduced word for u. Backtracking keeps only prefixes p with
/// l(p^{-1} u) = l(u) - l(p).
inline std::vector<std::vector<std::size_t>> reduced_subwords(const SimpleWord& word, const Permutation& u) {
    int n = u.size();
    for (int a : word)
        n = std::max(n, a + 1);
    const Permutation target = u.embedded(n);
    const int target_length = length(target);
    std::vector<std::vector<std::size_t>> result;
    std::vector<std::size_t> chosen;

    // `rest` = prefix^{-1} * u; a letter a extends the prefix iff a is a left descent of rest.
    auto search = [&](auto&& self, std::size_t pos, const Permutation& rest, int remaining) -> void {
        if (remaining == 0) {
            result.push_back(chosen);
            return;
        }
        if (word.size() - pos < static_cast<std::size_t>(remaining))
            return;
        const int a = word[pos];
        if (is_left_descent(rest, a)) {
            chosen.push_back(pos + 1);
            self(self, pos + 1, detail::left_multiply_simple(rest, a), remaining - 1);
            chosen.pop_back();
        }
        self(self, pos + 1, rest, remaining);
    };
    search(search, 0, target, target_length);
    return result;
}

/// Dominance (tableau) criterion: v <= w iff #{a <= i : v(a) >= k} <= #{a <= i : w(a) >= k}.
inline bool bruhat_leq_tableau(const Permutation& v, const Permutation& w) {
    const int n = std::max(v.size(), w.size());
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= n; ++k) {
            int cv = 0;
            int cw = 0;
            for (int a = 1; a <= i; ++a) {
                cv += v(a) >= k;
                cw += w(a) >= k;
            }
            if (cv > cw)
                return false;
        }
    }
    return true;
}

/// All permutations of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        images[static_cast<std::size_t>(k)] = k + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// Text forms: one-line digit strings ("3412") and comma-separated words ("2,1,3,2").

inline std::string to_one_line_string(const Permutation& w) {
    std::string s;
    for (int x : w.one_line()) {
        if (w.size() > 9 && !s.empty())
            s += ' ';
        s += std::to_string(x);
    }
    return s;
}

inline std::string to_word_string(const SimpleWord& word) {
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(word[k]);
    }
    return s;
}

inline SimpleWord parse_word(const std::string& text) {
    SimpleWord word;
    std::size_t pos = 0;
    if (text.empty())
        return word;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos)
            end = text.size();
        const std::string piece = text.substr(pos, end - pos);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad word letter '" + piece + "'", pos);
        word.push_back(std::stoi(piece));
        pos = end + 1;
    }
    return word;
}

inline Permutation parse_one_line(const std::string& text) {
    std::vector<int> images;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char c = text[k];
        if (c < '1' || c > '9')
            throw ParseError("bad one-line digit", k);
        images.push_back(c - '0');
    }
    return Permutation::from_one_line(std::move(images));
}

} // namespace skewdd

#endif // SKEWDD_PERMUTATION_HPP
