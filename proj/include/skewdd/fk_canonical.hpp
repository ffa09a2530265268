#ifndef SKEWDD_FK_CANONICAL_HPP
#define SKEWDD_FK_CANONICAL_HPP

// Equality in FK_n: canonical forms in each graded component of the free
// algebra modulo the relation ideal.
//
// The ideal I is generated in degree 2, so I_d = I_{d-1} V + V^{d-2} R and the
// quotient satisfies
//     A_d = (A_{d-1} (x) V) / span{ NF(b g) (x) h : b in B_{d-2}, g h in r, r in R }.
// Each degree is one exact elimination over the columns B_{d-1} x generators,
// kept in reduced row echelon form with primitive integer rows. The non-pivot
// columns form the standard words B_d; the canonical form of a word is its
// residue on B_d. Columns are ordered lexicographically and each row pivots on
// its smallest column, so results are deterministic.

#include "common.hpp"
#include "fk_algebra.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace skewdd {

/// Linear combination of words with no normalization at all (squares kept).
using FreeCombination = std::map<FKWord, Integer>;

struct CanonLimits {
    int max_n = 4;
    int max_degree = 6;
};

/// x_ij for 1 <= i < j <= n in lexicographic order.
inline std::vector<Generator> generators(int n) {
    std::vector<Generator> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.push_back({i, j});
    return out;
}

/// Degree-2 relation instances: squares, one commutator per disjoint pair and
/// the two three-term relations per 3-subset i < j < k, namely the cyclic
/// classes of (i, j, k) and (j, i, k).
inline std::vector<FreeCombination> degree_two_relations(int n) {
    std::vector<FreeCombination> out;
    const std::vector<Generator> gens = generators(n);
    for (const Generator& g : gens)
        out.push_back({{FKWord{g, g}, Integer(1)}});
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            const Generator g = gens[a];
            const Generator h = gens[b];
            if (g.i == h.i || g.i == h.j || g.j == h.i || g.j == h.j)
                continue;
            out.push_back({{FKWord{g, h}, Integer(1)}, {FKWord{h, g}, Integer(-1)}});
        }
    }
    // x_ab x_bc + x_bc x_ca + x_ca x_ab for a cyclic triple (a, b, c).
    auto cyclic = [](int a, int b, int c) {
        FreeCombination rel;
        auto add = [&rel](SignedGenerator p, SignedGenerator q) {
            rel[FKWord{p.letter, q.letter}] += p.sign * q.sign;
        };
        add(gen(a, b), gen(b, c));
        add(gen(b, c), gen(c, a));
        add(gen(c, a), gen(a, b));
        return rel;
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                out.push_back(cyclic(i, j, k));
                out.push_back(cyclic(j, i, k));
            }
        }
    }
    return out;
}

namespace detail {

inline void enumerate_words(const std::vector<Generator>& gens, int length, FKWord& prefix, std::vector<FKWord>& out) {
    if (static_cast<int>(prefix.size()) == length) {
        out.push_back(prefix);
        return;
    }
    for (const Generator& g : gens) {
        prefix.push_back(g);
        enumerate_words(gens, length, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All n(n-1)/2 ^ d words of length d, lexicographic.
inline std::vector<FKWord> all_words(int n, int d) {
    std::vector<FKWord> out;
    FKWord prefix;
    detail::enumerate_words(generators(n), d, prefix, out);
    return out;
}

/// Spanning set u r v of the degree-d part of the ideal, as raw combinations.
inline std::vector<FreeCombination> relation_basis(int n, int d) {
    std::vector<FreeCombination> out;
    if (d < 2)
        return out;
    const std::vector<FreeCombination> rels = degree_two_relations(n);
    for (int left = 0; left <= d - 2; ++left) {
        const std::vector<FKWord> lefts = all_words(n, left);
        const std::vector<FKWord> rights = all_words(n, d - 2 - left);
        for (const FKWord& u : lefts) {
            for (const FreeCombination& r : rels) {
                for (const FKWord& v : rights) {
                    FreeCombination e;
                    for (const auto& [w, c] : r) {
                        FKWord full = u;
                        full.insert(full.end(), w.begin(), w.end());
                        full.insert(full.end(), v.begin(), v.end());
                        e[full] += c;
                    }
                    out.push_back(std::move(e));
                }
            }
        }
    }
    return out;
}

/// Normalizes a raw combination into the free-algebra model (signs, squares).
inline FKElement to_element(const FreeCombination& raw) {
    FKElement out;
    for (const auto& [w, c] : raw)
        out.add_term(w, c);
    return out;
}

/// FNV-1a over the text of the degree-2 relations; identifies cached elimination data.
inline std::string relation_set_hash(int n) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const FreeCombination& r : degree_two_relations(n)) {
        for (const auto& [w, c] : r) {
            const std::string s = to_string(w) + ":" + c.str() + ";";
            for (unsigned char ch : s) {
                h ^= ch;
                h *= 1099511628211ULL;
            }
        }
        h ^= '|';
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k, h >>= 4)
        out[static_cast<std::size_t>(k)] = digits[h & 0xf];
    return out;
}

class CanonicalForms {
public:
    using SparseInt = std::map<std::size_t, Integer>;
    using SparseRat = std::map<std::size_t, Rational>;

    static constexpr int format_version = 1;

    explicit CanonicalForms(int n, CanonLimits limits = {}) : n_(n), limits_(limits), gens_(generators(n)) {
        if (n < 1)
            throw std::invalid_argument("window must be positive");
        if (n > limits_.max_n)
            throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the configured limit " +
                                     std::to_string(limits_.max_n));
        Layer zero;
        zero.columns = {FKWord{}};
        zero.column_index[FKWord{}] = 0;
        zero.basis = {0};
        zero.basis_position[0] = 0;
        layers_.push_back(std::move(zero));
        word_cache_.emplace_back();
        relations_ = degree_two_relations(n);
    }

    int n() const { return n_; }
    const CanonLimits& limits() const { return limits_; }

    /// Residue of `a` on the standard words; throws std::domain_error if it is not integral.
    FKElement canonical_form(const FKElement& a) {
        std::lock_guard lock(mutex_);
        FKElement out;
        for (const auto& [d, vec] : residues(a)) {
            for (const auto& [b, c] : vec) {
                if (denominator(c) != 1)
                    throw std::domain_error("canonical form has a non-integral coefficient");
                out.add_term(layers_[d].columns[layers_[d].basis[b]], numerator(c));
            }
        }
        return out;
    }

    bool is_zero(const FKElement& a) {
        std::lock_guard lock(mutex_);
        for (const auto& [d, vec] : residues(a))
            if (!vec.empty())
                return false;
        return true;
    }

    bool equal(const FKElement& a, const FKElement& b) { return is_zero(a - b); }

    std::size_t dimension(int d) {
        std::lock_guard lock(mutex_);
        return layer(d).basis.size();
    }

    std::vector<FKWord> standard_words(int d) {
        std::lock_guard lock(mutex_);
        const Layer& l = layer(d);
        std::vector<FKWord> out;
        for (std::size_t col : l.basis)
            out.push_back(l.columns[col]);
        return out;
    }

    /// Number of independent relation rows kept for degree d.
    std::size_t relation_rank(int d) {
        std::lock_guard lock(mutex_);
        return layer(d).rows.size();
    }

    /// Portable form of the elimination data for degrees 0..max_degree.
    nlohmann::json to_json(int max_degree) {
        std::lock_guard lock(mutex_);
        nlohmann::json layers = nlohmann::json::array();
        for (int d = 0; d <= max_degree; ++d) {
            const Layer& l = layer(d);
            nlohmann::json rows = nlohmann::json::array();
            for (const SparseInt& row : l.rows) {
                nlohmann::json entries = nlohmann::json::array();
                for (const auto& [col, c] : row)
                    entries.push_back({col, c.str()});
                rows.push_back({{"pivot", row.begin()->first}, {"entries", entries}});
            }
            nlohmann::json columns = nlohmann::json::array();
            for (const FKWord& w : l.columns)
                columns.push_back(word_to_json(w));
            layers.push_back({{"degree", d}, {"columns", columns}, {"rows", rows}});
        }
        return {{"version", format_version},
                {"n", n_},
                {"relation_hash", relation_set_hash(n_)},
                {"layers", layers}};
    }

    /// Rebuilds from `to_json` output; rejects other versions, windows or relation sets.
    static std::unique_ptr<CanonicalForms> from_json(const nlohmann::json& j, CanonLimits limits = {}) {
        if (j.at("version").get<int>() != format_version)
            throw std::invalid_argument("unsupported elimination cache version");
        const int n = j.at("n").get<int>();
        if (j.at("relation_hash").get<std::string>() != relation_set_hash(n))
            throw std::invalid_argument("elimination cache was built for a different relation set");
        auto out = std::make_unique<CanonicalForms>(n, limits);
        for (const auto& lj : j.at("layers")) {
            const int d = lj.at("degree").get<int>();
            if (d == 0)
                continue;
            if (d != static_cast<int>(out->layers_.size()))
                throw std::invalid_argument("elimination cache layers out of order");
            Layer l;
            for (const auto& cj : lj.at("columns")) {
                FKWord w;
                for (const auto& letter : cj)
                    w.push_back({letter[0].get<int>(), letter[1].get<int>()});
                l.column_index[w] = l.columns.size();
                l.columns.push_back(std::move(w));
            }
            for (const auto& rj : lj.at("rows")) {
                SparseInt row;
                for (const auto& e : rj.at("entries"))
                    row[e[0].get<std::size_t>()] = Integer(e[1].get<std::string>());
                l.pivot_row[rj.at("pivot").get<std::size_t>()] = l.rows.size();
                l.rows.push_back(std::move(row));
            }
            out->finish_layer(l);
            out->layers_.push_back(std::move(l));
            out->word_cache_.emplace_back();
        }
        return out;
    }

private:
    struct Layer {
        std::vector<FKWord> columns;
        std::map<FKWord, std::size_t> column_index;
        std::vector<SparseInt> rows;              // reduced echelon, primitive, positive pivots
        std::map<std::size_t, std::size_t> pivot_row; // column -> row
        std::vector<std::size_t> basis;           // non-pivot columns
        std::map<std::size_t, std::size_t> basis_position;
    };

    const Layer& layer(int d) {
        if (d < 0)
            throw std::invalid_argument("negative degree");
        if (d > limits_.max_degree)
            throw ResourceLimitError("degree " + std::to_string(d) + " exceeds the configured limit " +
                                     std::to_string(limits_.max_degree));
        while (static_cast<int>(layers_.size()) <= d)
            build_next_layer();
        return layers_[static_cast<std::size_t>(d)];
    }

    static Integer gcd(Integer a, Integer b) {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            Integer t = a % b;
            a = std::move(b);
            b = std::move(t);
        }
        return a;
    }

    static void make_primitive(SparseInt& row) {
        Integer g = 0;
        for (const auto& [c, x] : row)
            g = gcd(g, x);
        if (row.empty())
            return;
        if (row.begin()->second < 0)
            g = -g;
        if (g != 1)
            for (auto& [c, x] : row)
                x /= g;
    }

    /// row <- (p/g) row - (a/g) other, eliminating column `col`.
    static void eliminate(SparseInt& row, const SparseInt& other, std::size_t col) {
        const Integer a = row.at(col);
        const Integer p = other.at(col);
        const Integer g = gcd(a, p);
        const Integer ra = p / g;
        const Integer ro = a / g;
        if (ra != 1)
            for (auto& [c, x] : row)
                x *= ra;
        for (const auto& [c, x] : other) {
            auto [it, inserted] = row.try_emplace(c, 0);
            it->second -= ro * x;
            if (it->second == 0)
                row.erase(it);
        }
    }

    static void add_row(Layer& l, SparseInt row) {
        std::vector<std::size_t> hits;
        for (const auto& [c, x] : row)
            if (l.pivot_row.contains(c))
                hits.push_back(c);
        for (std::size_t c : hits)
            if (row.contains(c))
                eliminate(row, l.rows[l.pivot_row.at(c)], c);
        if (row.empty())
            return;
        make_primitive(row);
        const std::size_t pivot = row.begin()->first;
        for (SparseInt& other : l.rows) {
            if (other.contains(pivot)) {
                eliminate(other, row, pivot);
                make_primitive(other);
            }
        }
        l.pivot_row[pivot] = l.rows.size();
        l.rows.push_back(std::move(row));
    }

    static void finish_layer(Layer& l) {
        l.basis.clear();
        l.basis_position.clear();
        for (std::size_t c = 0; c < l.columns.size(); ++c) {
            if (!l.pivot_row.contains(c)) {
                l.basis_position[c] = l.basis.size();
                l.basis.push_back(c);
            }
        }
    }

    /// NF_{d-1}(prefix) (x) last as a vector over the columns of degree d.
    SparseRat lift(const SparseRat& prefix_nf, std::size_t d, const Generator& last) {
        const Layer& below = layers_[d - 1];
        const Layer& here = layers_[d];
        SparseRat out;
        for (const auto& [b, c] : prefix_nf) {
            FKWord w = below.columns[below.basis[b]];
            w.push_back(last);
            out[here.column_index.at(w)] += c;
        }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    }

    /// Reduces a column vector to its residue, indexed by basis position.
    SparseRat reduce(SparseRat vec, std::size_t d) const {
        const Layer& l = layers_[d];
        std::vector<std::size_t> hits;
        for (const auto& [c, x] : vec)
            if (l.pivot_row.contains(c))
                hits.push_back(c);
        for (std::size_t c : hits) {
            auto it = vec.find(c);
            if (it == vec.end())
                continue;
            const SparseInt& row = l.rows[l.pivot_row.at(c)];
            const Rational factor = it->second / Rational(row.at(c));
            for (const auto& [rc, rx] : row) {
                auto [jt, inserted] = vec.try_emplace(rc, 0);
                jt->second -= factor * Rational(rx);
                if (jt->second == 0)
                    vec.erase(jt);
            }
        }
        SparseRat out;
        for (const auto& [c, x] : vec)
            out[l.basis_position.at(c)] = x;
        return out;
    }

    /// Canonical residue of a word (letters canonical, any length up to the limit).
    const SparseRat& word_residue(const FKWord& w) {
        for (const Generator& g : w)
            if (g.j > n_ || g.i >= g.j || g.i < 1)
                throw std::invalid_argument("word " + to_string(w) + " is not over FK_" + std::to_string(n_));
        layer(static_cast<int>(w.size()));
        return word_residue_at(w, w.size());
    }

    std::map<std::size_t, SparseRat> residues(const FKElement& a) {
        std::map<std::size_t, SparseRat> out;
        for (const auto& [w, c] : a.terms()) {
            SparseRat& acc = out[w.size()];
            for (const auto& [b, x] : word_residue(w)) {
                auto [it, inserted] = acc.try_emplace(b, 0);
                it->second += x * Rational(c);
                if (it->second == 0)
                    acc.erase(it);
            }
        }
        return out;
    }

    void build_next_layer() {
        const std::size_t d = layers_.size();
        const Layer& below = layers_[d - 1];
        Layer l;
        for (std::size_t b : below.basis) {
            for (const Generator& g : gens_) {
                FKWord w = below.columns[b];
                w.push_back(g);
                l.column_index[w] = l.columns.size();
                l.columns.push_back(std::move(w));
            }
        }
        layers_.push_back(std::move(l));
        word_cache_.emplace_back();
        Layer& here = layers_.back();
        if (d >= 2) {
            const Layer& two_below = layers_[d - 2];
            for (std::size_t bcol : two_below.basis) {
                const FKWord& base = two_below.columns[bcol];
                for (const FreeCombination& r : relations_) {
                    SparseRat row;
                    for (const auto& [gh, c] : r) {
                        FKWord prefix = base;
                        prefix.push_back(gh[0]);
                        for (const auto& [col, x] : lift(word_residue_at(prefix, d - 1), d, gh[1]))
                            row[col] += x * Rational(c);
                    }
                    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
                    if (!row.empty())
                        add_row(here, to_integer_row(row));
                }
            }
        }
        finish_layer(here);
    }

    /// word_residue for a word whose layer already exists; callable while building layer d+1.
    const SparseRat& word_residue_at(const FKWord& w, std::size_t d) {
        auto& cache = word_cache_[d];
        if (auto it = cache.find(w); it != cache.end())
            return it->second;
        SparseRat result;
        if (d == 0) {
            result[0] = 1;
        } else {
            const FKWord prefix(w.begin(), w.end() - 1);
            SparseRat prefix_nf = word_residue_at(prefix, d - 1);
            result = reduce(lift(prefix_nf, d, w.back()), d);
        }
        return cache.emplace(w, std::move(result)).first->second;
    }

    static SparseInt to_integer_row(const SparseRat& row) {
        Integer lcm = 1;
        for (const auto& [c, x] : row) {
            const Integer den = denominator(x);
            lcm = lcm / gcd(lcm, den) * den;
        }
        SparseInt out;
        for (const auto& [c, x] : row)
            out[c] = numerator(x) * (lcm / denominator(x));
        make_primitive(out);
        return out;
    }

    int n_;
    CanonLimits limits_;
    std::vector<Generator> gens_;
    std::vector<FreeCombination> relations_;
    std::vector<Layer> layers_;
    std::vector<std::map<FKWord, SparseRat>> word_cache_;
    std::mutex mutex_;
};

namespace detail {

struct CanonRegistry {
    std::mutex mutex;
    CanonLimits limits;
    std::map<int, std::unique_ptr<CanonicalForms>> by_n;
};

inline CanonRegistry& canon_registry() {
    static CanonRegistry registry;
    return registry;
}

} // namespace detail

/// Limits used by the shared per-n instances; resets instances built with other limits.
inline void set_canon_limits(CanonLimits limits) {
    auto& reg = detail::canon_registry();
    std::lock_guard lock(reg.mutex);
    reg.limits = limits;
    reg.by_n.clear();
}

inline CanonLimits canon_limits() {
    auto& reg = detail::canon_registry();
    std::lock_guard lock(reg.mutex);
    return reg.limits;
}

/// Shared lazily built instance for window n.
inline CanonicalForms& canonical_forms(int n) {
    auto& reg = detail::canon_registry();
    std::lock_guard lock(reg.mutex);
    auto& slot = reg.by_n[n];
    if (!slot)
        slot = std::make_unique<CanonicalForms>(n, reg.limits);
    return *slot;
}

/// Replaces the shared instance for its window, e.g. with one loaded from a cache file.
inline void install_canonical_forms(std::unique_ptr<CanonicalForms> forms) {
    auto& reg = detail::canon_registry();
    std::lock_guard lock(reg.mutex);
    const int n = forms->n();
    reg.by_n[n] = std::move(forms);
}

inline FKElement canonical_form(int n, const FKElement& a) { return canonical_forms(n).canonical_form(a); }

inline bool fk_equal(int n, const FKElement& a, const FKElement& b) { return canonical_forms(n).equal(a, b); }

inline std::size_t graded_dimension(int n, int d) { return canonical_forms(n).dimension(d); }

} // namespace skewdd

#endif // SKEWDD_FK_CANONICAL_HPP
