#ifndef SKEWDD_RANDOM_HPP
#define SKEWDD_RANDOM_HPP

// Seeded generators for property checks.

#include "fk_algebra.hpp"
#include "fk_canonical.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace skewdd {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Coefficients in [-9, 9], total degree <= max_degree, in x_1..x_n.
inline Polynomial random_polynomial(Rng& rng, int n, int max_degree, int max_terms = 6) {
    Polynomial p;
    const int terms = uniform(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        const int degree = uniform(rng, 0, max_degree);
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < degree; ++k)
            ++e[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
        p.add_term(Monomial(std::move(e)), uniform(rng, -9, 9));
    }
    return p;
}

inline Permutation random_permutation(Rng& rng, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        images[static_cast<std::size_t>(k)] = k + 1;
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_one_line(std::move(images));
}

/// Uniform letters from x_ij, i < j <= n; adjacent repeats allowed.
inline FKWord random_word(Rng& rng, int n, int length) {
    const std::vector<Generator> gens = generators(n);
    FKWord w;
    for (int k = 0; k < length; ++k)
        w.push_back(gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(gens.size()) - 1))]);
    return w;
}

/// Word of the given length with no two equal adjacent letters (nonzero in the free model).
inline FKWord random_nonzero_word(Rng& rng, int n, int length) {
    const std::vector<Generator> gens = generators(n);
    FKWord w;
    while (static_cast<int>(w.size()) < length) {
        const Generator g = gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(gens.size()) - 1))];
        if (w.empty() || w.back() != g)
            w.push_back(g);
    }
    return w;
}

/// Random homogeneous element: a few nonzero words of one length with coefficients in [-3, 3].
inline FKElement random_element(Rng& rng, int n, int degree, int max_terms = 3) {
    FKElement a;
    const int terms = uniform(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t)
        a.add_term(random_nonzero_word(rng, n, degree), uniform(rng, -3, 3));
    return a;
}

/// u r v for a random degree-2 relation r and random words u, v, total degree d >= 2.
inline FKElement random_ideal_element(Rng& rng, int n, int d) {
    const std::vector<FreeCombination> rels = degree_two_relations(n);
    const FreeCombination& r = rels[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rels.size()) - 1))];
    const int left = uniform(rng, 0, d - 2);
    const FKWord u = random_word(rng, n, left);
    const FKWord v = random_word(rng, n, d - 2 - left);
    FKElement out;
    for (const auto& [w, c] : r) {
        FKWord full = u;
        full.insert(full.end(), w.begin(), w.end());
        full.insert(full.end(), v.begin(), v.end());
        out.add_term(full, c);
    }
    return out;
}

} // namespace skewdd

#endif // SKEWDD_RANDOM_HPP
