#pragma once

// Shared generators and brute-force oracles for the test programs. The
// oracles deliberately avoid the library routines they check.

#include "picard/alpha.hpp"
#include "picard/cone.hpp"
#include "picard/lattice.hpp"
#include "picard/pell.hpp"

#include <random>
#include <utility>

namespace picard::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Random unimodular matrix and its inverse, as a product of elementary
/// column operations with small multipliers.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, std::size_t n, int ops = 4) {
    IntMatrix u = identity_matrix(n), inv = identity_matrix(n);
    if (n < 2) return {u, inv};
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        const long c = uniform(rng, 0, 1) ? 1 : -1;
        // column_i += c * column_j on u; row_j -= c * row_i on the inverse.
        for (std::size_t r = 0; r < n; ++r) u[r][i] += c * u[r][j];
        for (std::size_t r = 0; r < n; ++r) inv[j][r] -= c * inv[i][r];
    }
    return {u, inv};
}

/// U^T G U.
inline IntMatrix congruent(const IntMatrix& g, const IntMatrix& u) { return multiply(transpose(u), multiply(g, u)); }

inline IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size() + b.size();
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j];
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m[a.size() + i][a.size() + j] = b[i][j];
    return m;
}

inline IntMatrix diagonal(const IntVector& d) {
    IntMatrix m(d.size(), IntVector(d.size(), 0));
    for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

/// A basis change together with the coordinates of the old basis vectors.
struct Transformed {
    Lattice lattice;
    IntMatrix inverse;  ///< old coordinates -> new coordinates
    LatticeVector to_new(const IntVector& old) const { return LatticeVector(multiply(inverse, old)); }
};

inline Transformed transform(Rng& rng, const IntMatrix& g, int ops = 4) {
    auto [u, inv] = random_unimodular(rng, g.size(), ops);
    return {Lattice(congruent(g, u)), inv};
}

/// Hyperbolic lattice of the given rank: <a> + <-b_1> + ... in a scrambled basis.
inline Lattice random_hyperbolic(Rng& rng, std::size_t rank, long max_entry = 6, int ops = 4) {
    IntVector d{uniform(rng, 1, max_entry)};
    for (std::size_t i = 1; i < rank; ++i) d.push_back(-uniform(rng, 1, max_entry));
    return transform(rng, diagonal(d), ops).lattice;
}

inline LatticeVector random_vector(Rng& rng, std::size_t n, long range) {
    IntVector v(n);
    for (auto& x : v) x = uniform(rng, -range, range);
    return LatticeVector(v);
}

inline LatticeVector random_nonzero_vector(Rng& rng, std::size_t n, long range) {
    while (true) {
        LatticeVector v = random_vector(rng, n, range);
        if (!v.is_zero()) return v;
    }
}

/// Random vector of positive square; the coordinate range widens until one
/// is found, so scrambled bases cannot stall the search.
inline LatticeVector random_positive_vector(Rng& rng, const Lattice& lattice, long range) {
    for (int tries = 0;; ++tries) {
        if (tries > 0 && tries % 50 == 0) ++range;
        LatticeVector v = random_nonzero_vector(rng, lattice.rank(), range);
        if (norm(lattice, v) > 0) return v;
    }
}

// ---------------------------------------------------------------------------
// Oracles

/// Smallest y >= 1 with N y^2 + 1 a square, by direct search over y (128-bit
/// arithmetic). Empty when no solution has y <= y_cap.
std::optional<std::pair<BigInt, BigInt>> pell_brute_force(long n, long long y_cap);

/// Minimal Pell solution by the chakravala method, an algorithm independent
/// of continued fractions; used where the brute-force search is out of reach.
std::pair<BigInt, BigInt> pell_chakravala(long n);

/// Exact coordinate box containing every v with q''(v) <= limit, where q'' is
/// the positive definite form used by the enumeration.
IntVector enumeration_box(const Lattice& lattice, const LatticeVector& ample, const BigInt& limit);

/// Direct search of that box with an independently coded predicate.
std::vector<LatticeVector> enumerate_by_box(const Lattice& lattice, const DeformationType& type,
                                            const LatticeVector& ample, const BigInt& bound);

/// Lattice with a vector of the given (square, divisibility) profile, in a
/// scrambled basis. Returns the lattice and the profile vector.
std::pair<Lattice, LatticeVector> lattice_with_profile(Rng& rng, const ExceptionalProfile& profile,
                                                       std::size_t rank);

/// Random (L, alpha, alpha', E) with alpha isotropic, alpha.E > 0 and alpha'
/// negative and orthogonal to both.
struct AlphaKTriple {
    Lattice lattice;
    LatticeVector alpha;
    LatticeVector alpha_prime;
    LatticeVector e_class;
};
AlphaKTriple random_alpha_k_triple(Rng& rng, std::size_t rank);

/// Random lattice of signature (1, rank - 1) with D, E satisfying the
/// alpha-construction preconditions; `isotropic` selects E.E == 0.
struct AlphaInstance {
    Lattice lattice;
    LatticeVector d_class;
    LatticeVector e_class;
};
AlphaInstance random_alpha_instance(Rng& rng, std::size_t rank, bool isotropic);

}  // namespace picard::testing
