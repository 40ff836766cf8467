#pragma once

// Reflections in negative classes and the chamber of a finite root set that
// contains a given positive class.

#include "picard/catalog.hpp"
#include "picard/lattice.hpp"

#include <cstddef>
#include <vector>

namespace picard {

inline constexpr std::size_t default_reduce_step_cap = 10000;
inline constexpr std::size_t default_wall_test_limit = 8;

/// v - (2 v.r / r.r) r. Throws PreconditionError for r.r >= 0 and
/// NonIntegralReflectionError when the coefficient is not an integer.
LatticeVector reflect(const Lattice& lattice, const LatticeVector& root, const LatticeVector& v);

/// Matrix of reflect(root, .) acting on coordinate columns.
IntMatrix reflection_matrix(const Lattice& lattice, const LatticeVector& root);

/// 2 (root . b_i) divisible by root.root for every basis vector b_i.
bool reflection_is_integral(const Lattice& lattice, const DeformationType& type, const LatticeVector& root);

struct ChamberReduction {
    LatticeVector representative;
    /// Reflections to apply to `representative`, leftmost first, to recover
    /// the input (the reverse of the order in which they were applied).
    std::vector<LatticeVector> word;
    std::size_t steps = 0;
};

/// Reflects v until it pairs nonnegatively with every root. Pivot: the root
/// with the most negative pairing, lowest index on ties. Throws
/// BoundExceededError after max_steps reflections.
ChamberReduction weyl_reduce(const Lattice& lattice, const std::vector<LatticeVector>& roots, const LatticeVector& v,
                             std::size_t max_steps = default_reduce_step_cap);

/// Whether the hyperplane of `candidate` carries a facet of the chamber
///   { x in positive cone : x.r > 0 for all roots r }
/// containing `ample`. Roots are oriented to pair positively with `ample`;
/// among roots spanning the same ray only the first one listed can be a wall.
/// Decided exactly: double description for the polyhedral part, then an
/// active-set maximization of the form on the facet slice.
bool is_chamber_wall(const Lattice& lattice, const std::vector<LatticeVector>& roots, const LatticeVector& candidate,
                     const LatticeVector& ample, std::size_t wall_test_limit = default_wall_test_limit);

/// Root oriented to pair positively with `ample`; throws AmpleOnWallError
/// when the pairing is zero.
LatticeVector orient_to(const Lattice& lattice, const LatticeVector& root, const LatticeVector& ample);

/// Whether u and v span the same line.
bool proportional(const LatticeVector& u, const LatticeVector& v);

}  // namespace picard
