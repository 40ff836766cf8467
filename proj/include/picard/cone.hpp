#pragma once

// Bounded enumeration of numerically exceptional classes and the cone
// analysis built on it: chamber walls, the polyhedral/circular verdict, the
// rank-2 ray classification and the finiteness and Mori-dream-space reports.
//
// Every statement about an infinite set is truncated at an explicit bound on
// the pairing with the ample class, and the reports carry that bound.

#include "picard/catalog.hpp"
#include "picard/lattice.hpp"
#include "picard/pell.hpp"
#include "picard/polyhedral.hpp"
#include "picard/weyl.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace picard {

struct EnumerationBound {
    BigInt max_ample_pairing = 10;
    std::size_t wall_test_limit = default_wall_test_limit;
    std::size_t pell_index_cap = default_pell_index_cap;
};

/// Throws PreconditionError unless every field is positive.
void validate(const EnumerationBound& bound);

/// All primitive v matching a profile of `type` with 0 < v.ample <= B,
/// sorted lexicographically. Requires signature (1, rank - 1).
std::vector<LatticeVector> enumerate_exceptional(const Lattice& lattice, const DeformationType& type,
                                                 const LatticeVector& ample, const EnumerationBound& bound);

/// Every integer vector with q'(v) <= limit for the positive definite form
/// q'(v) = -(h.h)(v.v) + 2 (v.h)^2, excluding 0. Used by enumerate_exceptional.
std::vector<LatticeVector> short_vectors(const Lattice& lattice, const LatticeVector& ample, const BigInt& limit);

/// p + q sqrt(d), d > 0 not necessarily squarefree.
struct QuadraticSurd {
    BigInt p;
    BigInt q;
    BigInt d;
    int sign() const;
};

enum class RaySource { exceptional_class, isotropic };

struct RayDescriptor {
    RaySource source = RaySource::isotropic;
    bool rational = true;
    /// Primitive generator when rational.
    std::optional<LatticeVector> vector;
    /// Generator coordinates in Q(sqrt(discriminant)) when irrational.
    std::optional<std::array<QuadraticSurd, 2>> components;
    /// Slope x/y = (slope_a + slope_sign sqrt(discriminant)) / slope_c for
    /// isotropic rays of a form with nonzero leading coefficient.
    BigInt slope_a = 0;
    int slope_sign = 0;
    BigInt slope_c = 0;
    BigInt discriminant = 0;
};

struct Rank2Report {
    RayDescriptor ray1;
    RayDescriptor ray2;
    bool both_rational = false;
    bool bir_finite = false;
    /// h^2 - a c for the Gram matrix [[a, h], [h, c]].
    BigInt discriminant;
    BigInt bound;
};

struct TruncatedFlag {
    bool value = false;
    BigInt bound;
};

struct FinitenessReport {
    TruncatedFlag eff_rational_polyhedral_up_to_bound;
    TruncatedFlag bir_finite;
    TruncatedFlag quotient_finite;
    TruncatedFlag finitely_many_exceptional_up_to_bound;
    bool equivalence_applicable = false;
    /// Number of walls >= rank; only set for polyhedral candidates of rank >= 3.
    std::optional<bool> neg_count_at_least_rank;
    std::string note;
};

enum class MdsReason {
    rank_below_3_eff_rational,
    rank_below_3_eff_irrational,
    rank_at_least_3_neg_nonempty_finite,
    rank_at_least_3_neg_empty,
    rank_at_least_3_neg_not_finite_up_to_bound,
};

std::string to_string(MdsReason reason);

struct MDSReport {
    bool is_mds = false;
    MdsReason reason = MdsReason::rank_at_least_3_neg_empty;
};

enum class Verdict { circular_up_to_bound, polyhedral_candidate };

std::string to_string(Verdict verdict);

struct ConeAnalysis {
    Lattice lattice;
    DeformationType type;
    LatticeVector ample;
    EnumerationBound bound;
    Signature sig;
    std::vector<LatticeVector> exceptional_found;
    std::vector<LatticeVector> chamber_walls;
    Verdict verdict = Verdict::circular_up_to_bound;
    std::vector<LatticeVector> extremal_rays;
    /// Inequalities x.w >= 0, one Gram row G w per wall.
    std::vector<IntVector> mov_candidate;
    /// Generators of the linear cone cut out by mov_candidate.
    ConeGenerators mov_generators;
    /// Every generator of mov_generators lies in the closed positive cone.
    bool mov_inside_positive_cone = false;
    bool duality_checked = false;
    std::size_t ample_reduction_steps = 0;
    /// Profile classes orthogonal to the ample class. They are not part of
    /// the enumeration; a nonempty list means the ample class sits on walls
    /// of classes outside the search.
    std::vector<LatticeVector> orthogonal_classes;
    std::optional<Rank2Report> rank2;
    FinitenessReport finiteness;
    MDSReport mds;
};

/// Full pipeline. Throws SignatureError,
/// BoundExceededError (rank over the wall-test limit) or ContractViolation.
ConeAnalysis analyze(const Lattice& lattice, const DeformationType& type, const LatticeVector& ample,
                     const EnumerationBound& bound);

/// Rank-2 ray classification; throws PreconditionError unless rank == 2 and
/// ContractViolation if one ray is rational and the other is not.
Rank2Report classify_rank2(const Lattice& lattice, const DeformationType& type, const LatticeVector& ample,
                           const EnumerationBound& bound);

/// Same, from already computed chamber walls.
Rank2Report rank2_from_walls(const Lattice& lattice, const LatticeVector& ample,
                             const std::vector<LatticeVector>& walls, const BigInt& bound);

FinitenessReport finiteness_report(const ConeAnalysis& analysis);
MDSReport mds_classify(const ConeAnalysis& analysis);

/// Generators of the dual cone {y : y.g >= 0 for all g} under the Gram pairing.
ConeGenerators dual_cone(const Lattice& lattice, const ConeGenerators& cone);

}  // namespace picard
