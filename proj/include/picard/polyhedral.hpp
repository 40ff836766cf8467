#pragma once

// Exact polyhedral-cone utilities over the rationals: generator computation
// by the double description method (Motzkin's dual form of Fourier-Motzkin
// elimination), a dense rational solver, and an active-set maximizer for a
// quadratic form that is concave on an affine slice.

#include "picard/arith.hpp"

#include <cstddef>
#include <vector>

namespace picard {

/// V-representation of a polyhedral cone: cone(rays) + span(lines).
/// Rays and lines are primitive integer vectors; rays are sorted.
struct ConeGenerators {
    std::vector<IntVector> rays;
    std::vector<IntVector> lines;
};

/// Generators of {x in Q^dim : row . x >= 0 for every row}.
ConeGenerators cone_generators(const std::vector<IntVector>& inequalities, std::size_t dim);

/// Solves a square system exactly; throws PreconditionError if singular.
RatVector solve_linear(RatMatrix a, RatVector b);

/// Rank of a rational matrix.
std::size_t matrix_rank(RatMatrix a);

struct ConcaveMaxResult {
    RatVector point;
    Rational value;
    /// True when the search stopped early because value > stop_above.
    bool exceeded = false;
};

/// Maximizes x^T gram x over {x : eq_rows x = eq_rhs, ineq_rows x >= 0}.
/// The form must be negative definite on the null space of eq_rows and
/// `start` must be feasible. Stops as soon as a point with value > stop_above
/// is reached. Throws BoundExceededError after max_iterations.
ConcaveMaxResult maximize_concave_form(const IntMatrix& gram, const RatMatrix& eq_rows, const RatVector& eq_rhs,
                                       const RatMatrix& ineq_rows, RatVector start, const Rational& stop_above,
                                       std::size_t max_iterations = 10000);

}  // namespace picard
