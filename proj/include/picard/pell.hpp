#pragma once

// Pell equations x^2 - N y^2 = 1.

#include "picard/arith.hpp"

#include <cstddef>
#include <optional>

namespace picard {

struct PellSolution {
    BigInt x;
    BigInt y;
    BigInt n_param;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

inline constexpr std::size_t default_pell_index_cap = 64;

/// Exact root when n is a perfect square. Throws PreconditionError for n < 0.
std::optional<BigInt> is_perfect_square(const BigInt& n);

/// Positive solution with minimal x, from the continued fraction of sqrt(N).
/// Throws PerfectSquareError when N is a square and PreconditionError when N < 2.
PellSolution fundamental_solution(const BigInt& n);

/// One step of the recursion generated by `fund`.
PellSolution next_solution(const PellSolution& s, const PellSolution& fund);

/// (x1^2 + N y1^2, 2 x1 y1): the square of the fundamental unit.
PellSolution second_solution(const BigInt& n);

/// k-th solution of the recursion, k >= 1 (k == 1 is the fundamental one).
PellSolution nth_solution(const BigInt& n, std::size_t k);

struct IndexedPellSolution {
    PellSolution solution;
    std::size_t index = 0;
};

/// First solution (index k >= 1) whose x is congruent to residue_x modulo
/// `modulus`. Throws BoundExceededError after `index_cap` solutions.
IndexedPellSolution solution_with_residue(const BigInt& n, const BigInt& modulus, const BigInt& residue_x,
                                          std::size_t index_cap = default_pell_index_cap);

bool satisfies_pell(const PellSolution& s);

}  // namespace picard
