#include "picard/pell.hpp"

#include "picard/errors.hpp"

namespace picard {

std::optional<BigInt> is_perfect_square(const BigInt& n) {
    if (n < 0) throw PreconditionError("is_perfect_square: negative input " + n.str());
    return exact_sqrt(n);
}

namespace {

void require_pell_parameter(const BigInt& n, const char* what) {
    if (n < 2) throw PreconditionError(std::string(what) + ": N must be at least 2, got " + n.str());
    if (exact_sqrt(n)) throw PerfectSquareError(std::string(what) + ": N = " + n.str() + " is a perfect square");
}

}  // namespace

PellSolution fundamental_solution(const BigInt& n) {
    require_pell_parameter(n, "fundamental_solution");

    // Convergents p/q of sqrt(N) = [a0; a1, a2, ...], with the usual
    // (m, d, a) recurrence for the partial quotients.
    const BigInt a0 = isqrt(n);
    BigInt m = 0, d = 1, a = a0;
    BigInt p_prev = 1, p = a0;
    BigInt q_prev = 0, q = 1;
    while (p * p - n * q * q != 1) {
        m = d * a - m;
        d = (n - m * m) / d;
        a = (a0 + m) / d;
        BigInt p_next = a * p + p_prev;
        BigInt q_next = a * q + q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
    }
    return {p, q, n};
}

PellSolution next_solution(const PellSolution& s, const PellSolution& fund) {
    if (s.n_param != fund.n_param)
        throw PreconditionError("next_solution: solutions of different equations (N = " + s.n_param.str() + " vs " +
                                fund.n_param.str() + ")");
    const BigInt& n = s.n_param;
    return {fund.x * s.x + n * fund.y * s.y, fund.x * s.y + fund.y * s.x, n};
}

PellSolution second_solution(const BigInt& n) {
    PellSolution f = fundamental_solution(n);
    return {f.x * f.x + n * f.y * f.y, 2 * f.x * f.y, n};
}

PellSolution nth_solution(const BigInt& n, std::size_t k) {
    if (k == 0) throw PreconditionError("nth_solution: index starts at 1");
    const PellSolution fund = fundamental_solution(n);
    PellSolution s = fund;
    for (std::size_t i = 1; i < k; ++i) s = next_solution(s, fund);
    return s;
}

IndexedPellSolution solution_with_residue(const BigInt& n, const BigInt& modulus, const BigInt& residue_x,
                                          std::size_t index_cap) {
    if (modulus < 1) throw PreconditionError("solution_with_residue: modulus must be positive");
    const PellSolution fund = fundamental_solution(n);
    const BigInt target = floor_mod(residue_x, modulus);
    PellSolution s = fund;
    for (std::size_t k = 1; k <= index_cap; ++k) {
        if (floor_mod(s.x, modulus) == target) return {s, k};
        s = next_solution(s, fund);
    }
    throw BoundExceededError("solution_with_residue: no solution with x = " + target.str() + " mod " + modulus.str() +
                             " within index cap " + std::to_string(index_cap));
}

bool satisfies_pell(const PellSolution& s) { return s.x * s.x - s.n_param * s.y * s.y == 1; }

}  // namespace picard
