#pragma once

// Classes in the plane <E, D> on the far side of D from a boundary class E,
// obtained from Pell equations, and the alpha_k family that approaches an
// isotropic class alpha while keeping the square of E.

#include "picard/catalog.hpp"
#include "picard/lattice.hpp"
#include "picard/pell.hpp"

#include <optional>
#include <string>

namespace picard {

/// Derived quantities of a pair (D, E): d = D.D, t = div(E), E.D = b t,
/// E.E = t e and N = t^2 b^2 - t d e.
struct AlphaContext {
    Lattice lattice;
    LatticeVector d_class;
    LatticeVector e_class;
    BigInt d;
    BigInt t;
    BigInt b;
    BigInt e;
    BigInt n;
};

enum class AlphaBranch { case_a, case_b_square_n, case_b_pell };

std::string to_string(AlphaBranch branch);

struct AlphaResult {
    LatticeVector alpha;
    AlphaBranch branch = AlphaBranch::case_a;
    std::optional<PellSolution> pell_solution_used;
    /// Coefficients in alpha = d_coeff * D + e_coeff * E.
    BigInt d_coeff;
    BigInt e_coeff;
    bool certified_effective = false;
    bool certified_primitive = false;
    std::optional<BigInt> div_alpha;
    /// disc_class(alpha) == -disc_class(E); only filled by alpha_effective.
    std::optional<bool> disc_class_negated;
    /// Modulus the chosen Pell x was required to be 1 modulo (K3[n], Kum[n]).
    std::optional<BigInt> congruence_modulus;
};

/// Throws PreconditionError when D.D <= 0, E == 0 or E.D <= 0.
AlphaContext build_context(const Lattice& lattice, const LatticeVector& d_class, const LatticeVector& e_class);

/// Isotropic E: alpha = 2 b t D - d E.
AlphaResult alpha_case_a(const AlphaContext& ctx);

/// Negative E: square-root branch when N is a square, fundamental Pell
/// solution otherwise.
AlphaResult alpha_case_b(const AlphaContext& ctx);

/// alpha = -t e y D - (x - t b y) E for an arbitrary solution (x, y) of
/// x^2 - N y^2 = 1; its square is t e (x^2 - N y^2).
LatticeVector alpha_from_pell(const AlphaContext& ctx, const BigInt& x, const BigInt& y);

/// The Pell branch with the solution the deformation type calls for, plus
/// explicit primitivity, divisibility and discriminant-class checks. A failed
/// check raises ContractViolation.
AlphaResult alpha_effective(const AlphaContext& ctx, const DeformationType& type);

/// -2 k^2 q(a') p^3 alpha - 2 k p^2 a' + E with p = alpha.E.
LatticeVector alpha_k(const Lattice& lattice, const LatticeVector& alpha, const LatticeVector& alpha_prime,
                      const LatticeVector& e_class, const BigInt& k);

/// D' - (D'.E / E.E) E, the projection of D' to E^perp.
RatVector beta_projection(const Lattice& lattice, const LatticeVector& d_prime, const LatticeVector& e_class);

}  // namespace picard
