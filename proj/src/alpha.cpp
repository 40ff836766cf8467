#include "picard/alpha.hpp"

#include "picard/errors.hpp"

namespace picard {

std::string to_string(AlphaBranch branch) {
    switch (branch) {
        case AlphaBranch::case_a: return "case_a";
        case AlphaBranch::case_b_square_n: return "case_b_square_N";
        case AlphaBranch::case_b_pell: return "case_b_pell";
    }
    return "?";
}

AlphaContext build_context(const Lattice& lattice, const LatticeVector& d_class, const LatticeVector& e_class) {
    check_dimension(lattice, d_class, "build_context");
    check_dimension(lattice, e_class, "build_context");
    if (e_class.is_zero()) throw PreconditionError("build_context: E is the zero class");
    const BigInt d = norm(lattice, d_class);
    if (d <= 0) throw PreconditionError("build_context: D must have positive square, got " + d.str());
    const BigInt bt = pairing(lattice, e_class, d_class);
    if (bt <= 0) throw PreconditionError("build_context: E.D must be positive, got " + bt.str());

    AlphaContext ctx{lattice, d_class, e_class, d, divisibility(lattice, e_class), 0, 0, 0};
    ctx.b = bt / ctx.t;
    ctx.e = norm(lattice, e_class) / ctx.t;
    ctx.n = ctx.t * ctx.t * ctx.b * ctx.b - ctx.t * ctx.d * ctx.e;
    return ctx;
}

namespace {

LatticeVector combine(const AlphaContext& ctx, const BigInt& d_coeff, const BigInt& e_coeff) {
    return d_coeff * ctx.d_class + e_coeff * ctx.e_class;
}

void require_opposite_sides(const AlphaResult& r, const char* what) {
    if (r.d_coeff <= 0 || r.e_coeff >= 0)
        throw ContractViolation(std::string(what) + ": alpha = " + r.d_coeff.str() + " D + " + r.e_coeff.str() +
                                " E is not on the far side of D");
}

}  // namespace

AlphaResult alpha_case_a(const AlphaContext& ctx) {
    if (ctx.e != 0) throw PreconditionError("alpha_case_a: requires E.E = 0");
    AlphaResult r;
    r.branch = AlphaBranch::case_a;
    r.d_coeff = 2 * ctx.b * ctx.t;
    r.e_coeff = -ctx.d;
    r.alpha = combine(ctx, r.d_coeff, r.e_coeff);
    if (norm(ctx.lattice, r.alpha) != 0) throw ContractViolation("alpha_case_a: alpha is not isotropic");
    if (pairing(ctx.lattice, r.alpha, ctx.d_class) != ctx.b * ctx.t * ctx.d)
        throw ContractViolation("alpha_case_a: alpha.D differs from b t d");
    require_opposite_sides(r, "alpha_case_a");
    return r;
}

LatticeVector alpha_from_pell(const AlphaContext& ctx, const BigInt& x, const BigInt& y) {
    return combine(ctx, -ctx.t * ctx.e * y, -(x - ctx.t * ctx.b * y));
}

AlphaResult alpha_case_b(const AlphaContext& ctx) {
    if (ctx.e >= 0) throw PreconditionError("alpha_case_b: requires E.E < 0");
    AlphaResult r;
    if (auto root = exact_sqrt(ctx.n)) {
        r.branch = AlphaBranch::case_b_square_n;
        r.d_coeff = -ctx.t * ctx.e * *root;
        r.e_coeff = -(ctx.n - *root * ctx.t * ctx.b);
        r.alpha = combine(ctx, r.d_coeff, r.e_coeff);
        if (norm(ctx.lattice, r.alpha) != 0) throw ContractViolation("alpha_case_b: square branch is not isotropic");
    } else {
        r.branch = AlphaBranch::case_b_pell;
        PellSolution s = fundamental_solution(ctx.n);
        r.d_coeff = -ctx.t * ctx.e * s.y;
        r.e_coeff = -(s.x - ctx.t * ctx.b * s.y);
        r.alpha = combine(ctx, r.d_coeff, r.e_coeff);
        r.pell_solution_used = std::move(s);
        if (norm(ctx.lattice, r.alpha) != ctx.t * ctx.e)
            throw ContractViolation("alpha_case_b: Pell branch square differs from t e");
    }
    require_opposite_sides(r, "alpha_case_b");
    return r;
}

AlphaResult alpha_effective(const AlphaContext& ctx, const DeformationType& type) {
    const Lattice& L = ctx.lattice;
    if (ctx.e >= 0) throw PreconditionError("alpha_effective: requires E.E < 0");
    if (!is_primitive(ctx.e_class)) throw NotPrimitiveError("alpha_effective: E is not primitive");
    if (!is_primitive(ctx.d_class)) throw NotPrimitiveError("alpha_effective: D is not primitive");
    const auto profile = matching_profile(L, type, ctx.e_class);
    if (!profile)
        throw PreconditionError("alpha_effective: (E.E, div E) = (" + norm(L, ctx.e_class).str() + ", " +
                                ambient_divisibility(L, type, ctx.e_class).str() + ") matches no " +
                                type.display_name() + " profile");
    if (exact_sqrt(ctx.n))
        throw PerfectSquareError("alpha_effective: N = " + ctx.n.str() + " is a square; use alpha_case_b");

    AlphaResult r;
    r.branch = AlphaBranch::case_b_pell;
    PellSolution s;
    switch (type.kind()) {
        case DeformationKind::k3:
        case DeformationKind::og6:
        case DeformationKind::og10: s = fundamental_solution(ctx.n); break;
        case DeformationKind::k3n:
            s = second_solution(ctx.n);
            r.congruence_modulus = BigInt(2 * (*type.n() - 1));
            break;
        case DeformationKind::kum_n:
            s = second_solution(ctx.n);
            r.congruence_modulus = BigInt(2 * (*type.n() + 1));
            break;
    }
    if (r.congruence_modulus) {
        const BigInt& m = *r.congruence_modulus;
        if (floor_mod(s.x, m) != floor_mod(BigInt(1), m) ||
            floor_mod(s.x - ctx.t * ctx.b * s.y, m) != floor_mod(BigInt(1), m))
            throw ContractViolation("alpha_effective: chosen Pell solution violates x = 1 mod " + m.str());
    }

    r.d_coeff = -ctx.t * ctx.e * s.y;
    r.e_coeff = -(s.x - ctx.t * ctx.b * s.y);
    r.alpha = combine(ctx, r.d_coeff, r.e_coeff);
    r.pell_solution_used = s;
    require_opposite_sides(r, "alpha_effective");

    if (norm(L, r.alpha) != ctx.t * ctx.e) throw ContractViolation("alpha_effective: alpha.alpha differs from t e");
    r.certified_primitive = content(r.alpha.coords()) == 1;
    if (!r.certified_primitive)
        throw ContractViolation("alpha_effective: alpha = " + to_string(r.alpha) + " is not primitive");
    r.div_alpha = ambient_divisibility(L, type, r.alpha);
    if (*r.div_alpha != profile->div)
        throw ContractViolation("alpha_effective: div(alpha) = " + r.div_alpha->str() + ", expected " +
                                profile->div.str());

    const auto& group = L.discriminant_group();
    r.disc_class_negated = disc_class(L, r.alpha) == negate(group, disc_class(L, ctx.e_class));
    const bool needs_disc_relation = type.kind() == DeformationKind::k3n || type.kind() == DeformationKind::kum_n;
    if (needs_disc_relation && !*r.disc_class_negated)
        throw ContractViolation("alpha_effective: [alpha/div] differs from [-E/div] in A_L");

    r.certified_effective = true;
    return r;
}

LatticeVector alpha_k(const Lattice& lattice, const LatticeVector& alpha, const LatticeVector& alpha_prime,
                      const LatticeVector& e_class, const BigInt& k) {
    check_dimension(lattice, alpha, "alpha_k");
    check_dimension(lattice, alpha_prime, "alpha_k");
    check_dimension(lattice, e_class, "alpha_k");
    if (k < 1) throw PreconditionError("alpha_k: k must be at least 1");
    if (norm(lattice, alpha) != 0) throw PreconditionError("alpha_k: alpha must be isotropic");
    const BigInt p = pairing(lattice, alpha, e_class);
    if (p <= 0) throw PreconditionError("alpha_k: alpha.E must be positive, got " + p.str());
    if (pairing(lattice, alpha_prime, alpha) != 0) throw PreconditionError("alpha_k: alpha' is not orthogonal to alpha");
    if (pairing(lattice, alpha_prime, e_class) != 0) throw PreconditionError("alpha_k: alpha' is not orthogonal to E");
    const BigInt q_prime = norm(lattice, alpha_prime);
    if (q_prime >= 0) throw PreconditionError("alpha_k: alpha' must have negative square");

    const BigInt coeff_alpha = -2 * k * k * q_prime * p * p * p;
    const BigInt coeff_prime = -2 * k * p * p;
    return coeff_alpha * alpha + coeff_prime * alpha_prime + e_class;
}

RatVector beta_projection(const Lattice& lattice, const LatticeVector& d_prime, const LatticeVector& e_class) {
    check_dimension(lattice, d_prime, "beta_projection");
    check_dimension(lattice, e_class, "beta_projection");
    const BigInt ee = norm(lattice, e_class);
    if (ee == 0) throw PreconditionError("beta_projection: E is isotropic");
    if (ee > 0) throw PreconditionError("beta_projection: E must have negative square");
    const Rational f = Rational(pairing(lattice, d_prime, e_class)) / Rational(ee);
    RatVector beta(d_prime.size());
    for (std::size_t i = 0; i < beta.size(); ++i) beta[i] = Rational(d_prime[i]) - f * Rational(e_class[i]);
    return beta;
}

}  // namespace picard
