#include "doctest.h"

#include "picard/alpha.hpp"
#include "picard/errors.hpp"
#include "support.hpp"

using namespace picard;
using namespace picard::testing;

TEST_CASE("context") {
    const AlphaContext c = build_context(Lattice({{2, 2}, {2, -2}}), {1, 0}, {0, 1});
    CHECK(c.d == 2);
    CHECK(c.t == 2);
    CHECK(c.b == 1);
    CHECK(c.e == -1);
    CHECK(c.n == 8);
    const Lattice A({{2, 1}, {1, -2}});
    CHECK_THROWS_AS(build_context(A, {0, 1}, {1, 0}), PreconditionError);
    CHECK_THROWS_AS(build_context(A, {1, 0}, {0, 0}), PreconditionError);
    CHECK_THROWS_AS(build_context(A, {1, 0}, {0, -1}), PreconditionError);
}

TEST_CASE("isotropic boundary class") {
    const AlphaResult r = alpha_case_a(build_context(Lattice({{2, 1}, {1, 0}}), {1, 0}, {0, 1}));
    CHECK(r.alpha == LatticeVector{2, -2});
    CHECK(r.branch == AlphaBranch::case_a);
    const Lattice L({{2, 0, 1}, {0, -2, 0}, {1, 0, 0}});
    const AlphaResult s = alpha_case_a(build_context(L, {1, 0, 0}, {0, 0, 1}));
    CHECK(s.alpha == LatticeVector{2, 0, -2});
    CHECK(norm(L, s.alpha) == 0);
    CHECK_THROWS_AS(alpha_case_a(build_context(Lattice({{2, 1}, {1, -2}}), {1, 0}, {0, 1})), PreconditionError);
}

TEST_CASE("negative boundary class") {
    const Lattice A({{2, 1}, {1, -2}});
    const AlphaResult p = alpha_case_b(build_context(A, {1, 0}, {0, 1}));
    CHECK(p.branch == AlphaBranch::case_b_pell);
    CHECK(p.alpha == LatticeVector{8, -5});
    CHECK(norm(A, p.alpha) == -2);
    REQUIRE(p.pell_solution_used.has_value());
    CHECK(*p.pell_solution_used == PellSolution{9, 4, 5});

    const Lattice B({{4, 1}, {1, -2}});
    const AlphaResult s = alpha_case_b(build_context(B, {1, 0}, {0, 1}));
    CHECK(s.branch == AlphaBranch::case_b_square_n);
    CHECK(s.alpha == LatticeVector{6, -6});
    CHECK(norm(B, s.alpha) == 0);
    CHECK_THROWS_AS(alpha_case_b(build_context(Lattice({{2, 1}, {1, 0}}), {1, 0}, {0, 1})), PreconditionError);
}

TEST_CASE("effective classes") {
    const Lattice A({{2, 1}, {1, -2}});
    const AlphaResult k = alpha_effective(build_context(A, {1, 0}, {0, 1}), DeformationType::k3n(2));
    CHECK(k.alpha == LatticeVector{144, -89});
    CHECK(norm(A, k.alpha) == -2);
    CHECK(k.certified_primitive);
    CHECK(k.certified_effective);
    CHECK(k.div_alpha == BigInt(1));
    CHECK(k.disc_class_negated == true);
    REQUIRE(k.pell_solution_used.has_value());
    CHECK(*k.pell_solution_used == PellSolution{161, 72, 5});
    CHECK(k.congruence_modulus == BigInt(2));
    CHECK((k.pell_solution_used->x - 1) % 2 == 0);

    const Lattice O({{2, 2}, {2, -2}});
    const AlphaResult o = alpha_effective(build_context(O, {1, 0}, {0, 1}), DeformationType::og6());
    CHECK(o.alpha == LatticeVector{2, -1});
    CHECK(norm(O, o.alpha) == -2);
    CHECK(o.div_alpha == BigInt(2));
    CHECK(o.disc_class_negated == true);
    CHECK(o.certified_effective);
    const DiscriminantGroup& g = O.discriminant_group();
    CHECK(disc_class(O, o.alpha) == negate(g, disc_class(O, {0, 1})));

    // E has profile (-2, 1), which OG6 does not list.
    CHECK_THROWS_AS(alpha_effective(build_context(A, {1, 0}, {0, 1}), DeformationType::og6()), PreconditionError);
    // N = 9 is a square.
    CHECK_THROWS_AS(alpha_effective(build_context(Lattice({{4, 1}, {1, -2}}), {1, 0}, {0, 1}), DeformationType::k3()),
                    PerfectSquareError);
}

TEST_CASE("norm identity for every Pell solution") {
    Rng rng(11);
    int pell_cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const AlphaInstance in = random_alpha_instance(rng, static_cast<std::size_t>(uniform(rng, 2, 4)), false);
        const AlphaContext ctx = build_context(in.lattice, in.d_class, in.e_class);
        CHECK(ctx.t * ctx.b == pairing(in.lattice, in.e_class, in.d_class));
        CHECK(ctx.t * ctx.e == norm(in.lattice, in.e_class));
        CHECK(ctx.n == ctx.t * ctx.t * ctx.b * ctx.b - ctx.t * ctx.d * ctx.e);
        const AlphaResult r = alpha_case_b(ctx);
        CHECK(r.d_coeff > 0);
        CHECK(r.e_coeff < 0);
        CHECK(r.alpha == r.d_coeff * ctx.d_class + r.e_coeff * ctx.e_class);
        if (is_perfect_square(ctx.n)) {
            CHECK(norm(in.lattice, r.alpha) == 0);
            continue;
        }
        ++pell_cases;
        CHECK(norm(in.lattice, r.alpha) == ctx.t * ctx.e);
        for (std::size_t k = 1; k <= 4; ++k) {
            const PellSolution s = nth_solution(ctx.n, k);
            CHECK(norm(in.lattice, alpha_from_pell(ctx, s.x, s.y)) == ctx.t * ctx.e);
        }
    }
    CHECK(pell_cases > 50);
}

TEST_CASE("isotropic construction on random inputs") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const AlphaInstance in = random_alpha_instance(rng, static_cast<std::size_t>(uniform(rng, 2, 5)), true);
        const AlphaContext ctx = build_context(in.lattice, in.d_class, in.e_class);
        const AlphaResult r = alpha_case_a(ctx);
        CHECK(norm(in.lattice, r.alpha) == 0);
        CHECK(pairing(in.lattice, r.alpha, in.d_class) == ctx.b * ctx.t * ctx.d);
    }
}

TEST_CASE("alpha_k") {
    const Lattice L({{0, 1, 0}, {1, -2, 0}, {0, 0, -2}});
    for (long k = 1; k <= 5; ++k) {
        const LatticeVector a = alpha_k(L, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}, k);
        CHECK(a == LatticeVector{4 * k * k, 1, -2 * k});
        CHECK(norm(L, a) == -2);
    }
    CHECK_THROWS_AS(alpha_k(L, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}, 0), PreconditionError);
    CHECK_THROWS_AS(alpha_k(L, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, 1), PreconditionError);
    CHECK_THROWS_AS(alpha_k(L, {1, 0, 0}, {0, 1, 0}, {0, 1, 0}, 1), PreconditionError);
    CHECK_THROWS_AS(alpha_k(L, {1, 0, 0}, {0, 0, 1}, {0, -1, 0}, 1), PreconditionError);
}

TEST_CASE("alpha_k keeps the square of E and converges to alpha") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const AlphaKTriple t = random_alpha_k_triple(rng, static_cast<std::size_t>(uniform(rng, 3, 5)));
        const Lattice& L = t.lattice;
        const BigInt ee = norm(L, t.e_class);
        const BigInt p = pairing(L, t.alpha, t.e_class);
        const BigInt qa = norm(L, t.alpha_prime);
        std::vector<LatticeVector> residual;
        for (long k = 1; k <= 100; ++k) {
            const LatticeVector a = alpha_k(L, t.alpha, t.alpha_prime, t.e_class, k);
            CHECK(norm(L, a) == ee);
            if (is_primitive(t.e_class)) CHECK(is_primitive(a));
            residual.push_back(a - (-2 * BigInt(k) * k * qa * p * p * p) * t.alpha);
        }
        // The residual is affine in k: its second difference vanishes.
        for (std::size_t i = 2; i < residual.size(); ++i)
            CHECK((residual[i] - residual[i - 1]) == (residual[i - 1] - residual[i - 2]));
    }
}

TEST_CASE("projection to the orthogonal complement of E") {
    const Lattice A({{2, 1}, {1, -2}});
    const RatVector b = beta_projection(A, {1, 0}, {0, 1});
    CHECK(b == RatVector{Rational(1), Rational(1, 2)});
    CHECK(rational_pairing(A, b, RatVector{0, 1}) == 0);
    CHECK_THROWS_AS(beta_projection(Lattice({{2, 1}, {1, 0}}), {1, 0}, {0, 1}), PreconditionError);
}
