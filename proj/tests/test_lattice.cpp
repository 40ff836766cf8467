#include "doctest.h"

#include "picard/errors.hpp"
#include "picard/lattice.hpp"
#include "support.hpp"

using namespace picard;
using namespace picard::testing;

namespace {
const Lattice U({{0, 1}, {1, 0}});
const Lattice A({{2, 1}, {1, -2}});
}  // namespace

TEST_CASE("pairing and norm") {
    CHECK(pairing(U, {1, 0}, {0, 1}) == 1);
    CHECK(pairing(A, {1, 1}, {0, 0}) == 0);
    CHECK(pairing(A, {1, 1}, {1, 0}) == 3);
    CHECK(norm(Lattice(IntMatrix{{-2}}), {1}) == -2);
    CHECK(norm(Lattice({{2, 0}, {0, -2}}), {1, 1}) == 0);
    CHECK(norm(A, {2, 1}) == 10);
    CHECK_THROWS_AS(pairing(A, {1, 0, 0}, {1, 0}), DimensionError);
}

TEST_CASE("construction rejects bad Gram matrices") {
    CHECK_THROWS_AS(Lattice({{1, 2}, {3, 4}}), DimensionError);
    CHECK_THROWS_AS(Lattice({{1, 2}}), DimensionError);
    CHECK_THROWS_AS(Lattice(IntMatrix{}), DimensionError);
    CHECK_THROWS_AS(Lattice({{1, 1}, {1, 1}}), DegenerateLatticeError);
    try {
        Lattice({{1, 2, 0}, {2, 1, 5}, {0, 4, 1}});
        FAIL("asymmetric matrix accepted");
    } catch (const DimensionError& e) {
        CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
    }
}

TEST_CASE("divisibility and primitivity") {
    CHECK(divisibility(U, {1, 0}) == 1);
    CHECK(divisibility(Lattice(IntMatrix{{-4}}), {1}) == 4);
    const Lattice L({{2, 0}, {0, -6}});
    CHECK(divisibility(L, {0, 1}) == 6);
    CHECK(L.discriminant_group().order == 12);
    CHECK_THROWS_AS(divisibility(L, {0, 0}), PreconditionError);
    CHECK_FALSE(is_primitive({2, 4}));
    CHECK(is_primitive({1, 0}));
    CHECK(is_primitive({6, 10, 15}));
}

TEST_CASE("Smith normal form") {
    auto check = [](const IntMatrix& m, const IntVector& diag) {
        const SmithForm s = smith_normal_form(m);
        CHECK(multiply(multiply(s.u, m), s.v) == s.d);
        CHECK(abs_value(determinant(s.u)) == 1);
        CHECK(abs_value(determinant(s.v)) == 1);
        for (std::size_t i = 0; i < diag.size(); ++i) CHECK(s.d[i][i] == diag[i]);
    };
    check({{2, 0}, {0, -2}}, {2, 2});
    check(identity_matrix(3), {1, 1, 1});
    check({{0, 1}, {1, 0}}, {1, 1});
    check({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, {2, 6, 12});
    check({{0, 0}, {0, 0}}, {0, 0});
}

TEST_CASE("Smith normal form on random matrices") {
    Rng rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 4));
        const std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 4));
        IntMatrix m(rows, IntVector(cols));
        for (auto& row : m)
            for (auto& x : row) x = uniform(rng, -9, 9);
        const SmithForm s = smith_normal_form(m);
        REQUIRE(multiply(multiply(s.u, m), s.v) == s.d);
        CHECK(abs_value(determinant(s.u)) == 1);
        CHECK(abs_value(determinant(s.v)) == 1);
        const std::size_t k = std::min(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(s.d[i][j] == 0);
        for (std::size_t i = 0; i < k; ++i) {
            CHECK(s.d[i][i] >= 0);
            if (i + 1 < k && s.d[i][i] != 0) CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
            if (s.d[i][i] == 0 && i + 1 < k) CHECK(s.d[i + 1][i + 1] == 0);
        }
    }
}

TEST_CASE("discriminant groups") {
    CHECK(Lattice(IntMatrix{{-2}}).discriminant_group().invariant_factors == IntVector{2});
    CHECK(U.discriminant_group().invariant_factors.empty());
    CHECK(U.discriminant_group().order == 1);
    CHECK(Lattice({{2, 0}, {0, -2}}).discriminant_group().invariant_factors == IntVector{2, 2});
    CHECK(Lattice({{2, 0}, {0, -6}}).discriminant_group().invariant_factors == IntVector{2, 6});
}

TEST_CASE("discriminant classes") {
    CHECK(disc_class(A, {1, 0}).coefficients == IntVector{0});
    const Lattice L4(IntMatrix{{-4}});
    const DiscClass g = disc_class(L4, {1});
    CHECK(order(L4.discriminant_group(), g) == 4);
    const Lattice L({{2, 0}, {0, -6}});
    CHECK(order(L.discriminant_group(), disc_class(L, {0, 1})) == 6);
    CHECK_THROWS_AS(disc_class(L, {0, 2}), NotPrimitiveError);
    const DiscClass c = disc_class(L, {0, 1});
    CHECK(negate(L.discriminant_group(), negate(L.discriminant_group(), c)) == c);
}

TEST_CASE("signature") {
    CHECK(signature(Lattice({{2, 0}, {0, -2}})) == Signature{1, 1});
    CHECK(signature(U) == Signature{1, 1});
    CHECK(signature(Lattice({{2, 0, 0}, {0, -2, 0}, {0, 0, -2}})) == Signature{1, 2});
    CHECK_THROWS_AS(signature(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}), DegenerateLatticeError);
}

TEST_CASE("Eichler predicate") {
    const Lattice L({{0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, -2}});
    CHECK(eichler_equivalent(L, {1, -1, 0, 0, 0}, {1, -1, 0, 0, 0}));
    CHECK(eichler_equivalent(L, {1, -1, 0, 0, 0}, {0, 0, 1, -1, 0}));
    CHECK_FALSE(eichler_equivalent(L, {1, -1, 0, 0, 0}, {1, 1, 0, 0, 0}));
    // (0,0,0,0,1) has divisibility 2, (1,-1,0,0,0) divisibility 1.
    CHECK_FALSE(eichler_equivalent(L, {0, 0, 0, 0, 1}, {1, -1, 0, 0, 0}));
    CHECK_THROWS_AS(eichler_equivalent(L, {2, 0, 0, 0, 0}, {1, 0, 0, 0, 0}), NotPrimitiveError);
}

TEST_CASE("properties on random lattices") {
    Rng rng(2024);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
        const Lattice L = random_hyperbolic(rng, n);
        const LatticeVector v = random_nonzero_vector(rng, n, 5);
        const LatticeVector w = random_vector(rng, n, 5);
        // divisibility divides every pairing
        CHECK(pairing(L, v, w) % divisibility(L, v) == 0);
        // bilinearity and symmetry
        CHECK(pairing(L, v, w) == pairing(L, w, v));
        CHECK(norm(L, v + w) == norm(L, v) + 2 * pairing(L, v, w) + norm(L, w));
        // |A_L| = |det|
        CHECK(L.discriminant_group().order == abs_value(L.det()));
        // generator lifts pair integrally with the lattice
        for (const auto& g : L.discriminant_group().generator_lifts)
            for (std::size_t i = 0; i < n; ++i) {
                RatVector e(n, 0);
                e[i] = 1;
                CHECK(boost::multiprecision::denominator(rational_pairing(L, g, e)) == 1);
            }
        // order of [v/div v] is div v, which divides |A_L|
        if (is_primitive(v)) {
            const BigInt dv = divisibility(L, v);
            CHECK(order(L.discriminant_group(), disc_class(L, v)) == dv);
            CHECK(L.discriminant_group().order % dv == 0);
        }
        // signature invariant under unimodular change of basis
        auto [u, inv] = random_unimodular(rng, n, 6);
        CHECK(signature(congruent(L.gram(), u)) == signature(L));
        CHECK(multiply(u, inv) == identity_matrix(n));
    }
}
