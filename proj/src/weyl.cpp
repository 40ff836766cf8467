#include "picard/weyl.hpp"

#include "picard/errors.hpp"
#include "picard/polyhedral.hpp"

namespace picard {

LatticeVector reflect(const Lattice& lattice, const LatticeVector& root, const LatticeVector& v) {
    check_dimension(lattice, root, "reflect");
    check_dimension(lattice, v, "reflect");
    const BigInt rr = norm(lattice, root);
    if (rr == 0) throw PreconditionError("reflect: root " + to_string(root) + " is isotropic");
    if (rr > 0) throw PreconditionError("reflect: root " + to_string(root) + " has positive square");
    const BigInt twice = 2 * pairing(lattice, root, v);
    if (twice % rr != 0)
        throw NonIntegralReflectionError("reflect: 2 v.r = " + twice.str() + " is not divisible by r.r = " + rr.str());
    return v - (twice / rr) * root;
}

IntMatrix reflection_matrix(const Lattice& lattice, const LatticeVector& root) {
    const std::size_t n = lattice.rank();
    IntMatrix m(n, IntVector(n));
    for (std::size_t j = 0; j < n; ++j) {
        IntVector e(n, 0);
        e[j] = 1;
        LatticeVector image = reflect(lattice, root, LatticeVector(e));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = image[i];
    }
    return m;
}

bool reflection_is_integral(const Lattice& lattice, const DeformationType&, const LatticeVector& root) {
    check_dimension(lattice, root, "reflection_is_integral");
    const BigInt rr = norm(lattice, root);
    if (rr >= 0) throw PreconditionError("reflection_is_integral: root must have negative square");
    for (const auto& x : gram_image(lattice, root))
        if ((2 * x) % rr != 0) return false;
    return true;
}

ChamberReduction weyl_reduce(const Lattice& lattice, const std::vector<LatticeVector>& roots, const LatticeVector& v,
                             std::size_t max_steps) {
    check_dimension(lattice, v, "weyl_reduce");
    ChamberReduction out{v, {}, 0};
    std::vector<LatticeVector> applied;
    while (true) {
        std::size_t pick = roots.size();
        BigInt worst = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const BigInt p = pairing(lattice, roots[i], out.representative);
            if (p < worst) {
                worst = p;
                pick = i;
            }
        }
        if (pick == roots.size()) break;
        if (out.steps == max_steps)
            throw BoundExceededError("weyl_reduce: step cap " + std::to_string(max_steps) +
                                     " exceeded; the root set is probably not exceptional");
        out.representative = reflect(lattice, roots[pick], out.representative);
        applied.push_back(roots[pick]);
        ++out.steps;
    }
    out.word.assign(applied.rbegin(), applied.rend());
    return out;
}

LatticeVector orient_to(const Lattice& lattice, const LatticeVector& root, const LatticeVector& ample) {
    const BigInt p = pairing(lattice, root, ample);
    if (p == 0) throw AmpleOnWallError("ample class lies on the wall of " + to_string(root));
    return p > 0 ? root : -root;
}

bool proportional(const LatticeVector& u, const LatticeVector& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

namespace {

RatVector as_rational_row(const IntVector& v) { return to_rational(v); }

}  // namespace

bool is_chamber_wall(const Lattice& lattice, const std::vector<LatticeVector>& roots, const LatticeVector& candidate,
                     const LatticeVector& ample, std::size_t wall_test_limit) {
    const std::size_t n = lattice.rank();
    if (n > wall_test_limit)
        throw BoundExceededError("is_chamber_wall: rank " + std::to_string(n) + " exceeds wall-test limit " +
                                 std::to_string(wall_test_limit));
    check_dimension(lattice, candidate, "is_chamber_wall");
    check_dimension(lattice, ample, "is_chamber_wall");
    if (norm(lattice, ample) <= 0) throw PreconditionError("is_chamber_wall: ample class must have positive square");

    std::size_t index = roots.size();
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == candidate) {
            index = i;
            break;
        }
    if (index == roots.size()) throw PreconditionError("is_chamber_wall: candidate is not among the roots");
    for (std::size_t i = 0; i < index; ++i)
        if (proportional(roots[i], candidate)) return false;

    const LatticeVector c = orient_to(lattice, candidate, ample);
    const BigInt cc = norm(lattice, c);
    if (cc >= 0) throw PreconditionError("is_chamber_wall: candidate must have negative square");

    std::vector<IntVector> others;
    for (const auto& r : roots) {
        if (proportional(r, c)) continue;
        others.push_back(gram_image(lattice, orient_to(lattice, r, ample)));
    }

    // h0 is the projection of the ample class to c^perp (scaled by -c.c); it
    // is timelike there and fixes the future nappe.
    const LatticeVector h0 = (-cc) * ample + pairing(lattice, ample, c) * c;
    const IntVector gc = gram_image(lattice, c);
    const IntVector gh0 = gram_image(lattice, h0);

    std::vector<IntVector> rows;
    rows.push_back(gc);
    IntVector minus_gc = gc;
    for (auto& x : minus_gc) x = -x;
    rows.push_back(minus_gc);
    rows.push_back(gh0);
    rows.insert(rows.end(), others.begin(), others.end());

    // Sum of extreme rays lies in the relative interior of the facet cone;
    // strictness on every constraint means the open facet is nonempty.
    const ConeGenerators gens = cone_generators(rows, n);
    IntVector interior(n, 0);
    for (const auto& r : gens.rays)
        for (std::size_t i = 0; i < n; ++i) interior[i] += r[i];
    const BigInt scale = dot(gh0, interior);
    if (scale <= 0) return false;
    for (const auto& row : others)
        if (dot(row, interior) <= 0) return false;

    RatVector start(n);
    for (std::size_t i = 0; i < n; ++i) start[i] = Rational(interior[i], scale);

    RatMatrix eq_rows{as_rational_row(gc), as_rational_row(gh0)};
    RatVector eq_rhs{0, 1};
    RatMatrix ineq_rows;
    for (const auto& row : others) ineq_rows.push_back(as_rational_row(row));

    const ConcaveMaxResult best = maximize_concave_form(lattice.gram(), eq_rows, eq_rhs, ineq_rows, start, 0);
    return best.value > 0;
}

}  // namespace picard
