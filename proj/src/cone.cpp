#include "picard/cone.hpp"

#include "picard/errors.hpp"

#include <algorithm>
#include <functional>

namespace picard {

void validate(const EnumerationBound& bound) {
    if (bound.max_ample_pairing < 1) throw PreconditionError("bound: max_ample_pairing must be positive");
    if (bound.wall_test_limit < 1) throw PreconditionError("bound: wall_test_limit must be positive");
    if (bound.pell_index_cap < 1) throw PreconditionError("bound: pell_index_cap must be positive");
}

namespace {

void require_hyperbolic(const Lattice& lattice, const LatticeVector& ample, const char* what) {
    check_dimension(lattice, ample, what);
    const Signature sig = signature(lattice);
    if (sig.positive != 1)
        throw SignatureError(std::string(what) + ": signature (" + std::to_string(sig.positive) + ", " +
                             std::to_string(sig.negative) + ") is not hyperbolic");
    if (norm(lattice, ample) <= 0) throw PreconditionError(std::string(what) + ": ample class must have positive square");
}

// Fincke-Pohst style decomposition q'(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
struct Decomposition {
    RatVector diag;
    RatMatrix mu;
};

Decomposition decompose(const IntMatrix& form) {
    const std::size_t n = form.size();
    RatMatrix a(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = form[i][j];
    Decomposition dec{RatVector(n), RatMatrix(n, RatVector(n, 0))};
    for (std::size_t i = 0; i < n; ++i) {
        dec.diag[i] = a[i][i];
        if (dec.diag[i] <= 0) throw ContractViolation("short_vectors: form is not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) dec.mu[i][j] = a[i][j] / dec.diag[i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) a[j][k] -= dec.mu[i][j] * dec.mu[i][k] * dec.diag[i];
    }
    return dec;
}

}  // namespace

std::vector<LatticeVector> short_vectors(const Lattice& lattice, const LatticeVector& ample, const BigInt& limit) {
    const std::size_t n = lattice.rank();
    const BigInt hh = norm(lattice, ample);
    const IntVector gh = gram_image(lattice, ample);
    IntMatrix form(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) form[i][j] = -hh * lattice.gram()[i][j] + 2 * gh[i] * gh[j];
    const Decomposition dec = decompose(form);

    std::vector<LatticeVector> out;
    IntVector x(n, 0);
    const Rational budget(limit);

    std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t level, const Rational& remaining) {
        Rational shift = 0;
        for (std::size_t j = level + 1; j < n; ++j) shift += dec.mu[level][j] * Rational(x[j]);
        auto cost = [&](const BigInt& v) -> Rational {
            const Rational t = Rational(v) + shift;
            return dec.diag[level] * t * t;
        };
        auto visit = [&](const BigInt& v) {
            const Rational c = cost(v);
            if (c > remaining) return false;
            x[level] = v;
            if (level == 0) {
                if (!is_zero(x)) out.emplace_back(x);
            } else {
                descend(level - 1, remaining - c);
            }
            return true;
        };
        // The admissible values form an interval around -shift.
        const BigInt below = floor_of(Rational(-shift));
        for (BigInt v = below; visit(v); --v) {
        }
        for (BigInt v = below + 1; visit(v); ++v) {
        }
        x[level] = 0;
    };
    descend(n - 1, budget);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Profile vectors with 0 <= v.ample <= max_pairing.
std::vector<LatticeVector> profile_vectors(const Lattice& lattice, const DeformationType& type,
                                           const LatticeVector& ample, const BigInt& max_pairing) {
    const BigInt hh = norm(lattice, ample);
    BigInt most_negative = 0;
    for (const auto& p : profiles(type)) most_negative = std::min(most_negative, p.square);
    const BigInt limit = -most_negative * hh + 2 * max_pairing * max_pairing;

    std::vector<LatticeVector> out;
    for (const auto& v : short_vectors(lattice, ample, limit)) {
        const BigInt k = pairing(lattice, v, ample);
        if (k < 0 || k > max_pairing) continue;
        if (!is_primitive(v)) continue;
        if (!matching_profile(lattice, type, v)) continue;
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<LatticeVector> enumerate_exceptional(const Lattice& lattice, const DeformationType& type,
                                                 const LatticeVector& ample, const EnumerationBound& bound) {
    validate(bound);
    require_hyperbolic(lattice, ample, "enumerate_exceptional");
    std::vector<LatticeVector> out;
    for (auto& v : profile_vectors(lattice, type, ample, bound.max_ample_pairing))
        if (pairing(lattice, v, ample) > 0) out.push_back(std::move(v));
    return out;
}

// ---------------------------------------------------------------------------
// Rank 2

int QuadraticSurd::sign() const {
    const int sp = p > 0 ? 1 : (p < 0 ? -1 : 0);
    const int sq = q > 0 ? 1 : (q < 0 ? -1 : 0);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // Opposite signs: compare p^2 with q^2 d.
    const BigInt lhs = p * p, rhs = q * q * d;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sp : sq;
}

namespace {

struct SurdVector {
    std::array<QuadraticSurd, 2> c;
};

QuadraticSurd pair_with(const Lattice& lattice, const SurdVector& s, const LatticeVector& w) {
    const IntVector gw = gram_image(lattice, w);
    return {gw[0] * s.c[0].p + gw[1] * s.c[1].p, gw[0] * s.c[0].q + gw[1] * s.c[1].q, s.c[0].d};
}

RayDescriptor isotropic_descriptor(const SurdVector& s, const BigInt& disc, const BigInt& slope_a, int slope_sign,
                                   const BigInt& slope_c) {
    RayDescriptor r;
    r.source = RaySource::isotropic;
    r.discriminant = disc;
    r.slope_a = slope_a;
    r.slope_sign = slope_sign;
    r.slope_c = slope_c;
    if (s.c[0].q == 0 && s.c[1].q == 0) {
        r.rational = true;
        r.vector = LatticeVector(primitive_part(IntVector{s.c[0].p, s.c[1].p}));
    } else {
        r.rational = false;
        r.components = s.c;
    }
    return r;
}

}  // namespace

Rank2Report rank2_from_walls(const Lattice& lattice, const LatticeVector& ample,
                             const std::vector<LatticeVector>& walls, const BigInt& bound) {
    if (lattice.rank() != 2) throw PreconditionError("classify_rank2: lattice rank must be 2");
    const BigInt& a = lattice.gram()[0][0];
    const BigInt& h = lattice.gram()[0][1];
    const BigInt& c = lattice.gram()[1][1];
    const BigInt disc = h * h - a * c;

    // The two isotropic rays of a x^2 + 2 h x y + c y^2, each oriented into
    // the nappe containing the ample class.
    std::array<SurdVector, 2> iso;
    std::array<int, 2> slope_sign{0, 0};
    if (a != 0) {
        if (auto root = exact_sqrt(disc)) {
            iso[0].c = {QuadraticSurd{-h + *root, 0, disc}, QuadraticSurd{a, 0, disc}};
            iso[1].c = {QuadraticSurd{-h - *root, 0, disc}, QuadraticSurd{a, 0, disc}};
        } else {
            iso[0].c = {QuadraticSurd{-h, 1, disc}, QuadraticSurd{a, 0, disc}};
            iso[1].c = {QuadraticSurd{-h, -1, disc}, QuadraticSurd{a, 0, disc}};
        }
        slope_sign = {1, -1};
    } else {
        iso[0].c = {QuadraticSurd{1, 0, disc}, QuadraticSurd{0, 0, disc}};
        iso[1].c = {QuadraticSurd{c, 0, disc}, QuadraticSurd{-2 * h, 0, disc}};
    }
    for (auto& s : iso) {
        const int sg = pair_with(lattice, s, ample).sign();
        if (sg == 0) throw ContractViolation("classify_rank2: ample class is isotropic");
        if (sg < 0)
            for (auto& comp : s.c) {
                comp.p = -comp.p;
                comp.q = -comp.q;
            }
    }

    std::array<RayDescriptor, 2> rays;
    for (std::size_t i = 0; i < 2; ++i) {
        // A wall pairing negatively with this isotropic ray cuts it off; the
        // effective cone then ends at the wall class itself.
        std::optional<LatticeVector> cut;
        for (const auto& w : walls) {
            if (pair_with(lattice, iso[i], w).sign() < 0) {
                if (cut) throw ContractViolation("classify_rank2: two walls on the same side of the positive cone");
                cut = w;
            }
        }
        if (cut) {
            RayDescriptor r;
            r.source = RaySource::exceptional_class;
            r.rational = true;
            r.vector = LatticeVector(primitive_part(cut->coords()));
            r.discriminant = disc;
            rays[i] = r;
        } else {
            rays[i] = a != 0 ? isotropic_descriptor(iso[i], disc, -h, slope_sign[i], a)
                             : isotropic_descriptor(iso[i], disc, 0, 0, 0);
        }
    }

    if (rays[0].rational != rays[1].rational)
        throw ContractViolation("classify_rank2: one boundary ray is rational and the other is irrational (bound " +
                                bound.str() + ")");

    Rank2Report report;
    report.ray1 = rays[0];
    report.ray2 = rays[1];
    report.both_rational = rays[0].rational;
    report.bir_finite = report.both_rational;
    report.discriminant = disc;
    report.bound = bound;
    return report;
}

namespace {

std::vector<LatticeVector> chamber_walls_of(const Lattice& lattice, const std::vector<LatticeVector>& found,
                                            const LatticeVector& ample, std::size_t limit) {
    std::vector<LatticeVector> walls;
    for (const auto& c : found)
        if (is_chamber_wall(lattice, found, c, ample, limit)) walls.push_back(c);
    return walls;
}

struct Layers {
    std::vector<LatticeVector> positive;
    std::vector<LatticeVector> orthogonal;
};

Layers split_layers(const Lattice& lattice, const DeformationType& type, const LatticeVector& ample,
                    const EnumerationBound& bound) {
    Layers out;
    for (auto& v : profile_vectors(lattice, type, ample, bound.max_ample_pairing)) {
        if (pairing(lattice, v, ample) != 0) out.positive.push_back(std::move(v));
        // Keep one of +-v: the one that is lexicographically larger.
        else if (-v < v) out.orthogonal.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Rank2Report classify_rank2(const Lattice& lattice, const DeformationType& type, const LatticeVector& ample,
                           const EnumerationBound& bound) {
    if (lattice.rank() != 2) throw PreconditionError("classify_rank2: lattice rank must be 2");
    validate(bound);
    require_hyperbolic(lattice, ample, "classify_rank2");
    const auto found = split_layers(lattice, type, ample, bound).positive;
    const auto walls = chamber_walls_of(lattice, found, ample, bound.wall_test_limit);
    return rank2_from_walls(lattice, ample, walls, bound.max_ample_pairing);
}

ConeGenerators dual_cone(const Lattice& lattice, const ConeGenerators& cone) {
    std::vector<IntVector> rows;
    for (const auto& r : cone.rays) rows.push_back(multiply(lattice.gram(), r));
    for (const auto& l : cone.lines) {
        IntVector g = multiply(lattice.gram(), l);
        rows.push_back(g);
        for (auto& x : g) x = -x;
        rows.push_back(std::move(g));
    }
    return cone_generators(rows, lattice.rank());
}

std::string to_string(Verdict verdict) {
    return verdict == Verdict::polyhedral_candidate ? "polyhedral_candidate" : "circular_up_to_bound";
}

std::string to_string(MdsReason reason) {
    switch (reason) {
        case MdsReason::rank_below_3_eff_rational: return "rank_below_3_eff_rational";
        case MdsReason::rank_below_3_eff_irrational: return "rank_below_3_eff_irrational";
        case MdsReason::rank_at_least_3_neg_nonempty_finite: return "rank_at_least_3_neg_nonempty_finite";
        case MdsReason::rank_at_least_3_neg_empty: return "rank_at_least_3_neg_empty";
        case MdsReason::rank_at_least_3_neg_not_finite_up_to_bound: return "rank_at_least_3_neg_not_finite_up_to_bound";
    }
    return "?";
}

FinitenessReport finiteness_report(const ConeAnalysis& an) {
    FinitenessReport f;
    const BigInt& B = an.bound.max_ample_pairing;
    const std::size_t rank = an.lattice.rank();
    auto flag = [&](bool v) { return TruncatedFlag{v, B}; };

    if (rank >= 3) {
        if (an.verdict == Verdict::circular_up_to_bound) {
            f.eff_rational_polyhedral_up_to_bound = flag(false);
            f.bir_finite = flag(false);
            f.quotient_finite = flag(false);
            f.finitely_many_exceptional_up_to_bound = flag(true);
            f.equivalence_applicable = false;
            f.note = "no exceptional class with ample pairing <= " + B.str() +
                     "; the effective cone candidate is the closed positive cone";
        } else {
            const bool closed = an.mov_inside_positive_cone;
            f.eff_rational_polyhedral_up_to_bound = flag(closed);
            f.bir_finite = flag(closed);
            f.quotient_finite = flag(closed);
            f.finitely_many_exceptional_up_to_bound = flag(closed);
            f.equivalence_applicable = true;
            f.neg_count_at_least_rank = an.chamber_walls.size() >= rank;
            f.note = closed ? "the walls found with ample pairing <= " + B.str() +
                                  " enclose a chamber inside the closed positive cone"
                            : "the chamber cut out by walls with ample pairing <= " + B.str() +
                                  " leaves the positive cone; more walls may appear at a larger bound";
            if (!*f.neg_count_at_least_rank) f.note += "; fewer walls than the Picard rank: increase the bound";
        }
    } else if (rank == 2 && an.rank2) {
        const bool rational = an.rank2->both_rational;
        f.eff_rational_polyhedral_up_to_bound = flag(rational);
        f.bir_finite = flag(rational);
        f.quotient_finite = flag(rational);
        f.finitely_many_exceptional_up_to_bound = flag(true);
        f.equivalence_applicable = false;
        f.note = "rank 2: finiteness read off the rationality of the boundary rays";
    } else {
        f.eff_rational_polyhedral_up_to_bound = flag(true);
        f.bir_finite = flag(true);
        f.quotient_finite = flag(true);
        f.finitely_many_exceptional_up_to_bound = flag(true);
        f.equivalence_applicable = false;
        f.note = "rank 1: the effective cone is a rational ray";
    }
    return f;
}

MDSReport mds_classify(const ConeAnalysis& an) {
    MDSReport m;
    const std::size_t rank = an.lattice.rank();
    if (rank < 3) {
        const bool rational = an.rank2 ? an.rank2->both_rational : true;
        m.is_mds = rational;
        m.reason = rational ? MdsReason::rank_below_3_eff_rational : MdsReason::rank_below_3_eff_irrational;
    } else if (an.exceptional_found.empty()) {
        m.is_mds = false;
        m.reason = MdsReason::rank_at_least_3_neg_empty;
    } else if (an.finiteness.finitely_many_exceptional_up_to_bound.value) {
        m.is_mds = true;
        m.reason = MdsReason::rank_at_least_3_neg_nonempty_finite;
    } else {
        m.is_mds = false;
        m.reason = MdsReason::rank_at_least_3_neg_not_finite_up_to_bound;
    }
    if (m.is_mds != an.finiteness.bir_finite.value)
        throw ContractViolation("mds_classify: MDS verdict disagrees with finiteness of Bir");
    return m;
}

ConeAnalysis analyze(const Lattice& lattice, const DeformationType& type, const LatticeVector& ample,
                     const EnumerationBound& bound) {
    validate(bound);
    require_hyperbolic(lattice, ample, "analyze");

    ConeAnalysis an{lattice, type, ample, bound, signature(lattice), {}, {}, Verdict::circular_up_to_bound,
                    {}, {}, {}, false, false, 0, {}, std::nullopt, {}, {}};
    Layers layers = split_layers(lattice, type, ample, bound);
    an.exceptional_found = std::move(layers.positive);
    an.orthogonal_classes = std::move(layers.orthogonal);

    if (!an.exceptional_found.empty()) {
        if (lattice.rank() > bound.wall_test_limit)
            throw BoundExceededError("analyze: rank " + std::to_string(lattice.rank()) + " exceeds wall-test limit " +
                                     std::to_string(bound.wall_test_limit));
        an.verdict = Verdict::polyhedral_candidate;

        // Every found class pairs positively with the ample class, so the
        // ample class already sits in the chamber; the reduction confirms it.
        an.ample_reduction_steps = weyl_reduce(lattice, an.exceptional_found, ample).steps;
        if (an.ample_reduction_steps != 0) throw ContractViolation("analyze: ample class is outside its own chamber");

        an.chamber_walls = chamber_walls_of(lattice, an.exceptional_found, ample, bound.wall_test_limit);
        if (an.chamber_walls.empty()) throw ContractViolation("analyze: exceptional classes found but no chamber wall");
        an.extremal_rays = an.chamber_walls;
        for (const auto& w : an.chamber_walls) an.mov_candidate.push_back(gram_image(lattice, w));
        an.mov_generators = cone_generators(an.mov_candidate, lattice.rank());

        an.mov_inside_positive_cone = an.mov_generators.lines.empty();
        for (const auto& g : an.mov_generators.rays)
            if (norm(lattice, LatticeVector(g)) < 0) an.mov_inside_positive_cone = false;

        // The walls must pair nonnegatively with every generator of the
        // movable candidate, and the dual of that candidate must give back
        // exactly the walls.
        bool ok = true;
        for (const auto& w : an.chamber_walls)
            for (const auto& g : an.mov_generators.rays)
                if (pairing(lattice, w, LatticeVector(g)) < 0) ok = false;
        const ConeGenerators dual = dual_cone(lattice, an.mov_generators);
        std::vector<IntVector> expected;
        for (const auto& w : an.chamber_walls) expected.push_back(primitive_part(w.coords()));
        std::sort(expected.begin(), expected.end());
        an.duality_checked = ok && dual.lines.empty() && dual.rays == expected;
    }

    if (lattice.rank() == 2) an.rank2 = rank2_from_walls(lattice, ample, an.chamber_walls, bound.max_ample_pairing);
    an.finiteness = finiteness_report(an);
    an.mds = mds_classify(an);
    return an;
}

}  // namespace picard
