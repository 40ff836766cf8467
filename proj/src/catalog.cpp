#include "picard/catalog.hpp"

#include "picard/errors.hpp"

namespace picard {

bool requires_n(DeformationKind kind) { return kind == DeformationKind::k3n || kind == DeformationKind::kum_n; }

DeformationType::DeformationType(DeformationKind kind, std::optional<std::int64_t> n) : kind_(kind), n_(n) {
    if (requires_n(kind)) {
        if (!n) throw PreconditionError("deformation type " + tag() + " requires the parameter n");
        if (*n < 2) throw PreconditionError("deformation type " + tag() + " requires n >= 2, got " + std::to_string(*n));
    } else if (n) {
        throw PreconditionError("deformation type " + tag() + " takes no parameter n");
    }
}

DeformationType DeformationType::from_tag(std::string_view tag, std::optional<std::int64_t> n) {
    if (tag == "K3") return DeformationType(DeformationKind::k3, n);
    if (tag == "K3[n]") return DeformationType(DeformationKind::k3n, n);
    if (tag == "Kum[n]") return DeformationType(DeformationKind::kum_n, n);
    if (tag == "OG6") return DeformationType(DeformationKind::og6, n);
    if (tag == "OG10") return DeformationType(DeformationKind::og10, n);
    throw ParseError("unknown deformation type tag \"" + std::string(tag) +
                     "\" (expected K3, K3[n], Kum[n], OG6 or OG10)");
}

std::string DeformationType::tag() const {
    switch (kind_) {
        case DeformationKind::k3: return "K3";
        case DeformationKind::k3n: return "K3[n]";
        case DeformationKind::kum_n: return "Kum[n]";
        case DeformationKind::og6: return "OG6";
        case DeformationKind::og10: return "OG10";
    }
    return "?";
}

std::string DeformationType::display_name() const {
    if (!n_) return tag();
    std::string t = tag();
    return t.substr(0, t.size() - 3) + "[" + std::to_string(*n_) + "]";
}

std::vector<ExceptionalProfile> profiles(const DeformationType& type) {
    switch (type.kind()) {
        case DeformationKind::k3: return {{-2, 1}};
        case DeformationKind::og10: return {{-2, 1}, {-6, 3}};
        case DeformationKind::og6: return {{-2, 2}, {-4, 2}};
        case DeformationKind::k3n: {
            const BigInt m = *type.n() - 1;
            return {{-2 * m, m}, {-2 * m, 2 * m}};
        }
        case DeformationKind::kum_n: {
            const BigInt m = *type.n() + 1;
            return {{-2 * m, m}, {-2 * m, 2 * m}};
        }
    }
    return {};
}

IntVector expected_disc_group(const DeformationType& type) {
    switch (type.kind()) {
        case DeformationKind::k3: return {};
        case DeformationKind::og10: return {3};
        case DeformationKind::og6: return {2, 2};
        case DeformationKind::k3n: return {BigInt(2 * (*type.n() - 1))};
        case DeformationKind::kum_n: return {BigInt(2 * (*type.n() + 1))};
    }
    return {};
}

BigInt expected_disc_exponent(const DeformationType& type) {
    IntVector factors = expected_disc_group(type);
    return factors.empty() ? BigInt(1) : factors.back();
}

BigInt ambient_divisibility(const Lattice& lattice, const DeformationType& type, const LatticeVector& v) {
    return gcd(divisibility(lattice, v), expected_disc_exponent(type));
}

std::optional<ExceptionalProfile> matching_profile(const Lattice& lattice, const DeformationType& type,
                                                   const LatticeVector& v) {
    const BigInt sq = norm(lattice, v);
    if (sq >= 0) return std::nullopt;
    const BigInt div = ambient_divisibility(lattice, type, v);
    for (const auto& p : profiles(type))
        if (p.square == sq && p.div == div) return p;
    return std::nullopt;
}

bool is_numerically_exceptional(const Lattice& lattice, const DeformationType& type, const LatticeVector& v,
                                const LatticeVector& ample) {
    check_dimension(lattice, v, "is_numerically_exceptional");
    check_dimension(lattice, ample, "is_numerically_exceptional");
    if (norm(lattice, ample) <= 0)
        throw PreconditionError("is_numerically_exceptional: ample class must have positive square");
    if (v.is_zero()) throw PreconditionError("is_numerically_exceptional: zero vector");
    if (!is_primitive(v)) return false;
    if (!matching_profile(lattice, type, v)) return false;
    return pairing(lattice, v, ample) > 0;
}

TypeFlags rlf_and_cone_flags(const DeformationType&) { return {}; }

}  // namespace picard
