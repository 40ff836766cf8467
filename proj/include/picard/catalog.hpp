#pragma once

// Numerical data for the known deformation types: the (square, divisibility)
// pairs of stably exceptional classes and the discriminant group of H^2.

#include "picard/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace picard {

enum class DeformationKind { k3, k3n, kum_n, og6, og10 };

class DeformationType {
  public:
    /// Throws PreconditionError when `n` is missing for K3[n] / Kum[n]
    /// (where n >= 2 is required) or supplied for the other kinds.
    DeformationType(DeformationKind kind, std::optional<std::int64_t> n = std::nullopt);

    static DeformationType k3() { return DeformationType(DeformationKind::k3); }
    static DeformationType k3n(std::int64_t n) { return DeformationType(DeformationKind::k3n, n); }
    static DeformationType kum(std::int64_t n) { return DeformationType(DeformationKind::kum_n, n); }
    static DeformationType og6() { return DeformationType(DeformationKind::og6); }
    static DeformationType og10() { return DeformationType(DeformationKind::og10); }

    /// Parses "K3", "K3[n]", "Kum[n]", "OG6", "OG10".
    static DeformationType from_tag(std::string_view tag, std::optional<std::int64_t> n);

    DeformationKind kind() const noexcept { return kind_; }
    std::optional<std::int64_t> n() const noexcept { return n_; }
    std::string tag() const;
    std::string display_name() const;

    friend bool operator==(const DeformationType&, const DeformationType&) = default;

  private:
    DeformationKind kind_;
    std::optional<std::int64_t> n_;
};

bool requires_n(DeformationKind kind);

struct ExceptionalProfile {
    BigInt square;  ///< negative
    BigInt div;     ///< positive
    friend bool operator==(const ExceptionalProfile&, const ExceptionalProfile&) = default;
};

std::vector<ExceptionalProfile> profiles(const DeformationType& type);

/// Invariant factors of A_{H^2}; empty for K3 (unimodular).
IntVector expected_disc_group(const DeformationType& type);

/// Largest invariant factor of expected_disc_group (1 when trivial).
BigInt expected_disc_exponent(const DeformationType& type);

/// Divisibility of v in H^2 as far as it can be read off a sublattice: the
/// H^2-divisibility divides both the divisibility inside `lattice` and the
/// exponent of A_{H^2}, and this returns their gcd.
BigInt ambient_divisibility(const Lattice& lattice, const DeformationType& type, const LatticeVector& v);

/// Profile matching (norm(v), ambient_divisibility(v)), if any.
std::optional<ExceptionalProfile> matching_profile(const Lattice& lattice, const DeformationType& type,
                                                   const LatticeVector& v);

/// Primitive, matches a profile, and pairs positively with `ample`.
/// Throws PreconditionError when norm(ample) <= 0 or v is zero.
bool is_numerically_exceptional(const Lattice& lattice, const DeformationType& type, const LatticeVector& v,
                                const LatticeVector& ample);

struct TypeFlags {
    bool rlf_conjecture = true;
    bool mov_plus_equals_mov_e = true;
    bool contains_two_hyperbolic_planes = true;
};

/// Report metadata; true for every catalog type.
TypeFlags rlf_and_cone_flags(const DeformationType& type);

}  // namespace picard
