#pragma once

// Integral lattices given by a Gram matrix: pairings, divisibility,
// primitivity, Smith normal form, discriminant groups, signature and the
// Eichler-criterion orbit predicate.

#include "picard/arith.hpp"

#include <compare>
#include <initializer_list>
#include <string>

namespace picard {

/// Integer coordinate vector with respect to a lattice basis.
class LatticeVector {
  public:
    LatticeVector() = default;
    explicit LatticeVector(IntVector coords) : coords_(std::move(coords)) {}
    LatticeVector(std::initializer_list<BigInt> coords) : coords_(coords) {}

    std::size_t size() const noexcept { return coords_.size(); }
    const BigInt& operator[](std::size_t i) const { return coords_[i]; }
    const IntVector& coords() const noexcept { return coords_; }

    bool is_zero() const { return picard::is_zero(coords_); }

    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
    friend LatticeVector operator-(const LatticeVector& a);
    friend LatticeVector operator*(const BigInt& s, const LatticeVector& a);

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    /// Lexicographic on coordinates.
    friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

  private:
    IntVector coords_;
};

std::string to_string(const LatticeVector& v);

/// Result of smith_normal_form: u * m * v == d.
struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
};

/// Diagonal entries of `d` are nonnegative and each divides the next.
SmithForm smith_normal_form(const IntMatrix& m);

BigInt determinant(const IntMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& x);
IntMatrix transpose(const IntMatrix& a);
IntMatrix identity_matrix(std::size_t n);

/// L^dual / L presented by invariant factors.
struct DiscriminantGroup {
    IntVector invariant_factors;  ///< all >= 2, each dividing the next
    RatMatrix generator_lifts;    ///< one rational vector of L^dual per factor
    BigInt order = 1;

    /// Largest invariant factor (1 for the trivial group).
    BigInt exponent() const;
};

/// Element of a DiscriminantGroup; coefficient i lives in [0, invariant_factors[i]).
struct DiscClass {
    IntVector coefficients;
    friend bool operator==(const DiscClass&, const DiscClass&) = default;
};

struct Signature {
    int positive = 0;
    int negative = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Non-degenerate integral symmetric bilinear form. Immutable after construction.
class Lattice {
  public:
    /// Throws DimensionError for non-square or asymmetric input and
    /// DegenerateLatticeError when det == 0.
    explicit Lattice(IntMatrix gram, std::string label = {});

    std::size_t rank() const noexcept { return gram_.size(); }
    const IntMatrix& gram() const noexcept { return gram_; }
    const std::string& label() const noexcept { return label_; }
    const BigInt& det() const noexcept { return det_; }
    const DiscriminantGroup& discriminant_group() const noexcept { return disc_; }

    /// Row transform of the Smith form of the Gram matrix; used to read off
    /// discriminant-group coordinates.
    const IntMatrix& smith_row_transform() const noexcept { return smith_u_; }
    const IntVector& smith_diagonal() const noexcept { return smith_diag_; }

  private:
    IntMatrix gram_;
    std::string label_;
    BigInt det_;
    IntMatrix smith_u_;
    IntVector smith_diag_;
    DiscriminantGroup disc_;
};

/// gram * v.
IntVector gram_image(const Lattice& lattice, const LatticeVector& v);

BigInt pairing(const Lattice& lattice, const LatticeVector& v, const LatticeVector& w);
BigInt norm(const Lattice& lattice, const LatticeVector& v);

/// Pairing with a rational vector (used for dual-lattice elements).
Rational rational_pairing(const Lattice& lattice, const RatVector& v, const RatVector& w);

/// Positive generator of the ideal b(v, L); throws for the zero vector.
BigInt divisibility(const Lattice& lattice, const LatticeVector& v);

/// gcd of coordinates equals 1; throws for the zero vector.
bool is_primitive(const LatticeVector& v);

inline bool is_primitive(const Lattice&, const LatticeVector& v) { return is_primitive(v); }

const DiscriminantGroup& discriminant_group(const Lattice& lattice);

/// Class of v / div(v) in A_L. Requires a primitive vector.
DiscClass disc_class(const Lattice& lattice, const LatticeVector& v);

/// Class of an arbitrary element of L^dual given by rational coordinates.
DiscClass disc_class_of_dual(const Lattice& lattice, const RatVector& y);

BigInt order(const DiscriminantGroup& group, const DiscClass& cls);
DiscClass negate(const DiscriminantGroup& group, const DiscClass& cls);

/// Exact inertia via rational congruence diagonalization.
Signature signature(const Lattice& lattice);
Signature signature(const IntMatrix& symmetric);

/// Equal norms and equal discriminant classes. The caller asserts that L
/// contains two orthogonal hyperbolic planes; that hypothesis is not checked.
bool eichler_equivalent(const Lattice& lattice, const LatticeVector& v, const LatticeVector& w);

/// Throws DimensionError when v does not match the lattice rank.
void check_dimension(const Lattice& lattice, const LatticeVector& v, const char* what);

}  // namespace picard
