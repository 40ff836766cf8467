#include "picard/lattice.hpp"

#include "picard/errors.hpp"

#include <algorithm>
#include <utility>

namespace picard {

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector sizes differ");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return LatticeVector(std::move(out));
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector sizes differ");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return LatticeVector(std::move(out));
}

LatticeVector operator-(const LatticeVector& a) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return LatticeVector(std::move(out));
}

LatticeVector operator*(const BigInt& s, const LatticeVector& a) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return LatticeVector(std::move(out));
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return std::strong_ordering::less;
        if (a[i] > b[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string to_string(const LatticeVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// Matrix helpers

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t rows = a.size(), inner = b.size(), cols = b[0].size();
    if (a[0].size() != inner) throw DimensionError("matrix product: inner dimensions differ");
    IntMatrix out(rows, IntVector(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

IntVector multiply(const IntMatrix& a, const IntVector& x) {
    IntVector out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw DimensionError("matrix-vector product: sizes differ");
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    }
    return out;
}

IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix t(a[0].size(), IntVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

BigInt determinant(const IntMatrix& m) {
    // Fraction-free Bareiss elimination.
    const std::size_t n = m.size();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
}

// row_i += f * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] += f * a[j][c];
}

// col_i += f * col_j
void add_col(IntMatrix& a, std::size_t i, std::size_t j, const BigInt& f) {
    for (auto& row : a) row[i] += f * row[j];
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& row : m)
        if (row.size() != cols) throw DimensionError("smith_normal_form: ragged matrix");

    SmithForm sf{m, identity_matrix(rows), identity_matrix(cols)};
    IntMatrix& a = sf.d;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs_value(a[i][j]) < abs_value(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) return sf;  // trailing block is zero
            if (pr != t) {
                swap_rows(a, t, pr);
                swap_rows(sf.u, t, pr);
            }
            if (pc != t) {
                swap_cols(a, t, pc);
                swap_cols(sf.v, t, pc);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = a[i][t] / a[t][t];
                add_row(a, i, t, -q);
                add_row(sf.u, i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = a[t][j] / a[t][t];
                add_col(a, j, t, -q);
                add_col(sf.v, j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce the divisibility chain.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(a, t, i, 1);
                        add_row(sf.u, t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            for (auto& x : sf.u[t]) x = -x;
        }
    }
    return sf;
}

// ---------------------------------------------------------------------------
// Lattice

BigInt DiscriminantGroup::exponent() const {
    return invariant_factors.empty() ? BigInt(1) : invariant_factors.back();
}

Lattice::Lattice(IntMatrix gram, std::string label) : gram_(std::move(gram)), label_(std::move(label)) {
    const std::size_t n = gram_.size();
    if (n == 0) throw DimensionError("lattice: empty Gram matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) throw DimensionError("lattice: Gram matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw DimensionError("lattice: Gram matrix is not symmetric at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
    det_ = determinant(gram_);
    if (det_ == 0) throw DegenerateLatticeError("lattice: Gram matrix is degenerate (det = 0)");

    SmithForm sf = smith_normal_form(gram_);
    smith_u_ = std::move(sf.u);
    smith_diag_.resize(n);
    for (std::size_t i = 0; i < n; ++i) smith_diag_[i] = sf.d[i][i];

    disc_.order = abs_value(det_);
    for (std::size_t i = 0; i < n; ++i) {
        if (smith_diag_[i] <= 1) continue;
        disc_.invariant_factors.push_back(smith_diag_[i]);
        RatVector lift(n);
        for (std::size_t r = 0; r < n; ++r) lift[r] = Rational(sf.v[r][i], smith_diag_[i]);
        disc_.generator_lifts.push_back(std::move(lift));
    }
}

void check_dimension(const Lattice& lattice, const LatticeVector& v, const char* what) {
    if (v.size() != lattice.rank())
        throw DimensionError(std::string(what) + ": vector has length " + std::to_string(v.size()) +
                             ", lattice rank is " + std::to_string(lattice.rank()));
}

IntVector gram_image(const Lattice& lattice, const LatticeVector& v) {
    check_dimension(lattice, v, "gram_image");
    return multiply(lattice.gram(), v.coords());
}

BigInt pairing(const Lattice& lattice, const LatticeVector& v, const LatticeVector& w) {
    check_dimension(lattice, v, "pairing");
    check_dimension(lattice, w, "pairing");
    return dot(v.coords(), multiply(lattice.gram(), w.coords()));
}

BigInt norm(const Lattice& lattice, const LatticeVector& v) { return pairing(lattice, v, v); }

Rational rational_pairing(const Lattice& lattice, const RatVector& v, const RatVector& w) {
    const std::size_t n = lattice.rank();
    if (v.size() != n || w.size() != n) throw DimensionError("pairing: vector length differs from lattice rank");
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < n; ++j) row += Rational(lattice.gram()[i][j]) * w[j];
        s += v[i] * row;
    }
    return s;
}

BigInt divisibility(const Lattice& lattice, const LatticeVector& v) {
    check_dimension(lattice, v, "divisibility");
    if (v.is_zero()) throw PreconditionError("divisibility: zero vector");
    return content(gram_image(lattice, v));
}

bool is_primitive(const LatticeVector& v) {
    if (v.is_zero()) throw PreconditionError("is_primitive: zero vector");
    return content(v.coords()) == 1;
}

const DiscriminantGroup& discriminant_group(const Lattice& lattice) { return lattice.discriminant_group(); }

namespace {

// z is gram * y for some y in L^dual, so z is integral.
DiscClass class_from_gram_image(const Lattice& lattice, const IntVector& z) {
    IntVector w = multiply(lattice.smith_row_transform(), z);
    DiscClass cls;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const BigInt& d = lattice.smith_diagonal()[i];
        if (d > 1) cls.coefficients.push_back(floor_mod(w[i], d));
    }
    return cls;
}

}  // namespace

DiscClass disc_class(const Lattice& lattice, const LatticeVector& v) {
    check_dimension(lattice, v, "disc_class");
    if (!is_primitive(v)) throw NotPrimitiveError("disc_class: vector " + to_string(v) + " is not primitive");
    IntVector z = gram_image(lattice, v);
    BigInt t = content(z);
    for (auto& x : z) x /= t;
    return class_from_gram_image(lattice, z);
}

DiscClass disc_class_of_dual(const Lattice& lattice, const RatVector& y) {
    if (y.size() != lattice.rank()) throw DimensionError("disc_class_of_dual: length differs from rank");
    IntVector z(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < y.size(); ++j) s += Rational(lattice.gram()[i][j]) * y[j];
        if (boost::multiprecision::denominator(s) != 1)
            throw PreconditionError("disc_class_of_dual: vector is not in the dual lattice");
        z[i] = boost::multiprecision::numerator(s);
    }
    return class_from_gram_image(lattice, z);
}

BigInt order(const DiscriminantGroup& group, const DiscClass& cls) {
    BigInt result = 1;
    for (std::size_t i = 0; i < cls.coefficients.size(); ++i) {
        const BigInt& d = group.invariant_factors[i];
        result = lcm(result, d / gcd(cls.coefficients[i], d));
    }
    return result;
}

DiscClass negate(const DiscriminantGroup& group, const DiscClass& cls) {
    DiscClass out = cls;
    for (std::size_t i = 0; i < out.coefficients.size(); ++i)
        out.coefficients[i] = floor_mod(-out.coefficients[i], group.invariant_factors[i]);
    return out;
}

Signature signature(const IntMatrix& symmetric) {
    const std::size_t n = symmetric.size();
    RatMatrix a(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = symmetric[i][j];

    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && a[j][j] == 0) ++j;
            if (j < n) {
                std::swap(a[k], a[j]);
                for (auto& row : a) std::swap(row[k], row[j]);
            } else {
                j = k + 1;
                while (j < n && a[k][j] == 0) ++j;
                if (j == n) throw DegenerateLatticeError("signature: form is degenerate");
                // Congruence by e_k -> e_k + e_j makes the pivot 2 a[k][j].
                for (std::size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
                for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][j];
            }
        }
        const Rational pivot = a[k][k];
        (pivot > 0 ? sig.positive : sig.negative) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational f = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t r = k; r < n; ++r) a[r][i] = a[i][r];
        }
    }
    return sig;
}

Signature signature(const Lattice& lattice) { return signature(lattice.gram()); }

bool eichler_equivalent(const Lattice& lattice, const LatticeVector& v, const LatticeVector& w) {
    check_dimension(lattice, v, "eichler_equivalent");
    check_dimension(lattice, w, "eichler_equivalent");
    if (!is_primitive(v) || !is_primitive(w)) throw NotPrimitiveError("eichler_equivalent: inputs must be primitive");
    if (norm(lattice, v) != norm(lattice, w)) return false;
    return disc_class(lattice, v) == disc_class(lattice, w);
}

}  // namespace picard
