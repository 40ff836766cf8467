#include "picard/polyhedral.hpp"

#include "picard/errors.hpp"

#include <algorithm>

namespace picard {

namespace {

IntVector combine(const BigInt& a, const IntVector& u, const BigInt& b, const IntVector& v) {
    IntVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = a * u[i] - b * v[i];
    return primitive_part(out);
}

// Sign convention for lines: first nonzero coordinate positive.
IntVector canonical_line(IntVector v) {
    v = primitive_part(v);
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

using ZeroSet = std::vector<char>;

ZeroSet zero_set(const std::vector<IntVector>& processed, const IntVector& r) {
    ZeroSet z(processed.size());
    for (std::size_t i = 0; i < processed.size(); ++i) z[i] = dot(processed[i], r) == 0;
    return z;
}

bool contains_all(const ZeroSet& super, const ZeroSet& sub) {
    for (std::size_t i = 0; i < sub.size(); ++i)
        if (sub[i] && !super[i]) return false;
    return true;
}

}  // namespace

ConeGenerators cone_generators(const std::vector<IntVector>& inequalities, std::size_t dim) {
    std::vector<IntVector> lines;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim, 0);
        e[i] = 1;
        lines.push_back(std::move(e));
    }
    std::vector<IntVector> rays;
    std::vector<IntVector> processed;

    for (const auto& a : inequalities) {
        if (a.size() != dim) throw DimensionError("cone_generators: constraint has wrong length");
        if (is_zero(a)) {
            processed.push_back(a);
            continue;
        }

        // A line not orthogonal to the new constraint splits into a ray and
        // the hyperplane it meets.
        auto pivot = std::find_if(lines.begin(), lines.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
        if (pivot != lines.end()) {
            IntVector l0 = *pivot;
            lines.erase(pivot);
            BigInt s0 = dot(a, l0);
            if (s0 < 0) {
                for (auto& x : l0) x = -x;
                s0 = -s0;
            }
            for (auto& l : lines) {
                BigInt s = dot(a, l);
                if (s != 0) l = combine(s0, l, s, l0);
            }
            for (auto& r : rays) {
                BigInt s = dot(a, r);
                if (s != 0) r = combine(s0, r, s, l0);
            }
            rays.push_back(primitive_part(l0));
            processed.push_back(a);
            continue;
        }

        std::vector<BigInt> slack(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<IntVector> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            slack[i] = dot(a, rays[i]);
            if (slack[i] > 0) pos.push_back(i);
            else if (slack[i] < 0) neg.push_back(i);
            if (slack[i] >= 0) next.push_back(rays[i]);
        }
        if (!neg.empty() && !pos.empty()) {
            std::vector<ZeroSet> zs;
            zs.reserve(rays.size());
            for (const auto& r : rays) zs.push_back(zero_set(processed, r));
            for (std::size_t p : pos) {
                for (std::size_t n : neg) {
                    ZeroSet common(processed.size());
                    for (std::size_t i = 0; i < common.size(); ++i) common[i] = zs[p][i] && zs[n][i];
                    bool adjacent = true;
                    for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                        if (r == p || r == n) continue;
                        if (contains_all(zs[r], common)) adjacent = false;
                    }
                    if (adjacent) next.push_back(combine(slack[p], rays[n], slack[n], rays[p]));
                }
            }
        }
        rays = std::move(next);
        processed.push_back(a);
    }

    std::vector<IntVector> cleaned;
    for (auto& r : rays) {
        if (is_zero(r)) continue;
        cleaned.push_back(primitive_part(r));
    }
    std::sort(cleaned.begin(), cleaned.end());
    cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());

    ConeGenerators out;
    out.rays = std::move(cleaned);
    for (auto& l : lines) out.lines.push_back(canonical_line(l));
    std::sort(out.lines.begin(), out.lines.end());
    return out;
}

RatVector solve_linear(RatMatrix a, RatVector b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DimensionError("solve_linear: right-hand side has wrong length");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw PreconditionError("solve_linear: singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::size_t matrix_rank(RatMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

namespace {

Rational quadratic_value(const IntMatrix& gram, const RatVector& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < x.size(); ++j) row += Rational(gram[i][j]) * x[j];
        s += x[i] * row;
    }
    return s;
}

}  // namespace

ConcaveMaxResult maximize_concave_form(const IntMatrix& gram, const RatMatrix& eq_rows, const RatVector& eq_rhs,
                                       const RatMatrix& ineq_rows, RatVector start, const Rational& stop_above,
                                       std::size_t max_iterations) {
    // Primal active-set method for min f(x) = -x^T G x, whose Hessian
    // H = -2G is positive definite on the feasible directions.
    const std::size_t n = gram.size();
    RatVector x = std::move(start);
    std::vector<std::size_t> working;

    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
        const Rational value = quadratic_value(gram, x);
        if (value > stop_above) return {x, value, true};

        // KKT system for the equality-constrained subproblem on eq + working.
        const std::size_t m = eq_rows.size() + working.size();
        RatMatrix kkt(n + m, RatVector(n + m, 0));
        RatVector rhs(n + m, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) kkt[i][j] = Rational(-2 * gram[i][j]);
        for (std::size_t k = 0; k < m; ++k) {
            const RatVector& row = k < eq_rows.size() ? eq_rows[k] : ineq_rows[working[k - eq_rows.size()]];
            for (std::size_t j = 0; j < n; ++j) {
                kkt[n + k][j] = row[j];
                kkt[j][n + k] = row[j];
            }
            rhs[n + k] = k < eq_rows.size() ? eq_rhs[k] : Rational(0);
        }
        const RatVector sol = solve_linear(std::move(kkt), std::move(rhs));

        RatVector step(n);
        bool zero_step = true;
        for (std::size_t i = 0; i < n; ++i) {
            step[i] = sol[i] - x[i];
            if (step[i] != 0) zero_step = false;
        }

        if (zero_step) {
            // Multipliers of the working inequalities are lambda = -mu.
            std::size_t drop = working.size();
            Rational most_negative = 0;
            for (std::size_t w = 0; w < working.size(); ++w) {
                const Rational lambda = -sol[n + eq_rows.size() + w];
                if (lambda < most_negative) {
                    most_negative = lambda;
                    drop = w;
                }
            }
            if (drop == working.size()) return {x, value, false};
            working.erase(working.begin() + static_cast<std::ptrdiff_t>(drop));
            continue;
        }

        Rational alpha = 1;
        std::size_t blocking = ineq_rows.size();
        for (std::size_t i = 0; i < ineq_rows.size(); ++i) {
            if (std::find(working.begin(), working.end(), i) != working.end()) continue;
            const Rational rate = dot(ineq_rows[i], step);
            if (rate >= 0) continue;
            const Rational ratio = -dot(ineq_rows[i], x) / rate;
            if (ratio < alpha) {
                alpha = ratio;
                blocking = i;
            }
        }
        for (std::size_t i = 0; i < n; ++i) x[i] += alpha * step[i];
        if (blocking != ineq_rows.size()) working.push_back(blocking);
    }
    throw BoundExceededError("maximize_concave_form: no convergence within " + std::to_string(max_iterations) +
                             " iterations");
}

}  // namespace picard
