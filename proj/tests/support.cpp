#include "support.hpp"

#include "picard/catalog.hpp"

#include <numeric>

namespace picard::testing {

std::optional<std::pair<BigInt, BigInt>> pell_brute_force(long n, long long y_cap) {
    using i128 = __int128;
    i128 x = 1;
    for (long long y = 1; y <= y_cap; ++y) {
        const i128 t = static_cast<i128>(n) * y * y + 1;
        while ((x + 1) * (x + 1) <= t) ++x;
        if (x * x == t) {
            // x fits in 64 bits for every cap used in the tests.
            return std::make_pair(BigInt(static_cast<unsigned long long>(x)), BigInt(y));
        }
    }
    return std::nullopt;
}

std::pair<BigInt, BigInt> pell_chakravala(long n) {
    BigInt a = 1;
    while ((a + 1) * (a + 1) <= n) ++a;
    if ((a + 1) * (a + 1) - n < n - a * a) ++a;
    BigInt b = 1;
    BigInt k = a * a - n;
    while (k != 1) {
        const BigInt ak = k < 0 ? BigInt(-k) : k;
        // m > 0 with a + b m divisible by |k| and |m^2 - n| minimal.
        BigInt best_m = 0, best_gap = -1;
        for (BigInt m = 1; m * m <= 4 * BigInt(n) + ak * ak + 4 * ak; ++m) {
            if ((a + b * m) % ak != 0) continue;
            BigInt gap = m * m - n;
            if (gap < 0) gap = -gap;
            if (best_gap < 0 || gap < best_gap) {
                best_gap = gap;
                best_m = m;
            }
        }
        const BigInt m = best_m;
        const BigInt a2 = (a * m + n * b) / ak;
        const BigInt b2 = (a + b * m) / ak;
        const BigInt k2 = (m * m - n) / k;
        a = a2 < 0 ? BigInt(-a2) : a2;
        b = b2 < 0 ? BigInt(-b2) : b2;
        k = k2;
    }
    return {a, b};
}

namespace {

RatMatrix inverse(const IntMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a(n, RatVector(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        const Rational piv = a[c][c];
        for (auto& x : a[c]) x /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    RatMatrix out(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

BigInt bilinear(const IntMatrix& g, const IntVector& v, const IntVector& w) {
    BigInt s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) s += v[i] * g[i][j] * w[j];
    return s;
}

BigInt gcd_all(const IntVector& v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

}  // namespace

IntVector enumeration_box(const Lattice& lattice, const LatticeVector& ample, const BigInt& limit) {
    const IntMatrix& g = lattice.gram();
    const std::size_t n = g.size();
    const BigInt hh = bilinear(g, ample.coords(), ample.coords());
    IntVector gh(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gh[i] += g[i][j] * ample[j];
    IntMatrix q(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = -hh * g[i][j] + 2 * gh[i] * gh[j];
    // For a positive definite Q, max of x_i^2 over Q(x) <= T is T (Q^-1)_ii.
    const RatMatrix inv = inverse(q);
    IntVector box(n);
    for (std::size_t i = 0; i < n; ++i) box[i] = isqrt(floor_of(Rational(limit) * inv[i][i]));
    return box;
}

std::vector<LatticeVector> enumerate_by_box(const Lattice& lattice, const DeformationType& type,
                                            const LatticeVector& ample, const BigInt& bound) {
    const IntMatrix& g = lattice.gram();
    const std::size_t n = g.size();
    const BigInt hh = bilinear(g, ample.coords(), ample.coords());
    BigInt worst = 0;
    for (const auto& p : profiles(type)) worst = std::max(worst, BigInt(-p.square));
    const IntVector box = enumeration_box(lattice, ample, worst * hh + 2 * bound * bound);

    IntVector exps = expected_disc_group(type);
    const BigInt exponent = exps.empty() ? BigInt(1) : exps.back();

    std::vector<LatticeVector> out;
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = -box[i];
    while (true) {
        const BigInt k = bilinear(g, v, ample.coords());
        if (k > 0 && k <= bound && gcd_all(v) == 1) {
            const BigInt sq = bilinear(g, v, v);
            IntVector gv(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) gv[i] += g[i][j] * v[j];
            const BigInt dv = gcd(gcd_all(gv), exponent);
            for (const auto& p : profiles(type))
                if (p.square == sq && p.div == dv) {
                    out.emplace_back(v);
                    break;
                }
        }
        std::size_t i = 0;
        while (i < n && v[i] == box[i]) {
            v[i] = -box[i];
            ++i;
        }
        if (i == n) break;
        ++v[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Lattice, LatticeVector> lattice_with_profile(Rng& rng, const ExceptionalProfile& profile,
                                                       std::size_t rank) {
    const BigInt& s = profile.square;
    const BigInt& m = profile.div;
    IntMatrix base{{s, m}, {m, BigInt(uniform(rng, 1, 6))}};
    IntVector rest;
    for (std::size_t i = 2; i < rank; ++i) rest.push_back(-uniform(rng, 1, 6));
    IntMatrix g = rest.empty() ? base : block_diagonal(base, diagonal(rest));
    Transformed t = transform(rng, g);
    IntVector e0(rank, 0);
    e0[0] = 1;
    return {t.lattice, t.to_new(e0)};
}

AlphaKTriple random_alpha_k_triple(Rng& rng, std::size_t rank) {
    IntMatrix base{{0, 1}, {1, BigInt(uniform(rng, -4, 4))}};
    IntVector rest;
    for (std::size_t i = 2; i < rank; ++i) rest.push_back(-uniform(rng, 1, 5));
    Transformed t = transform(rng, block_diagonal(base, diagonal(rest)));
    IntVector alpha(rank, 0), alpha_prime(rank, 0), e(rank, 0);
    alpha[0] = 1;
    alpha_prime[2] = uniform(rng, 1, 2);
    e[1] = uniform(rng, 1, 3);
    e[0] = uniform(rng, -2, 2);
    for (std::size_t i = 3; i < rank; ++i) e[i] = uniform(rng, -2, 2);
    return {t.lattice, t.to_new(alpha), t.to_new(alpha_prime), t.to_new(e)};
}

AlphaInstance random_alpha_instance(Rng& rng, std::size_t rank, bool isotropic) {
    if (isotropic) {
        const long c = uniform(rng, -4, 4);
        IntMatrix base{{0, 1}, {1, BigInt(c)}};
        IntVector rest;
        for (std::size_t i = 2; i < rank; ++i) rest.push_back(-uniform(rng, 1, 5));
        IntMatrix g = rest.empty() ? base : block_diagonal(base, diagonal(rest));
        Transformed t = transform(rng, g);
        IntVector e(rank, 0), d(rank, 0);
        e[0] = 1;
        d[1] = 1;
        BigInt negative = 0;
        for (std::size_t i = 2; i < rank; ++i) {
            d[i] = uniform(rng, -2, 2);
            negative += rest[i - 2] * d[i] * d[i];
        }
        // D.D = c + 2 lambda + negative > 0.
        const BigInt lambda = floor_div(-(c + negative), BigInt(2)) + 1 + uniform(rng, 0, 3);
        d[0] = lambda;
        return {t.lattice, t.to_new(d), t.to_new(e)};
    }
    while (true) {
        Lattice L = random_hyperbolic(rng, rank);
        LatticeVector d = random_nonzero_vector(rng, rank, 3);
        if (norm(L, d) <= 0) continue;
        LatticeVector e = random_nonzero_vector(rng, rank, 3);
        if (norm(L, e) >= 0) continue;
        const BigInt p = pairing(L, e, d);
        if (p == 0) continue;
        if (p < 0) e = -e;
        return {L, d, e};
    }
}

}  // namespace picard::testing
