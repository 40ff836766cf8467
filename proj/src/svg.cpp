#include "picard/svg.hpp"

#include "picard/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace picard {

namespace {

std::string fixed(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

RatVector axpy(const Rational& a, const RatVector& x, const RatVector& y) {
    RatVector out = y;
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += a * x[i];
    return out;
}

}  // namespace

std::string plot_section_svg(const ConeAnalysis& an) {
    const Lattice& L = an.lattice;
    if (L.rank() != 3)
        throw PreconditionError("plot-section needs a rank-3 lattice (got rank " + std::to_string(L.rank()) +
                                "); use analyze instead");

    const RatVector h = to_rational(an.ample.coords());
    const Rational qh = rational_pairing(L, h, h);

    // Exact orthogonal basis f1, f2 of h^perp: Gram-Schmidt on the standard
    // basis. The form is negative definite there.
    std::vector<RatVector> basis;
    for (std::size_t i = 0; i < 3 && basis.size() < 2; ++i) {
        RatVector p(3, 0);
        p[i] = 1;
        p = axpy(-rational_pairing(L, p, h) / qh, h, p);
        for (const auto& f : basis) p = axpy(-rational_pairing(L, p, f) / rational_pairing(L, f, f), f, p);
        if (rational_pairing(L, p, p) != 0) basis.push_back(p);
    }
    if (basis.size() != 2) throw ContractViolation("plot-section: h^perp is not negative definite");

    // With f_i' = s_i f_i and q(f_i') = -q(h), the slice {x.h = q(h)} in the
    // coordinates (u, v) of h + u f1' + v f2' has the positive cone as the
    // unit disk.
    std::array<double, 2> s{};
    for (std::size_t i = 0; i < 2; ++i) s[i] = std::sqrt(to_double(qh / -rational_pairing(L, basis[i], basis[i])));

    struct Segment {
        double x1, y1, x2, y2;
    };
    std::vector<Segment> walls;
    for (const auto& w : an.chamber_walls) {
        const RatVector c = to_rational(w.coords());
        const double a = to_double(rational_pairing(L, basis[0], c)) * s[0];
        const double b = to_double(rational_pairing(L, basis[1], c)) * s[1];
        const double k = to_double(rational_pairing(L, h, c));
        const double nn = a * a + b * b;
        const double px = -k * a / nn, py = -k * b / nn;
        const double half = std::sqrt(std::max(0.0, 1.0 - (px * px + py * py)));
        const double dx = -b / std::sqrt(nn), dy = a / std::sqrt(nn);
        walls.push_back({px - half * dx, py - half * dy, px + half * dx, py + half * dy});
    }

    std::vector<std::pair<double, double>> points;
    double extent = 1.2;
    for (const auto& r : an.extremal_rays) {
        const RatVector x = to_rational(r.coords());
        const Rational rh = rational_pairing(L, x, h);
        const double u = -to_double(rational_pairing(L, x, basis[0]) / rh) * s[0];
        const double v = -to_double(rational_pairing(L, x, basis[1]) / rh) * s[1];
        points.emplace_back(u, v);
        extent = std::max({extent, std::abs(u) + 0.2, std::abs(v) + 0.2});
    }

    const double size = 400.0, scale = size / (2 * extent);
    auto X = [&](double u) { return fixed((u + extent) * scale); };
    auto Y = [&](double v) { return fixed((extent - v) * scale); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(size) << "\" height=\"" << fixed(size)
        << "\" viewBox=\"0 0 " << fixed(size) << " " << fixed(size) << "\">\n";
    out << "  <title>Section of the positive cone at x.h = h.h, h = " << to_string(an.ample) << ", verdict "
        << to_string(an.verdict) << ", bound " << an.bound.max_ample_pairing.str() << "</title>\n";
    out << "  <ellipse class=\"positive-cone\" cx=\"" << X(0) << "\" cy=\"" << Y(0) << "\" rx=\"" << fixed(scale)
        << "\" ry=\"" << fixed(scale) << "\" fill=\"#eef3fb\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
    for (std::size_t i = 0; i < walls.size(); ++i) {
        const auto& w = walls[i];
        out << "  <line class=\"wall\" data-class=\"" << to_string(an.chamber_walls[i]) << "\" x1=\"" << X(w.x1)
            << "\" y1=\"" << Y(w.y1) << "\" x2=\"" << X(w.x2) << "\" y2=\"" << Y(w.y2)
            << "\" stroke=\"#b22222\" stroke-width=\"1.5\"/>\n";
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        out << "  <circle class=\"ray\" data-class=\"" << to_string(an.extremal_rays[i]) << "\" cx=\""
            << X(points[i].first) << "\" cy=\"" << Y(points[i].second)
            << "\" r=\"4.0000\" fill=\"#2e7d32\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace picard
