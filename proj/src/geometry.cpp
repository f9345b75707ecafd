#include "syncmap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "syncmap/symmetry.hpp"

namespace syncmap {

namespace {

// Residual of the implicit equation for Gamma at fixed y: pi - x - 2a sin x - a sin y.
double gamma_residual(double x, double y, double a) {
    return kPi - x - 2.0 * a * std::sin(x) - a * std::sin(y);
}

// A1 is the union of two convex quadrilaterals glued along x = pi. The
// margin shrinks the outer edges only; the seam is interior to the union.
bool in_a1(PhasePoint p, double m) {
    const bool left = p.x <= kPi && p.y <= p.x - m && p.y >= -p.x + m &&
                      p.y >= p.x - kPi + m;
    const bool right = p.x >= kPi && p.y <= kTwoPi - p.x - m &&
                       p.y >= kPi - p.x + m && p.y >= p.x - kTwoPi + m;
    return left || right;
}

bool in_s1(PhasePoint p, double m) {
    return p.x >= 0.0 + m && p.y >= p.x + m && p.y <= kTwoPi - p.x - m;
}

// Membership of the sectors S2..S4 and compacts A2..A4 is delegated to the
// symmetry images of S1 / A1 (involutions, so pullback = push-forward).
SymmetryId mirror_of(RegionId r) {
    switch (r) {
    case RegionId::S2:
    case RegionId::A2:
        return SymmetryId::Phi2;
    case RegionId::S3:
    case RegionId::A3:
        return SymmetryId::Phi3;
    case RegionId::S4:
    case RegionId::A4:
        return SymmetryId::Phi4;
    default:
        return SymmetryId::Phi1;
    }
}

std::vector<PhasePoint> resample_closed(const std::vector<PhasePoint>& vertices,
                                        double step) {
    std::vector<PhasePoint> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const PhasePoint a = vertices[i];
        const PhasePoint b = vertices[i + 1];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        const std::size_t pieces = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(len / step)));
        for (std::size_t k = 0; k < pieces; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(pieces);
            out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    out.push_back(vertices.back());
    return out;
}

} // namespace

const char* region_name(RegionId r) {
    switch (r) {
    case RegionId::D: return "D";
    case RegionId::S1: return "S1";
    case RegionId::S2: return "S2";
    case RegionId::S3: return "S3";
    case RegionId::S4: return "S4";
    case RegionId::A1: return "A1";
    case RegionId::A2: return "A2";
    case RegionId::A3: return "A3";
    case RegionId::A4: return "A4";
    case RegionId::AL: return "AL";
    case RegionId::AM: return "AM";
    case RegionId::AR: return "AR";
    }
    return "?";
}

bool region_contains(RegionId r, PhasePoint p, const MapParams& mp,
                     double margin) {
    const double m = margin;
    switch (r) {
    case RegionId::D:
        return p.x >= 0.0 + m && p.x <= kTwoPi - m && p.y >= 0.0 + m &&
               p.y <= kTwoPi - m;
    case RegionId::S1:
        return in_s1(p, m);
    case RegionId::S2:
    case RegionId::S3:
    case RegionId::S4:
        return in_s1(symmetry(mirror_of(r))(p), m);
    case RegionId::A1:
        return in_a1(p, m);
    case RegionId::A2:
    case RegionId::A3:
    case RegionId::A4:
        return in_a1(symmetry(mirror_of(r))(p), m);
    case RegionId::AL: {
        if (!in_a1(p, m) || p.x > kPi) return false;
        if (p.y < 0.0) return true; // Gamma stays right of x = pi below y = 0
        if (p.y > kPi) return false;
        return p.x <= gamma_x(p.y, mp) - m;
    }
    case RegionId::AM: {
        if (!in_a1(p, m) || p.x > kPi - m) return false;
        if (p.y < 0.0 || p.y > kPi) return false;
        return p.x >= gamma_x(p.y, mp) + m;
    }
    case RegionId::AR:
        return in_a1(p, m) && p.x >= kPi + m;
    }
    return false;
}

double gamma_x(double y, const MapParams& mp, double tol) {
    if (!(tol > 0.0)) throw DomainError("gamma_x: tolerance must be positive");
    if (!(y >= 0.0 && y <= kPi)) {
        throw DomainError("gamma_x: y must lie in [0, pi], got " +
                          std::to_string(y));
    }
    const double a = mp.a();
    double lo = kPi - 3.0 * a;
    double hi = kPi;
    double flo = gamma_residual(lo, y, a);
    double fhi = gamma_residual(hi, y, a);
    if (flo < 0.0 || fhi > 0.0) {
        throw BracketFailureError("gamma_x: [pi - 3a, pi] does not bracket");
    }

    // Bisection to a coarse interval; the residual is strictly decreasing in x.
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 60 && hi - lo > 1e-4; ++it) {
        x = 0.5 * (lo + hi);
        const double f = gamma_residual(x, y, a);
        if (f >= 0.0) {
            lo = x;
        } else {
            hi = x;
        }
    }

    // Newton polish; the derivative -1 - 2a cos x never vanishes.
    x = 0.5 * (lo + hi);
    for (int it = 0; it < 40; ++it) {
        const double f = gamma_residual(x, y, a);
        if (std::fabs(f) <= tol) return x;
        const double df = -1.0 - 2.0 * a * std::cos(x);
        double next = x - f / df;
        if (next < lo || next > hi) next = 0.5 * (lo + hi);
        const double fn = gamma_residual(next, y, a);
        if (fn >= 0.0) {
            lo = std::max(lo, next);
        } else {
            hi = std::min(hi, next);
        }
        x = next;
    }
    if (std::fabs(gamma_residual(x, y, a)) <= tol) return x;
    throw NonConvergenceError("gamma_x: residual above tolerance");
}

GammaMinimum gamma_minimum(const MapParams& mp, double tol) {
    const double y = kPi / 2.0;
    return {y, gamma_x(y, mp, tol)};
}

std::vector<PhasePoint> GammaCurve::polyline(std::size_t samples) const {
    if (samples < 2) throw DomainError("GammaCurve::polyline: samples must be >= 2");
    std::vector<PhasePoint> out;
    out.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double y = kPi * static_cast<double>(i) / static_cast<double>(samples - 1);
        out.push_back({x_at(y), y});
    }
    return out;
}

std::vector<PhasePoint> region_boundary(RegionId r, const MapParams& mp,
                                        double step) {
    if (!(step > 0.0)) throw DomainError("region_boundary: step must be positive");
    const double h = kPi / 2.0;

    auto gamma_arc = [&](bool up) {
        // Gamma from (pi, 0) to (pi, pi), sampled at the requested resolution.
        const std::size_t n = std::max<std::size_t>(
            2, static_cast<std::size_t>(std::ceil(kPi / step)) + 1);
        GammaCurve curve{mp};
        std::vector<PhasePoint> arc = curve.polyline(n);
        if (!up) std::reverse(arc.begin(), arc.end());
        return arc;
    };

    switch (r) {
    case RegionId::D:
        return resample_closed(
            {{0, 0}, {kTwoPi, 0}, {kTwoPi, kTwoPi}, {0, kTwoPi}, {0, 0}}, step);
    case RegionId::S1:
        return resample_closed({{0, 0}, {kPi, kPi}, {0, kTwoPi}, {0, 0}}, step);
    case RegionId::A1:
        return resample_closed({{0, 0},
                                {h, -h},
                                {kPi, 0},
                                {3.0 * h, -h},
                                {kTwoPi, 0},
                                {kPi, kPi},
                                {0, 0}},
                               step);
    case RegionId::S2:
    case RegionId::S3:
    case RegionId::S4:
    case RegionId::A2:
    case RegionId::A3:
    case RegionId::A4: {
        const bool sector = r == RegionId::S2 || r == RegionId::S3 || r == RegionId::S4;
        const SymmetryMap phi = symmetry(mirror_of(r));
        std::vector<PhasePoint> base =
            region_boundary(sector ? RegionId::S1 : RegionId::A1, mp, step);
        for (PhasePoint& p : base) p = phi(p);
        return base;
    }
    case RegionId::AL: {
        std::vector<PhasePoint> out =
            resample_closed({{0, 0}, {h, -h}, {kPi, 0}}, step);
        const std::vector<PhasePoint> arc = gamma_arc(true);
        out.insert(out.end(), arc.begin() + 1, arc.end());
        const std::vector<PhasePoint> top =
            resample_closed({{kPi, kPi}, {0, 0}}, step);
        out.insert(out.end(), top.begin() + 1, top.end());
        return out;
    }
    case RegionId::AM: {
        std::vector<PhasePoint> out = gamma_arc(true);
        const std::vector<PhasePoint> edge =
            resample_closed({{kPi, kPi}, {kPi, 0}}, step);
        out.insert(out.end(), edge.begin() + 1, edge.end());
        return out;
    }
    case RegionId::AR:
        return resample_closed(
            {{kPi, 0}, {3.0 * h, -h}, {kTwoPi, 0}, {kPi, kPi}, {kPi, 0}}, step);
    }
    throw DomainError("region_boundary: unknown region");
}

BoundingBox region_bounding_box(RegionId r, const MapParams& mp) {
    const std::vector<PhasePoint> boundary = region_boundary(r, mp, 0.5);
    BoundingBox box{boundary.front().x, boundary.front().x, boundary.front().y,
                    boundary.front().y};
    for (const PhasePoint& p : boundary) {
        box.x_min = std::min(box.x_min, p.x);
        box.x_max = std::max(box.x_max, p.x);
        box.y_min = std::min(box.y_min, p.y);
        box.y_max = std::max(box.y_max, p.y);
    }
    return box;
}

} // namespace syncmap
