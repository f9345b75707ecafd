#include "syncmap/map.hpp"

#include <cmath>
#include <string>

namespace syncmap {

namespace {

void require_finite(PhasePoint p, const char* where) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw DomainError(std::string(where) + ": non-finite phase point");
    }
}

} // namespace

MapParams::MapParams(double a) : a_(a) {
    if (!std::isfinite(a) || a <= 0.0 || a >= 1.0 / 6.0) {
        throw DomainError("coupling strength must satisfy 0 < a < 1/6, got " +
                          std::to_string(a));
    }
}

double MapParams::jacobian_det_lower_bound() const {
    const double d = 1.0 - 2.0 * a_;
    return d * d - a_ * a_;
}

PhasePoint operator+(PhasePoint p, PhasePoint q) { return {p.x + q.x, p.y + q.y}; }
PhasePoint operator-(PhasePoint p, PhasePoint q) { return {p.x - q.x, p.y - q.y}; }
PhasePoint operator*(double s, PhasePoint p) { return {s * p.x, s * p.y}; }

double linf(PhasePoint p) { return std::max(std::fabs(p.x), std::fabs(p.y)); }

PhasePoint wrap(PhasePoint p) {
    auto wrap1 = [](double v) {
        double w = std::fmod(v, kTwoPi);
        if (w < 0.0) w += kTwoPi;
        return w;
    };
    return {wrap1(p.x), wrap1(p.y)};
}

double torus_distance(PhasePoint p, PhasePoint q) {
    auto dist1 = [](double u, double v) {
        double d = std::fmod(std::fabs(u - v), kTwoPi);
        return std::min(d, kTwoPi - d);
    };
    return std::max(dist1(p.x, q.x), dist1(p.y, q.y));
}

PhasePoint Mat2::apply(PhasePoint p) const {
    return {a11 * p.x + a12 * p.y, a21 * p.x + a22 * p.y};
}

PhasePoint map_forward(PhasePoint p, const MapParams& mp) {
    require_finite(p, "map_forward");
    const double a = mp.a();
    const double sx = std::sin(p.x);
    const double sy = std::sin(p.y);
    return {p.x + 2.0 * a * sx + a * sy, p.y + a * sx + 2.0 * a * sy};
}

Mat2 map_jacobian(PhasePoint p, const MapParams& mp) {
    require_finite(p, "map_jacobian");
    const double a = mp.a();
    const double cx = std::cos(p.x);
    const double cy = std::cos(p.y);
    return {1.0 + 2.0 * a * cx, a * cy, a * cx, 1.0 + 2.0 * a * cy};
}

PhasePoint map_inverse(PhasePoint p, const MapParams& mp, double tol) {
    require_finite(p, "map_inverse");
    if (!(tol > 0.0)) {
        throw DomainError("map_inverse: tolerance must be positive");
    }

    constexpr int kMaxIterations = 50;
    PhasePoint q = p;
    PhasePoint r = map_forward(q, mp) - p;
    double res = linf(r);
    for (int it = 0; it < kMaxIterations; ++it) {
        if (res <= tol) return q;

        const Mat2 j = map_jacobian(q, mp);
        const double det = j.det(); // positive for a < 1/6
        const PhasePoint d = {(j.a22 * r.x - j.a12 * r.y) / det,
                              (j.a11 * r.y - j.a21 * r.x) / det};

        // Damped step: halve until the residual does not grow.
        double lambda = 1.0;
        for (int k = 0; k < 30; ++k) {
            const PhasePoint trial = q - lambda * d;
            const PhasePoint rt = map_forward(trial, mp) - p;
            const double res_t = linf(rt);
            if (res_t < res || res_t <= tol) {
                q = trial;
                r = rt;
                res = res_t;
                break;
            }
            lambda *= 0.5;
        }
    }
    if (res <= tol) return q;
    throw NonConvergenceError("map_inverse: residual " + std::to_string(res) +
                              " above tolerance after Newton iteration cap");
}

OrbitTrace iterate(PhasePoint p0, std::size_t n, const MapParams& mp,
                   OrbitDirection direction, double inverse_tol) {
    require_finite(p0, "iterate");
    OrbitTrace trace{{}, mp, direction};
    trace.points.reserve(n + 1);
    trace.points.push_back(p0);
    PhasePoint p = p0;
    for (std::size_t i = 0; i < n; ++i) {
        p = direction == OrbitDirection::Forward ? map_forward(p, mp)
                                                 : map_inverse(p, mp, inverse_tol);
        trace.points.push_back(p);
    }
    return trace;
}

} // namespace syncmap
