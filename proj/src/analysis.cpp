#include "syncmap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "syncmap/rng.hpp"

namespace syncmap {

namespace {

struct EigenPair {
    double value_1 = 0.0; // larger modulus first
    double value_2 = 0.0;
    PhasePoint vector_1;
    PhasePoint vector_2;
};

PhasePoint unit_eigenvector(const Mat2& m, double lambda) {
    // Null vector of m - lambda I, taken from the better-conditioned row.
    const PhasePoint r1{m.a12, lambda - m.a11};
    const PhasePoint r2{lambda - m.a22, m.a21};
    PhasePoint v = linf(r1) >= linf(r2) ? r1 : r2;
    const double norm = std::hypot(v.x, v.y);
    v = {v.x / norm, v.y / norm};
    if (v.x < 0.0 || (v.x == 0.0 && v.y < 0.0)) v = {-v.x, -v.y};
    return v;
}

EigenPair real_eigen(const Mat2& m) {
    const double half_trace = 0.5 * m.trace();
    const double disc = half_trace * half_trace - m.det();
    if (disc < 0.0) {
        throw DomainError("real_eigen: complex eigenvalues are not expected "
                          "for this map's fixed points");
    }
    const double s = std::sqrt(disc);
    double l1 = half_trace + s;
    double l2 = half_trace - s;
    if (std::fabs(l1) < std::fabs(l2)) std::swap(l1, l2);
    return {l1, l2, unit_eigenvector(m, l1), unit_eigenvector(m, l2)};
}

FixedPointKind classify(double l1, double l2) {
    const double m1 = std::fabs(l1);
    const double m2 = std::fabs(l2);
    if (m1 > 1.0 && m2 > 1.0) return FixedPointKind::Source;
    if (m1 < 1.0 && m2 < 1.0) return FixedPointKind::Sink;
    return FixedPointKind::Saddle;
}

PhasePoint newton_fixed_point(PhasePoint guess, const MapParams& mp) {
    PhasePoint p = guess;
    for (int it = 0; it < 25; ++it) {
        const PhasePoint g = map_forward(p, mp) - p;
        if (linf(g) <= 1e-14) return p;
        Mat2 j = map_jacobian(p, mp);
        j.a11 -= 1.0;
        j.a22 -= 1.0;
        const double det = j.det();
        p = p - PhasePoint{(j.a22 * g.x - j.a12 * g.y) / det,
                           (j.a11 * g.y - j.a21 * g.x) / det};
    }
    return p;
}

struct ArcEndpoints {
    PhasePoint source;
    PhasePoint saddle;
};

ArcEndpoints arc_endpoints(HeteroclinicLabel label) {
    const double p = kPi;
    const double t = kTwoPi;
    switch (label) {
    case HeteroclinicLabel::Eta1: return {{0, 0}, {p, 0}};
    case HeteroclinicLabel::Eta2: return {{t, 0}, {p, 0}};
    case HeteroclinicLabel::Eta3: return {{t, 0}, {t, p}};
    case HeteroclinicLabel::Eta4: return {{t, t}, {t, p}};
    case HeteroclinicLabel::Eta5: return {{t, t}, {p, t}};
    case HeteroclinicLabel::Eta6: return {{0, t}, {p, t}};
    case HeteroclinicLabel::Eta7: return {{0, t}, {0, p}};
    case HeteroclinicLabel::Eta8: return {{0, 0}, {0, p}};
    }
    throw DomainError("arc_endpoints: unknown label");
}

struct TaggedPoint {
    double tau; // backward-time parameter ordering the manifold
    PhasePoint p;
};

// Traces one branch of the saddle's stable manifold backward. Returns the
// chain ordered from the source end to the saddle end, or empty if the
// branch does not reach the source within the iteration cap.
std::vector<TaggedPoint> trace_branch(PhasePoint saddle, PhasePoint source,
                                      PhasePoint eigvec, double sign,
                                      double mu, std::size_t seeds,
                                      const MapParams& mp) {
    // Slightly inside 1e-6 so the saddle-end vertex sits strictly within
    // the arc's stated endpoint tolerance after rounding.
    constexpr double kSeedOffset = 0.99e-6;
    constexpr double kSourceRadius = 1e-6;
    constexpr int kDepthCap = 2000;

    std::vector<TaggedPoint> chain;
    for (std::size_t j = 0; j < seeds; ++j) {
        const double frac = static_cast<double>(j) / static_cast<double>(seeds);
        const double offset = kSeedOffset * std::pow(mu, frac);
        PhasePoint p = saddle + (sign * offset) * eigvec;
        bool converged = false;
        for (int k = 0; k <= kDepthCap; ++k) {
            chain.push_back({static_cast<double>(k) + frac, p});
            const PhasePoint d = p - source;
            if (std::hypot(d.x, d.y) <= kSourceRadius) {
                converged = true;
                break;
            }
            p = map_inverse(p, mp, 1e-13);
        }
        if (!converged) return {};
    }
    std::sort(chain.begin(), chain.end(),
              [](const TaggedPoint& a, const TaggedPoint& b) {
                  return a.tau > b.tau;
              });
    return chain;
}

} // namespace

const char* kind_name(FixedPointKind k) {
    switch (k) {
    case FixedPointKind::Source: return "source";
    case FixedPointKind::Saddle: return "saddle";
    case FixedPointKind::Sink: return "sink";
    }
    return "?";
}

const char* heteroclinic_name(HeteroclinicLabel label) {
    switch (label) {
    case HeteroclinicLabel::Eta1: return "eta1";
    case HeteroclinicLabel::Eta2: return "eta2";
    case HeteroclinicLabel::Eta3: return "eta3";
    case HeteroclinicLabel::Eta4: return "eta4";
    case HeteroclinicLabel::Eta5: return "eta5";
    case HeteroclinicLabel::Eta6: return "eta6";
    case HeteroclinicLabel::Eta7: return "eta7";
    case HeteroclinicLabel::Eta8: return "eta8";
    }
    return "?";
}

HeteroclinicEndpoints heteroclinic_endpoints(HeteroclinicLabel label) {
    const ArcEndpoints e = arc_endpoints(label);
    return {e.source, e.saddle};
}

std::vector<FixedPointRecord> fixed_points(const MapParams& mp) {
    std::vector<FixedPointRecord> records;
    records.reserve(9);
    for (const double y : {0.0, kPi, kTwoPi}) {
        for (const double x : {0.0, kPi, kTwoPi}) {
            FixedPointRecord rec;
            rec.location = newton_fixed_point({x, y}, mp);
            rec.residual = linf(map_forward(rec.location, mp) - rec.location);
            rec.jacobian = map_jacobian(rec.location, mp);
            const EigenPair eig = real_eigen(rec.jacobian);
            rec.eigenvalue_1 = eig.value_1;
            rec.eigenvalue_2 = eig.value_2;
            rec.eigenvector_1 = eig.vector_1;
            rec.eigenvector_2 = eig.vector_2;
            rec.kind = classify(eig.value_1, eig.value_2);
            rec.hyperbolic =
                std::min(std::fabs(std::fabs(eig.value_1) - 1.0),
                         std::fabs(std::fabs(eig.value_2) - 1.0)) > 1e-9;
            records.push_back(rec);
        }
    }
    return records;
}

ManifoldArc trace_heteroclinic(HeteroclinicLabel label, const MapParams& mp,
                               double step) {
    if (!(step > 0.0)) {
        throw DomainError("trace_heteroclinic: step must be positive");
    }
    const ArcEndpoints ends = arc_endpoints(label);
    const Mat2 j = map_jacobian(ends.saddle, mp);
    const EigenPair eig = real_eigen(j);
    // Stable direction: the eigenvalue inside the unit circle.
    const double lambda_s =
        std::fabs(eig.value_1) < 1.0 ? eig.value_1 : eig.value_2;
    const PhasePoint v =
        std::fabs(eig.value_1) < 1.0 ? eig.vector_1 : eig.vector_2;
    if (std::fabs(lambda_s) >= 1.0) {
        throw DomainError("trace_heteroclinic: endpoint is not a saddle");
    }
    const double mu = 1.0 / lambda_s;

    // Seed ladder dense enough that chain gaps stay below step / 2.
    const double arc_reach = 4.0;
    const auto seeds = static_cast<std::size_t>(std::max(
        32.0, std::ceil(2.0 * arc_reach * std::log(mu) / step)));

    std::vector<TaggedPoint> chain =
        trace_branch(ends.saddle, ends.source, v, 1.0, mu, seeds, mp);
    if (chain.empty()) {
        chain = trace_branch(ends.saddle, ends.source, v, -1.0, mu, seeds, mp);
    }
    if (chain.empty()) {
        throw NonConvergenceError(
            std::string("trace_heteroclinic: neither branch of ") +
            heteroclinic_name(label) + " reached its source");
    }

    ManifoldArc arc;
    arc.label = label;
    arc.saddle = ends.saddle;
    arc.source = ends.source;
    arc.polyline.reserve(chain.size() / 4);
    PhasePoint last = chain.front().p;
    arc.polyline.push_back(last);
    for (const TaggedPoint& tp : chain) {
        const PhasePoint d = tp.p - last;
        if (std::hypot(d.x, d.y) >= 0.5 * step) {
            arc.polyline.push_back(tp.p);
            last = tp.p;
        }
    }
    if (linf(arc.polyline.back() - chain.back().p) > 0.0) {
        arc.polyline.push_back(chain.back().p);
    }
    return arc;
}

bool converges_to_sink(PhasePoint p0, const MapParams& mp,
                       std::uint64_t max_iterations, double radius) {
    const PhasePoint sink{kPi, kPi};
    PhasePoint p = p0;
    for (std::uint64_t it = 0;; ++it) {
        if (torus_distance(p, sink) <= radius) return true;
        if (it >= max_iterations) return false;
        p = map_forward(p, mp);
    }
}

BasinEstimate estimate_basin(const MapParams& mp, std::uint64_t samples,
                             std::uint64_t max_iterations, double radius,
                             std::uint64_t seed, int workers) {
    if (samples < 1) throw DomainError("estimate_basin: samples must be >= 1");
    if (!(radius > 0.0)) throw DomainError("estimate_basin: radius must be > 0");

    const CounterRng rng(seed);
    const int nw = std::max(1, workers);
    std::vector<std::uint64_t> converged(static_cast<std::size_t>(nw), 0);

    auto work = [&](int w) {
        std::uint64_t local = 0;
        for (std::uint64_t i = static_cast<std::uint64_t>(w); i < samples;
             i += static_cast<std::uint64_t>(nw)) {
            if (converges_to_sink(rng.square_point(i), mp, max_iterations,
                                  radius)) {
                ++local;
            }
        }
        converged[static_cast<std::size_t>(w)] = local;
    };

    if (nw == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nw));
        for (int w = 0; w < nw; ++w) pool.emplace_back(work, w);
        for (std::thread& t : pool) t.join();
    }

    BasinEstimate est;
    est.samples = samples;
    for (const std::uint64_t c : converged) est.converged += c;
    est.fraction =
        static_cast<double>(est.converged) / static_cast<double>(samples);
    est.max_iterations = max_iterations;
    est.radius = radius;
    est.seed = seed;
    return est;
}

double contraction_rate(const MapParams& mp, PhasePoint p0,
                        std::size_t window) {
    if (window < 2) throw DomainError("contraction_rate: window must be >= 2");
    const PhasePoint sink{kPi, kPi};
    constexpr double kFloor = 1e-9;
    constexpr std::uint64_t kStepCap = 100000;

    double d0 = torus_distance(p0, sink);
    if (d0 <= 1e-14) {
        throw DegenerateOrbitError(
            "contraction_rate: orbit starts at the sink, rate is undefined");
    }

    std::vector<double> log_dist;
    PhasePoint p = p0;
    double d = d0;
    std::uint64_t n = 0;
    while (d > kFloor) {
        log_dist.push_back(std::log(d));
        if (d > 100.0 || n >= kStepCap) {
            throw NotConvergingError(
                "contraction_rate: orbit did not enter the fit floor");
        }
        p = map_forward(p, mp);
        d = torus_distance(p, sink);
        ++n;
    }

    const std::size_t w = std::min(window, log_dist.size());
    if (w < 2) {
        throw DegenerateOrbitError(
            "contraction_rate: orbit too close to the sink to fit a rate");
    }
    const std::size_t begin = log_dist.size() - w;
    double mean_n = 0.0, mean_l = 0.0;
    for (std::size_t i = 0; i < w; ++i) {
        mean_n += static_cast<double>(i);
        mean_l += log_dist[begin + i];
    }
    mean_n /= static_cast<double>(w);
    mean_l /= static_cast<double>(w);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < w; ++i) {
        const double dn = static_cast<double>(i) - mean_n;
        num += dn * (log_dist[begin + i] - mean_l);
        den += dn * dn;
    }
    return std::exp(num / den);
}

double distance_to_polyline(PhasePoint p, const std::vector<PhasePoint>& poly) {
    double best_sq = HUGE_VAL;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        const PhasePoint a = poly[i];
        const PhasePoint b = poly[i + 1];
        const double dx = b.x - a.x;
        const double dy = b.y - a.y;
        const double len_sq = dx * dx + dy * dy;
        double t = 0.0;
        if (len_sq > 0.0) {
            t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len_sq, 0.0,
                           1.0);
        }
        const double ex = p.x - (a.x + t * dx);
        const double ey = p.y - (a.y + t * dy);
        best_sq = std::min(best_sq, ex * ex + ey * ey);
    }
    if (poly.size() == 1) {
        const PhasePoint d = p - poly.front();
        best_sq = d.x * d.x + d.y * d.y;
    }
    return std::sqrt(best_sq);
}

} // namespace syncmap
