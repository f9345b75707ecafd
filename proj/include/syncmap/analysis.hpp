#ifndef SYNCMAP_ANALYSIS_HPP
#define SYNCMAP_ANALYSIS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "syncmap/map.hpp"

namespace syncmap {

enum class FixedPointKind { Source, Saddle, Sink };

const char* kind_name(FixedPointKind k);

/// A classified fixed point: location, Jacobian eigendata and hyperbolic
/// type. Residual |F(location) - location|_inf <= 1e-12.
struct FixedPointRecord {
    PhasePoint location;
    Mat2 jacobian;
    double eigenvalue_1 = 0.0; // larger modulus first
    double eigenvalue_2 = 0.0;
    PhasePoint eigenvector_1; // unit vectors
    PhasePoint eigenvector_2;
    FixedPointKind kind = FixedPointKind::Sink;
    bool hyperbolic = false;
    double residual = 0.0;
};

/// The nine fixed points of the square [0, 2pi]^2: the lattice {0, pi, 2pi}^2
/// refined by Newton and classified from the Jacobian eigenvalues.
std::vector<FixedPointRecord> fixed_points(const MapParams& mp);

/// The eight heteroclinic arcs, each joining a source to a saddle.
enum class HeteroclinicLabel { Eta1, Eta2, Eta3, Eta4, Eta5, Eta6, Eta7, Eta8 };

inline constexpr std::array<HeteroclinicLabel, 8> kAllHeteroclinics = {
    HeteroclinicLabel::Eta1, HeteroclinicLabel::Eta2, HeteroclinicLabel::Eta3,
    HeteroclinicLabel::Eta4, HeteroclinicLabel::Eta5, HeteroclinicLabel::Eta6,
    HeteroclinicLabel::Eta7, HeteroclinicLabel::Eta8};

const char* heteroclinic_name(HeteroclinicLabel label);

/// Source and saddle endpoints of a labelled arc.
struct HeteroclinicEndpoints {
    PhasePoint source;
    PhasePoint saddle;
};
HeteroclinicEndpoints heteroclinic_endpoints(HeteroclinicLabel label);

/// A saddle-to-source branch of a stable manifold, sampled as a polyline
/// ordered from the source end to the saddle end with segment length <= step.
struct ManifoldArc {
    HeteroclinicLabel label = HeteroclinicLabel::Eta1;
    PhasePoint saddle;
    PhasePoint source;
    std::vector<PhasePoint> polyline;
};

/// Traces the arc by seeding a log-uniform ladder of offsets along the
/// saddle's stable eigenvector and iterating the inverse map until each seed
/// orbit lands within 1e-6 of the named source. The branch sign is retried
/// automatically.
ManifoldArc trace_heteroclinic(HeteroclinicLabel label, const MapParams& mp,
                               double step = 0.005);

/// Monte Carlo estimate of the measure of the basin of the synchronised
/// state. Points are drawn uniformly on [0, 2pi)^2 by a counter-based
/// generator keyed by (seed, index), so the result is independent of work
/// partitioning.
struct BasinEstimate {
    std::uint64_t samples = 0;
    std::uint64_t converged = 0;
    double fraction = 0.0;
    std::uint64_t max_iterations = 0;
    double radius = 0.0;
    std::uint64_t seed = 0;
};

BasinEstimate estimate_basin(const MapParams& mp, std::uint64_t samples,
                             std::uint64_t max_iterations, double radius,
                             std::uint64_t seed, int workers = 1);

/// True when the forward orbit of p0 enters the torus ball of the given
/// radius around (pi, pi) within the iteration budget.
bool converges_to_sink(PhasePoint p0, const MapParams& mp,
                       std::uint64_t max_iterations, double radius);

/// Exponential contraction rate toward the sink, fitted by least squares on
/// log-distance over the last `window` recorded steps of a converging orbit.
/// Expected max(1-a, 1-3a) = 1-a for a generic start.
double contraction_rate(const MapParams& mp, PhasePoint p0,
                        std::size_t window = 50);

/// Distance from a point to a polyline (min over segments, Euclidean).
double distance_to_polyline(PhasePoint p, const std::vector<PhasePoint>& poly);

} // namespace syncmap

#endif
