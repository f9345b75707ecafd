#ifndef SYNCMAP_CERTIFY_HPP
#define SYNCMAP_CERTIFY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "syncmap/geometry.hpp"
#include "syncmap/lyapunov.hpp"
#include "syncmap/map.hpp"

namespace syncmap {

/// Sup-norm Lipschitz constant of the closed-form orbital derivative on a
/// subregion: AL -> 6a, AM -> 2 + 2a, AR -> 2a.
double region_lipschitz(RegionId subregion, const MapParams& mp);

/// Axis-aligned cell [x0, x1] x [y0, y1].
struct Cell {
    double x0 = 0.0, x1 = 0.0;
    double y0 = 0.0, y1 = 0.0;

    PhasePoint center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
    double radius() const; // half-extent in the max norm
};

/// Parameters of a certification run over A1. `epsilon` is the max-norm
/// radius of the excluded neighborhood of the zero set (the four lower edges
/// of A1 plus the sink); epsilon = 0 is accepted and yields Inconclusive,
/// since cells touching the zero set can never certify strict negativity.
struct CertRequest {
    RegionId region = RegionId::A1;
    MapParams params;
    double epsilon = 0.05;
    double initial_cell = 0.1;
    int max_depth = 8;
    int workers = 1;
    bool record_certified_cells = false;

    CertRequest(const MapParams& mp) : params(mp) {}
};

enum class CertVerdict { Certified, Inconclusive };

/// Outcome of a certification run. Mergeable: counts add, worst bounds take
/// the max, so the result is independent of work partitioning.
struct CertReport {
    CertVerdict verdict = CertVerdict::Inconclusive;
    std::uint64_t cells_examined = 0;
    std::uint64_t cells_certified = 0;
    std::uint64_t cells_subdivided = 0;
    std::uint64_t cells_excluded = 0;
    double worst_certified_bound = 0.0; // max certified upper bound on Vdot
    double lipschitz_al = 0.0;
    double lipschitz_am = 0.0;
    double lipschitz_ar = 0.0;
    std::vector<Cell> inconclusive_cells;        // offending cells, sorted
    std::vector<Cell> certified_cells;           // only when requested
};

/// Certifies Vdot < 0 on A1 minus the epsilon-neighborhood of its zero set
/// by adaptive subdivision with Lipschitz-centered bounds: a cell certifies
/// when value(center) + L * radius < 0 under every closed form that can
/// apply to it.
CertReport certify_negative(const CertRequest& req);

/// Samples the region and checks V > 0 away from a 1e-9 ball around the
/// sink, and V(sink) = 0. The sink must be (pi, pi).
bool check_positivity(RegionId region, PhasePoint sink, std::size_t samples,
                      const MapParams& mp, std::uint64_t seed = 0);

} // namespace syncmap

#endif
