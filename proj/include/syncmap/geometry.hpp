#ifndef SYNCMAP_GEOMETRY_HPP
#define SYNCMAP_GEOMETRY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "syncmap/map.hpp"

namespace syncmap {

/// Catalogue of regions used by the sign analysis.
///   D        fundamental square [0, 2pi]^2
///   S1..S4   sectors cut out of the basin by the diagonals
///   A1..A4   compact hexagons covering the sectors (A_j = Phi_j(A_1))
///   AL/AM/AR subregions of A1 separated by the curve Gamma and by x = pi
enum class RegionId { D, S1, S2, S3, S4, A1, A2, A3, A4, AL, AM, AR };

const char* region_name(RegionId r);

/// Closed-set membership (boundaries included). A positive `margin` tests
/// membership in the region shrunk by that amount, which is the library's
/// interiority test. Params are needed only for the Gamma-dependent
/// subregions AL and AM.
bool region_contains(RegionId r, PhasePoint p, const MapParams& mp,
                     double margin = 0.0);

/// Unique root x of pi - x - 2a sin x - a sin y = 0 for y in [0, pi],
/// bracketed in [pi - 3a, pi] and polished by Newton. |residual| <= tol.
double gamma_x(double y, const MapParams& mp, double tol = 1e-13);

/// Location of the minimum of gamma: (y*, x*) with y* = pi/2.
struct GammaMinimum {
    double y = 0.0;
    double x = 0.0;
};
GammaMinimum gamma_minimum(const MapParams& mp, double tol = 1e-13);

/// The implicit curve Gamma = {(gamma(y), y) : 0 <= y <= pi} joining the
/// fixed points (pi, 0) and (pi, pi).
struct GammaCurve {
    MapParams params;
    double tol = 1e-13;

    double x_at(double y) const { return gamma_x(y, params, tol); }
    std::vector<PhasePoint> polyline(std::size_t samples) const;
};

/// Boundary of a region as an ordered polyline with segment length <= step.
/// For AL and AM the Gamma portion of the boundary is sampled at the same
/// resolution.
std::vector<PhasePoint> region_boundary(RegionId r, const MapParams& mp,
                                        double step = 0.01);

/// Axis-aligned bounding box of a region, used for rejection sampling.
struct BoundingBox {
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;
};
BoundingBox region_bounding_box(RegionId r, const MapParams& mp);

} // namespace syncmap

#endif
