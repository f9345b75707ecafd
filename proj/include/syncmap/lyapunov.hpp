#ifndef SYNCMAP_LYAPUNOV_HPP
#define SYNCMAP_LYAPUNOV_HPP

#include "syncmap/geometry.hpp"
#include "syncmap/map.hpp"

namespace syncmap {

/// The Lyapunov function V(x, y) = |pi - y| + |pi - x|. Continuous,
/// non-negative, zero exactly at (pi, pi).
double lyapunov_value(PhasePoint p);

/// The four auxiliary functions behind the orbital derivative:
///   xi1 = pi - y
///   xi2 = pi - y - 2a sin y - a sin x
///   xi3 = pi - x
///   xi4 = pi - x - 2a sin x - a sin y
struct XiValues {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
    double xi4 = 0.0;
};

XiValues xi_values(PhasePoint p, const MapParams& mp);

/// Orbital derivative V(F(p)) - V(p), the definitional (authoritative) form.
double orbital_derivative(PhasePoint p, const MapParams& mp);

/// Region-wise closed form of the orbital derivative on A1:
///   AL: -3a sin y - 3a sin x
///   AM: 2x - 2pi - a sin y + a sin x
///   AR: -a sin y + a sin x
/// On shared boundaries the forms agree; the returned label follows the
/// fixed tie-break AL > AM > AR. Throws OutOfRegionError outside A1.
struct RegionalDerivative {
    double value = 0.0;
    RegionId region = RegionId::AL;
};

RegionalDerivative orbital_derivative_closed_form(PhasePoint p,
                                                  const MapParams& mp);

/// Closed-form expression of the given subregion evaluated at p, with no
/// membership check. Exposed for the cell certifier.
double closed_form_value(RegionId subregion, PhasePoint p, const MapParams& mp);

} // namespace syncmap

#endif
