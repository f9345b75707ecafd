#include "syncmap/lyapunov.hpp"

#include <cmath>

namespace syncmap {

double lyapunov_value(PhasePoint p) {
    return std::fabs(kPi - p.y) + std::fabs(kPi - p.x);
}

XiValues xi_values(PhasePoint p, const MapParams& mp) {
    const double a = mp.a();
    const double sx = std::sin(p.x);
    const double sy = std::sin(p.y);
    return {kPi - p.y, kPi - p.y - 2.0 * a * sy - a * sx, kPi - p.x,
            kPi - p.x - 2.0 * a * sx - a * sy};
}

double orbital_derivative(PhasePoint p, const MapParams& mp) {
    return lyapunov_value(map_forward(p, mp)) - lyapunov_value(p);
}

double closed_form_value(RegionId subregion, PhasePoint p, const MapParams& mp) {
    const double a = mp.a();
    const double sx = std::sin(p.x);
    const double sy = std::sin(p.y);
    switch (subregion) {
    case RegionId::AL:
        return -3.0 * a * sy - 3.0 * a * sx;
    case RegionId::AM:
        return 2.0 * (p.x - kPi) - a * sy + a * sx;
    case RegionId::AR:
        return -a * sy + a * sx;
    default:
        throw UnsupportedRegionError(
            "closed_form_value: no closed form for region " +
            std::string(region_name(subregion)));
    }
}

RegionalDerivative orbital_derivative_closed_form(PhasePoint p,
                                                  const MapParams& mp) {
    // Tie-break on shared boundaries: AL over AM over AR.
    for (const RegionId r : {RegionId::AL, RegionId::AM, RegionId::AR}) {
        if (region_contains(r, p, mp)) {
            return {closed_form_value(r, p, mp), r};
        }
    }
    throw OutOfRegionError("orbital_derivative_closed_form: point outside A1");
}

} // namespace syncmap
