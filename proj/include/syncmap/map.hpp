#ifndef SYNCMAP_MAP_HPP
#define SYNCMAP_MAP_HPP

#include <cstddef>
#include <vector>

#include "syncmap/errors.hpp"

namespace syncmap {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Coupling strength of the synchronisation map. The map is a diffeomorphism
/// only for 0 < a < 1/6; construction rejects anything outside the open
/// interval.
class MapParams {
public:
    explicit MapParams(double a);

    double a() const { return a_; }

    /// Lower bound (1-2a)^2 - a^2 for det DF, positive on the whole
    /// parameter interval.
    double jacobian_det_lower_bound() const;

private:
    double a_;
};

/// A point (x, y) of the plane of phase differences. Coordinates are stored
/// unwrapped; `wrap` gives the representative in [0, 2pi)^2.
struct PhasePoint {
    double x = 0.0;
    double y = 0.0;
};

PhasePoint operator+(PhasePoint p, PhasePoint q);
PhasePoint operator-(PhasePoint p, PhasePoint q);
PhasePoint operator*(double s, PhasePoint p);

/// Max-norm of a point treated as a vector.
double linf(PhasePoint p);

/// Representative of p in the fundamental square [0, 2pi)^2.
PhasePoint wrap(PhasePoint p);

/// Max-norm distance from p to q on the torus (coordinates mod 2pi).
double torus_distance(PhasePoint p, PhasePoint q);

/// Row-major 2x2 real matrix.
struct Mat2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    PhasePoint apply(PhasePoint p) const;
    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }
};

/// One forward step of the synchronisation map:
///   x' = x + 2a sin x + a sin y
///   y' = y + a sin x + 2a sin y
PhasePoint map_forward(PhasePoint p, const MapParams& mp);

/// Preimage of p, solved by damped Newton iteration started at p.
/// The result q satisfies |map_forward(q) - p|_inf <= tol.
PhasePoint map_inverse(PhasePoint p, const MapParams& mp, double tol = 1e-12);

/// Jacobian [[1+2a cos x, a cos y], [a cos x, 1+2a cos y]].
Mat2 map_jacobian(PhasePoint p, const MapParams& mp);

enum class OrbitDirection { Forward, Backward };

/// An orbit segment. Immutable once built; consecutive points satisfy
/// points[n+1] = F(points[n]) (or F^-1 in backward mode) within
/// reconstruction tolerance 1e-12.
struct OrbitTrace {
    std::vector<PhasePoint> points;
    MapParams params;
    OrbitDirection direction = OrbitDirection::Forward;
};

/// Orbit of length n+1 starting at p0.
OrbitTrace iterate(PhasePoint p0, std::size_t n, const MapParams& mp,
                   OrbitDirection direction = OrbitDirection::Forward,
                   double inverse_tol = 1e-13);

} // namespace syncmap

#endif
