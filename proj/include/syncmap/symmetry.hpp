#ifndef SYNCMAP_SYMMETRY_HPP
#define SYNCMAP_SYMMETRY_HPP

#include <array>
#include <cstdint>
#include <functional>

#include "syncmap/map.hpp"

namespace syncmap {

/// The four involutions commuting with the map: identity, reflection along
/// y = 2pi - x, rotation by pi around (pi, pi), reflection along y = x.
enum class SymmetryId : std::uint8_t { Phi1, Phi2, Phi3, Phi4 };

inline constexpr std::array<SymmetryId, 4> kAllSymmetries = {
    SymmetryId::Phi1, SymmetryId::Phi2, SymmetryId::Phi3, SymmetryId::Phi4};

/// Affine involution p -> M p + o with M having entries in {-1, 0, 1} and
/// offsets in {0, 2pi}, so the composition identities are exact wherever the
/// float subtractions are.
struct SymmetryMap {
    SymmetryId id = SymmetryId::Phi1;
    int m11 = 1, m12 = 0;
    int m21 = 0, m22 = 1;
    double ox = 0.0, oy = 0.0;

    PhasePoint operator()(PhasePoint p) const;

    /// Involutions are their own inverse.
    SymmetryMap inverse() const { return *this; }
};

SymmetryMap symmetry(SymmetryId id);

PhasePoint apply_symmetry(const SymmetryMap& s, PhasePoint p);

/// Max of |F(Phi(p)) - Phi(F(p))|_inf over seeded random points of the
/// fundamental square.
double equivariance_residual(const SymmetryMap& s, const MapParams& mp,
                             std::size_t samples, std::uint64_t seed = 0);

using ScalarField = std::function<double(PhasePoint)>;

/// Conjugacy transport of a scalar field: p -> V(h^-1(p)).
ScalarField transport_lyapunov(ScalarField v, const SymmetryMap& h);

} // namespace syncmap

#endif
