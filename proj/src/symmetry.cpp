#include "syncmap/symmetry.hpp"

#include "syncmap/rng.hpp"

namespace syncmap {

PhasePoint SymmetryMap::operator()(PhasePoint p) const {
    return {ox + m11 * p.x + m12 * p.y, oy + m21 * p.x + m22 * p.y};
}

SymmetryMap symmetry(SymmetryId id) {
    switch (id) {
    case SymmetryId::Phi1:
        return {id, 1, 0, 0, 1, 0.0, 0.0};
    case SymmetryId::Phi2: // reflection along y = 2pi - x
        return {id, 0, -1, -1, 0, kTwoPi, kTwoPi};
    case SymmetryId::Phi3: // rotation by pi around (pi, pi)
        return {id, -1, 0, 0, -1, kTwoPi, kTwoPi};
    case SymmetryId::Phi4: // reflection along y = x
        return {id, 0, 1, 1, 0, 0.0, 0.0};
    }
    throw DomainError("symmetry: unknown id");
}

PhasePoint apply_symmetry(const SymmetryMap& s, PhasePoint p) { return s(p); }

double equivariance_residual(const SymmetryMap& s, const MapParams& mp,
                             std::size_t samples, std::uint64_t seed) {
    if (samples < 1) {
        throw DomainError("equivariance_residual: samples must be >= 1");
    }
    const CounterRng rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const PhasePoint p = rng.square_point(i);
        const PhasePoint lhs = map_forward(s(p), mp);
        const PhasePoint rhs = s(map_forward(p, mp));
        worst = std::max(worst, linf(lhs - rhs));
    }
    return worst;
}

ScalarField transport_lyapunov(ScalarField v, const SymmetryMap& h) {
    const SymmetryMap inv = h.inverse();
    return [v = std::move(v), inv](PhasePoint p) { return v(inv(p)); };
}

} // namespace syncmap
