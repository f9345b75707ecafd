#include "syncmap/rng.hpp"

namespace syncmap {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

double CounterRng::uniform(std::uint64_t index, std::uint32_t dim) const {
    std::uint64_t z = splitmix64(seed_ ^ 0x6a09e667f3bcc908ULL);
    z = splitmix64(z ^ index);
    z = splitmix64(z ^ (static_cast<std::uint64_t>(dim) << 32));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(std::uint64_t index, std::uint32_t dim, double lo,
                           double hi) const {
    return lo + (hi - lo) * uniform(index, dim);
}

PhasePoint CounterRng::square_point(std::uint64_t index) const {
    return {uniform(index, 0, 0.0, kTwoPi), uniform(index, 1, 0.0, kTwoPi)};
}

} // namespace syncmap
