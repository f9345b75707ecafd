#ifndef SYNCMAP_RNG_HPP
#define SYNCMAP_RNG_HPP

#include <cstdint>

#include "syncmap/map.hpp"

namespace syncmap {

/// Counter-based deterministic generator: the value at (seed, index, dim)
/// does not depend on call order, so parallel partitions reproduce the
/// sequential stream.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    /// Uniform in [0, 1).
    double uniform(std::uint64_t index, std::uint32_t dim = 0) const;

    /// Uniform in [lo, hi).
    double uniform(std::uint64_t index, std::uint32_t dim, double lo,
                   double hi) const;

    /// Uniform point of the fundamental square [0, 2pi)^2.
    PhasePoint square_point(std::uint64_t index) const;

private:
    std::uint64_t seed_;
};

} // namespace syncmap

#endif
