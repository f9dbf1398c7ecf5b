// Copyright 2026 the towerlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOWERLAB_RNG_HPP_
#define TOWERLAB_RNG_HPP_

#include <cstdint>

namespace towerlab {

/// Counter-derived random substream (splitmix64). A root seed plus a stream
/// index yields an independent generator, so Monte Carlo results depend only
/// on (seed, path_index) and never on the parallel schedule.
class SubstreamRng {
  public:
    explicit SubstreamRng(std::uint64_t seed) : state_(seed) {}

    static SubstreamRng for_path(std::uint64_t root_seed, std::uint64_t path_index) {
        return SubstreamRng(mix(root_seed + 0x9E3779B97F4A7C15ULL * (path_index + 1)));
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace towerlab

#endif  // TOWERLAB_RNG_HPP_
