#pragma once

#include <cstdint>
#include <random>

#include "gr2/grassmann.hpp"

namespace gr2 {

/// Deterministic RNG wrapper; the bounded draw is pinned down here so seeds
/// reproduce across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

GaussianRational random_gaussian_integer(Rng& rng, bool nonzero = false);

/// Random plane with small Gaussian-integer entries (rank 2 by resampling).
Plane random_plane(int n, Rng& rng);

/// Random plane with no vanishing Plucker coordinate.
Plane random_main_stratum_plane(int n, Rng& rng);

TorusElement random_torus_element(int n, Rng& rng);

}  // namespace gr2
