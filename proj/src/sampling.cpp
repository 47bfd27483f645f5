#include "gr2/sampling.hpp"

#include "gr2/strata.hpp"

namespace gr2 {

GaussianRational random_gaussian_integer(Rng& rng, bool nonzero) {
    while (true) {
        GaussianRational value(make_rational(rng.uniform(-9, 9)), make_rational(rng.uniform(-2, 2)));
        if (!nonzero || !value.is_zero()) return value;
    }
}

Plane random_plane(int n, Rng& rng) {
    while (true) {
        std::vector<Plane::Row> rows;
        rows.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            rows.emplace_back(random_gaussian_integer(rng), random_gaussian_integer(rng));
        try {
            return Plane(n, std::move(rows));
        } catch (const std::invalid_argument&) {
            // rank < 2, draw again
        }
    }
}

Plane random_main_stratum_plane(int n, Rng& rng) {
    while (true) {
        Plane plane = random_plane(n, rng);
        if (signature_of(plucker_of(plane)).empty()) return plane;
    }
}

TorusElement random_torus_element(int n, Rng& rng) {
    std::vector<GaussianRational> factors;
    factors.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) factors.push_back(random_gaussian_integer(rng, true));
    return {n, std::move(factors)};
}

}  // namespace gr2
