#include <doctest.h>

#include "gr2/gm_config.hpp"
#include "gr2/param_space.hpp"
#include "gr2/sampling.hpp"

using namespace gr2;

namespace {

Plane make_plane(const std::vector<std::pair<long, long>>& entries) {
    std::vector<Plane::Row> rows;
    for (const auto& [a, b] : entries) rows.emplace_back(GaussianRational(a), GaussianRational(b));
    return {static_cast<int>(entries.size()), std::move(rows)};
}

Plane w5() { return make_plane({{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}}); }

GaussianRational q(long num, long den) { return GaussianRational(make_rational(num, den)); }

}  // namespace

TEST_CASE("configurations from planes") {
    const auto config = config_of_plane(w5());
    CHECK(config.point(1) == ProjectivePoint::infinity());  // [1:0]
    CHECK(config.point(2) == ProjectivePoint::zero());
    CHECK(config.point(3) == ProjectivePoint::one());
    CHECK(config.point(4) == ProjectivePoint::finite(q(1, 2)));
    CHECK(config.point(5) == ProjectivePoint::finite(q(1, 3)));
    CHECK(config.generic());

    const auto repeated = config_of_plane(make_plane({{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 2}}));
    CHECK(repeated.point(4) == repeated.point(5));
    CHECK(!repeated.generic());

    CHECK_THROWS_AS(config_of_plane(make_plane({{0, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}})),
                    std::invalid_argument);
}

TEST_CASE("planes from configurations") {
    const auto config = config_of_plane(w5());
    const auto rebuilt = plane_of_config(config);
    const auto round = config_of_plane(rebuilt);
    for (int i = 1; i <= 5; ++i) CHECK(round.point(i) == config.point(i));
    CHECK(plucker_of(rebuilt).projectively_equal(plucker_of(w5())));

    const std::vector<ProjectivePoint> repeated(4, ProjectivePoint::one());
    CHECK_THROWS_AS(plane_of_config(PointConfiguration(4, repeated)), std::invalid_argument);

    // repeated points give a vanishing coordinate
    std::vector<ProjectivePoint> points{ProjectivePoint::infinity(), ProjectivePoint::zero(),
                                        ProjectivePoint::one(), ProjectivePoint::finite(q(1, 2)),
                                        ProjectivePoint::finite(q(1, 2))};
    const auto pv = plucker_of(plane_of_config(PointConfiguration(5, points)));
    CHECK(pv.coords().at({4, 5}).is_zero());
}

TEST_CASE("round trip on random planes") {
    Rng rng(81);
    for (int trial = 0; trial < 30; ++trial) {
        Plane plane = random_plane(5, rng);
        bool has_zero_row = false;
        for (const auto& [a, b] : plane.rows()) has_zero_row |= a.is_zero() && b.is_zero();
        if (has_zero_row) continue;
        const auto config = config_of_plane(plane);
        const auto round = config_of_plane(plane_of_config(config));
        for (int i = 1; i <= 5; ++i) CHECK(round.point(i) == config.point(i));
    }
}

TEST_CASE("normalization of the first three points") {
    const auto [normalized, transform] = normalize_config(config_of_plane(w5()));
    CHECK(normalized.point(1) == ProjectivePoint::infinity());
    CHECK(normalized.point(2) == ProjectivePoint::zero());
    CHECK(normalized.point(3) == ProjectivePoint::one());
    CHECK(normalized.point(4) == ProjectivePoint::finite(q(1, 2)));
    CHECK(normalized.point(5) == ProjectivePoint::finite(q(1, 3)));

    // already-normal first triple: the transform is the identity up to scale
    CHECK((transform.b().is_zero() && transform.c().is_zero() && transform.a() == transform.d()));

    const auto z = z_coordinates(plucker_of(w5()));
    CHECK(normalized.point(4).affine() == z[0]);
    CHECK(normalized.point(5).affine() == z[1]);
}

TEST_CASE("normalization with a swapped triple") {
    const auto plane = make_plane({{0, 1}, {1, 0}, {1, 1}, {1, 2}});
    const auto [normalized, transform] = normalize_config(config_of_plane(plane));
    CHECK(normalized.point(1) == ProjectivePoint::infinity());
    CHECK(normalized.point(2) == ProjectivePoint::zero());
    CHECK(normalized.point(3) == ProjectivePoint::one());
    const auto w = evaluate_cross_ratio(plucker_of(plane), Tuple4(1, 2, 3, 4));
    CHECK(cross_ratio_of_points(normalized.point(1), normalized.point(2), normalized.point(3),
                                normalized.point(4)) == w);

    std::vector<ProjectivePoint> degenerate{ProjectivePoint::one(), ProjectivePoint::one(),
                                            ProjectivePoint::zero(), ProjectivePoint::infinity()};
    CHECK_THROWS_AS(normalize_config(PointConfiguration(4, degenerate)), std::invalid_argument);
}

TEST_CASE("normalized affine coordinates are the z-coordinates") {
    Rng rng(83);
    for (int n = 5; n <= 6; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
            const Plane plane = random_main_stratum_plane(n, rng);
            const auto z = z_coordinates(plucker_of(plane));
            const auto [normalized, transform] = normalize_config(config_of_plane(plane));
            for (int l = 4; l <= n; ++l)
                CHECK(normalized.point(l).affine() == z[static_cast<size_t>(l - 4)]);
        }
    }
}

TEST_CASE("classical cross-ratio of points") {
    const auto p1 = ProjectivePoint::infinity();
    const auto p2 = ProjectivePoint::zero();
    const auto p3 = ProjectivePoint::one();
    for (long num : {2L, 5L, -3L}) {
        const auto z = ProjectivePoint::finite(GaussianRational(num));
        CHECK(cross_ratio_of_points(p1, p2, p3, z).point() == z);
    }
    CHECK(cross_ratio_of_points(p1, p2, p3, p3).point() == ProjectivePoint::one());
    CHECK(cross_ratio_of_points(p3, p2, p3, ProjectivePoint::finite(q(1, 2))).point() ==
          ProjectivePoint::zero());
}

TEST_CASE("cross-ratio of points is a projective invariant") {
    Rng rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<ProjectivePoint> points;
        for (int i = 0; i < 4; ++i)
            points.emplace_back(random_gaussian_integer(rng), random_gaussian_integer(rng, true));
        const GaussianRational a = random_gaussian_integer(rng);
        const GaussianRational b = random_gaussian_integer(rng);
        const GaussianRational c = random_gaussian_integer(rng);
        const GaussianRational d = random_gaussian_integer(rng);
        if ((a * d - b * c).is_zero()) continue;
        const ProjectiveTransform g(a, b, c, d);
        CHECK(cross_ratio_of_points(points[0], points[1], points[2], points[3]) ==
              cross_ratio_of_points(g.apply(points[0]), g.apply(points[1]), g.apply(points[2]),
                                    g.apply(points[3])));
    }
}

TEST_CASE("point cross-ratios agree with plucker cross-ratios") {
    Rng rng(91);
    for (int trial = 0; trial < 10; ++trial) {
        const Plane plane = random_main_stratum_plane(5, rng);
        const auto pv = plucker_of(plane);
        const auto config = config_of_plane(plane);
        for (const auto& [i, j, k, l] : all_tuples(5)) {
            CHECK(cross_ratio_of_points(config.point(i), config.point(j), config.point(k),
                                        config.point(l)) ==
                  evaluate_cross_ratio(pv, Tuple4(i, j, k, l)));
        }
    }
}

TEST_CASE("orbit equality is normalized-configuration equality") {
    Rng rng(93);
    for (int trial = 0; trial < 15; ++trial) {
        const Plane p1 = random_main_stratum_plane(5, rng);
        const Plane p2 = random_main_stratum_plane(5, rng);
        const auto n1 = normalize_config(config_of_plane(p1)).first;
        const auto n2 = normalize_config(config_of_plane(p2)).first;
        CHECK(same_orbit(plucker_of(p1), plucker_of(p2)) == (n1 == n2));

        const auto moved = torus_act(random_torus_element(5, rng), plucker_of(p1));
        CHECK(same_orbit(plucker_of(p1), moved));
    }
}
