#include <doctest.h>

#include "gr2/crossratio.hpp"
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

Signature sig_of(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::set<IndexPair> vanishing;
    for (const auto& [i, j] : pairs) vanishing.insert(ordered_pair(i, j));
    return {n, std::move(vanishing)};
}

PluckerVector fixed_point_vector(int n) {
    std::map<IndexPair, GaussianRational> coords;
    coords[{1, 2}] = GaussianRational(1);
    return {n, std::move(coords)};
}

}  // namespace

TEST_CASE("cross-ratio evaluation") {
    const auto pv = plucker_of(w5());
    CHECK(evaluate_cross_ratio(pv, Tuple4(1, 2, 3, 4)).point() == ProjectivePoint::finite(q(1, 2)));
    CHECK(evaluate_cross_ratio(pv, Tuple4(2, 1, 3, 4)).point() == ProjectivePoint::finite(q(2, 1)));
    CHECK(!evaluate_cross_ratio(fixed_point_vector(5), Tuple4(1, 2, 3, 4)).is_defined());
    CHECK_THROWS_AS(Tuple4(1, 2, 2, 4), std::invalid_argument);
}

TEST_CASE("classification on strata") {
    const auto triple = sig_of(5, {{3, 4}, {3, 5}, {4, 5}});
    CHECK(classify_cross_ratio(triple, Tuple4(1, 2, 3, 4)) ==
          Classification{Classification::Kind::Weak, ProjectivePoint::one()});
    CHECK(classify_cross_ratio(triple, Tuple4(1, 3, 4, 5)).is_non_admissible());
    CHECK(classify_cross_ratio(Signature(5, {}), Tuple4(1, 2, 4, 5)).is_strong());

    CHECK(classify_cross_ratio(sig_of(5, {{1, 3}}), Tuple4(1, 2, 3, 4)) ==
          Classification{Classification::Kind::Weak, ProjectivePoint::zero()});
    CHECK(classify_cross_ratio(sig_of(5, {{1, 4}}), Tuple4(1, 2, 3, 4)) ==
          Classification{Classification::Kind::Weak, ProjectivePoint::infinity()});

    CHECK_THROWS_AS(classify_cross_ratio(sig_of(5, {{1, 2}, {1, 3}}), Tuple4(1, 2, 3, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_cross_ratio(Signature(5, {}), Tuple4(2, 1, 3, 4)),
                    std::invalid_argument);
}

TEST_CASE("classification matches witness behavior") {
    Rng rng(51);
    for (const auto& sig : enumerate_strata(5)) {
        const auto structure = *parallel_structure_of(sig);
        const auto pv = plucker_of(witness_plane(structure, rng.next()));
        for (const auto& key : all_tuples(5)) {
            const Tuple4 t(key[0], key[1], key[2], key[3]);
            const auto cls = classify_cross_ratio(sig, t);
            const auto value = evaluate_cross_ratio(pv, t);
            if (cls.is_non_admissible()) {
                CHECK(!value.is_defined());
            } else if (cls.is_weak()) {
                CHECK(value.point() == *cls.forced);
            } else {
                CHECK(value.is_generic());
            }
        }
    }
}

TEST_CASE("admissibility class is permutation invariant") {
    Rng rng(53);
    const auto sig = sig_of(5, {{3, 4}, {3, 5}, {4, 5}});
    const auto pv = plucker_of(witness_plane(*parallel_structure_of(sig), 9));
    for (const auto& key : all_tuples(5)) {
        std::array<int, 4> perm = key;
        for (int trial = 0; trial < 6; ++trial) {
            for (size_t i = perm.size(); i-- > 1;)
                std::swap(perm[i], perm[static_cast<size_t>(rng.uniform(0, static_cast<long>(i)))]);
            const auto base = evaluate_cross_ratio(pv, Tuple4(key[0], key[1], key[2], key[3]));
            const auto moved = evaluate_cross_ratio(pv, Tuple4(perm[0], perm[1], perm[2], perm[3]));
            CHECK(base.is_defined() == moved.is_defined());  // ghostliness is permutation stable
            if (base.is_defined()) CHECK(base.is_generic() == moved.is_generic());
        }
    }
}

TEST_CASE("z-coordinates") {
    CHECK(z_coordinates(plucker_of(w5())) == std::vector<GaussianRational>{q(1, 2), q(1, 3)});
    CHECK(z_coordinates(plucker_of(make_plane({{1, 0}, {0, 1}, {1, 1}, {1, 2}}))) ==
          std::vector<GaussianRational>{q(1, 2)});
    CHECK(z_coordinates(plucker_of(make_plane({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}}))) ==
          std::vector<GaussianRational>{GaussianRational(2), GaussianRational(3)});
    CHECK_THROWS_AS(z_coordinates(plucker_of(make_plane({{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 2}}))),
                    std::invalid_argument);
}

TEST_CASE("z-coordinates avoid 0 and 1 and are distinct") {
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const auto z = z_coordinates(plucker_of(random_main_stratum_plane(6, rng)));
        for (size_t a = 0; a < z.size(); ++a) {
            CHECK(!z[a].is_zero());
            CHECK(z[a] != GaussianRational(1));
            for (size_t b = a + 1; b < z.size(); ++b) CHECK(z[a] != z[b]);
        }
    }
}

TEST_CASE("closed forms from z") {
    const std::vector<GaussianRational> z{q(1, 2), q(1, 3)};
    CHECK(cross_ratio_from_z(Tuple4(1, 2, 4, 5), z, 5) == ProjectivePoint::finite(q(2, 3)));
    CHECK(cross_ratio_from_z(Tuple4(2, 3, 4, 5), z, 5) == ProjectivePoint::finite(q(2, 1)));
    CHECK(cross_ratio_from_z(Tuple4(1, 2, 3, 5), z, 5) == ProjectivePoint::finite(q(1, 3)));
    CHECK_THROWS_AS(cross_ratio_from_z(Tuple4(1, 2, 3, 4), {q(1, 2), GaussianRational(1)}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(cross_ratio_from_z(Tuple4(1, 2, 3, 4), {q(1, 2), q(1, 2)}, 5),
                    std::invalid_argument);
}

TEST_CASE("closed forms agree with direct evaluation") {
    Rng rng(67);
    for (int n = 5; n <= 7; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto pv = plucker_of(random_main_stratum_plane(n, rng));
            const auto z = z_coordinates(pv);
            for (const auto& key : all_tuples(n)) {
                const Tuple4 t(key[0], key[1], key[2], key[3]);
                CHECK(cross_ratio_from_z(t, z, n) == evaluate_cross_ratio(pv, t).point());
            }
        }
    }
}

TEST_CASE("the full evaluation map") {
    const auto pv = plucker_of(w5());
    const auto phi = embed_phi(pv);
    const std::vector<std::pair<long, long>> expected{{1, 2}, {1, 3}, {2, 3}, {4, 3}, {2, 1}};
    size_t index = 0;
    for (const auto& [key, value] : phi.values())
        CHECK(value.point() == ProjectivePoint::finite(q(expected[index].first, expected[index++].second)));

    CHECK(embed_phi(plucker_of(make_plane({{1, 0}, {0, 1}, {1, 1}, {1, 2}}))).values().size() == 1);

    const auto ghost = embed_phi(fixed_point_vector(5));
    for (const auto& [key, value] : ghost.values()) CHECK(!value.is_defined());
}

TEST_CASE("the evaluation map is torus invariant") {
    Rng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pv = plucker_of(random_plane(5, rng));
        const auto moved = torus_act(random_torus_element(5, rng), pv);
        const auto a = embed_phi(pv);
        const auto b = embed_phi(moved);
        for (const auto& [key, value] : a.values()) CHECK(b.at(key) == value);
    }
}

TEST_CASE("identity suite") {
    const auto pv = plucker_of(w5());
    const auto report = identity_suite(pv);
    CHECK(report.all_passed());
    CHECK(report.families.size() == 4);
    for (const auto& family : report.families) CHECK(family.instances > 0);

    // the worked instances behind the suite
    const auto value = [&](int i, int j, int k, int l) {
        return evaluate_cross_ratio(pv, Tuple4(i, j, k, l)).point().affine();
    };
    CHECK(value(1, 2, 3, 4) * value(1, 2, 3, 5).inverse() * value(1, 2, 4, 5) == GaussianRational(1));
    CHECK(GaussianRational(1) - value(1, 2, 3, 4) == value(1, 3, 2, 4));
    CHECK(value(2, 1, 3, 4) == value(1, 2, 3, 4).inverse());

    CHECK_THROWS_AS(identity_suite(plucker_of(make_plane({{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 2}}))),
                    std::invalid_argument);
}

TEST_CASE("identity suite on random main-stratum planes") {
    Rng rng(73);
    for (int n = 5; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial)
            CHECK(identity_suite(plucker_of(random_main_stratum_plane(n, rng))).all_passed());
}
