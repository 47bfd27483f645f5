#include <doctest.h>

#include "gr2/sampling.hpp"
#include "gr2/scalar.hpp"

using namespace gr2;

TEST_CASE("field operations on Q(i)") {
    const GaussianRational one_plus_i(1, 1);
    const GaussianRational one_minus_i(1, -1);
    CHECK(one_plus_i * one_minus_i == GaussianRational(2));
    CHECK(GaussianRational::unit_i().inverse() == GaussianRational(0, -1));
    CHECK(GaussianRational(3).norm_sq() == make_rational(9));
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
    CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
}

TEST_CASE("field axioms on random scalars") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussianRational a = random_gaussian_integer(rng);
        const GaussianRational b = random_gaussian_integer(rng);
        const GaussianRational c = random_gaussian_integer(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a * b).norm_sq() == a.norm_sq() * b.norm_sq());
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
    }
}

TEST_CASE("projective canonicalization") {
    CHECK(ProjectivePoint(GaussianRational(2), GaussianRational(4)) ==
          ProjectivePoint::finite(GaussianRational(make_rational(1, 2))));
    CHECK(ProjectivePoint(GaussianRational(3), GaussianRational(0)) == ProjectivePoint::infinity());
    CHECK(ProjectivePoint(GaussianRational(0), GaussianRational(5)) == ProjectivePoint::zero());
    CHECK_THROWS_AS(ProjectivePoint(GaussianRational(0), GaussianRational(0)),
                    std::invalid_argument);

    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const GaussianRational a = random_gaussian_integer(rng);
        const GaussianRational b = random_gaussian_integer(rng, true);
        const GaussianRational s = random_gaussian_integer(rng, true);
        CHECK(ProjectivePoint(a, b) == ProjectivePoint(s * a, s * b));
    }
}

TEST_CASE("scalar textual round trips") {
    for (const char* text : {"0", "-3", "3/2", "-3/2+1/4*i", "2-1*i", "1/4*i"}) {
        const GaussianRational value = GaussianRational::from_string(text);
        CHECK(GaussianRational::from_string(value.to_string()) == value);
    }
    CHECK(GaussianRational::from_string("-3/2+1/4*i") ==
          GaussianRational(make_rational(-3, 2), make_rational(1, 4)));
    CHECK(GaussianRational::from_string("i") == GaussianRational::unit_i());
    CHECK_THROWS_AS(GaussianRational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("laurent arithmetic and limits") {
    const LaurentScalar t = LaurentScalar::t();
    const LaurentScalar one(1);

    CHECK(laurent_limit_ratio(t, one) == ProjectivePoint::zero());
    CHECK(laurent_limit_ratio(LaurentScalar(2) + t, one + t) ==
          ProjectivePoint::finite(GaussianRational(2)));
    // 2(1 + t) against 2 + t: equal valuation, equal leading coefficient
    CHECK(laurent_limit_ratio(LaurentScalar(2) * (one + t), LaurentScalar(2) + t) ==
          ProjectivePoint::one());
    CHECK(laurent_limit_ratio(one, t) == ProjectivePoint::infinity());
    CHECK(laurent_limit_ratio(LaurentScalar(0), one) == ProjectivePoint::zero());
    CHECK_THROWS_AS(laurent_limit_ratio(one, LaurentScalar(0)), std::domain_error);

    // cancellation is exact: (1 + t) - 1 - t is the zero series
    CHECK((one + t - one - t).is_zero());
    CHECK((t * t).valuation() == 2);
    CHECK(LaurentScalar::term(GaussianRational(1), -2).valuation() == -2);
}

TEST_CASE("limit ratio is invariant under common factors") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentScalar f;
        LaurentScalar g;
        LaurentScalar h;
        for (int e = -2; e <= 2; ++e) {
            f = f + LaurentScalar::term(random_gaussian_integer(rng), e);
            g = g + LaurentScalar::term(random_gaussian_integer(rng), e);
            h = h + LaurentScalar::term(random_gaussian_integer(rng), e);
        }
        if (g.is_zero() || h.is_zero()) continue;
        CHECK(laurent_limit_ratio(f * h, g * h) == laurent_limit_ratio(f, g));
    }
}

TEST_CASE("laurent textual round trips") {
    for (const char* text : {"2+1*t^1", "1*t^-2+3", "(1/2+1/3*i)*t^2", "t", "0", "3/2", "-t^2+t"}) {
        const LaurentScalar value = LaurentScalar::from_string(text);
        CHECK(LaurentScalar::from_string(value.to_string()) == value);
    }
    CHECK(LaurentScalar::from_string("2+1*t^1") == LaurentScalar(2) + LaurentScalar::t());
    CHECK(LaurentScalar::from_string("t^3") == LaurentScalar::t(3));
}
