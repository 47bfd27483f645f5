#include <doctest.h>

#include "gr2/linalg.hpp"

using namespace gr2;
using namespace gr2::linalg;

namespace {

Matrix to_matrix(const std::vector<std::vector<long>>& rows) {
    Matrix m;
    for (const auto& row : rows) {
        Vector v;
        for (long x : row) v.push_back(make_rational(x));
        m.push_back(std::move(v));
    }
    return m;
}

IntMatrix to_int_matrix(const std::vector<std::vector<long>>& rows) {
    IntMatrix m;
    for (const auto& row : rows) {
        IntVector v;
        for (long x : row) v.emplace_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

}  // namespace

TEST_CASE("rank") {
    CHECK(rank(to_matrix({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(to_matrix({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}})) == 2);
    CHECK(rank(to_matrix({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(Matrix{}) == 0);
}

TEST_CASE("nullspace solves the system exactly") {
    const auto m = to_matrix({{1, 1, -1, 0}, {0, 1, 1, -2}});
    const auto basis = nullspace(m);
    CHECK(basis.size() == 2);
    for (const auto& v : basis) {
        for (const auto& row : m) {
            Rational dot = make_rational(0);
            for (size_t j = 0; j < row.size(); ++j) dot += row[j] * Rational(v[j]);
            CHECK(dot == 0);
        }
    }
}

TEST_CASE("integer kernel is a lattice basis of the kernel") {
    // kernel of (1 1 1; 0 1 2) is spanned by (1, -2, 1)
    const auto kernel = integer_kernel(to_int_matrix({{1, 1, 1}, {0, 1, 2}}));
    REQUIRE(kernel.size() == 1);
    CHECK((kernel[0] == IntVector{1, -2, 1} ||
           kernel[0] == IntVector{-1, 2, -1}));
}

TEST_CASE("hermite basis canonicalizes a lattice") {
    const auto basis = hermite_basis(to_int_matrix({{2, 4}, {1, 3}}));
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == IntVector{1, 1});  // fully reduced above the pivot of (0, 2)
    CHECK(basis[1] == IntVector{0, 2});
    // generators in a different order give the same canonical basis
    CHECK(hermite_basis(to_int_matrix({{1, 3}, {2, 4}})) == basis);
    CHECK(hermite_basis(to_int_matrix({{3, 7}, {1, 3}, {2, 4}})).size() == 2);
}

TEST_CASE("lp feasibility and optimum") {
    // max x subject to x + y = 1, x,y >= 0  ->  1
    {
        const auto r = solve_lp(to_matrix({{1, 1}}), {make_rational(1)},
                                {make_rational(1), make_rational(0)});
        REQUIRE(r.feasible);
        CHECK(r.objective == 1);
    }
    // infeasible: x + y = -1 with x,y >= 0
    {
        const auto r = solve_lp(to_matrix({{1, 1}}), {make_rational(-1)},
                                {make_rational(0), make_rational(0)});
        CHECK(!r.feasible);
    }
    // max eps s.t. x - eps = 1/3, x + eps = 1  ->  eps = 1/3
    {
        const auto r = solve_lp(to_matrix({{1, -1}, {1, 1}}),
                                {make_rational(1, 3), make_rational(1)},
                                {make_rational(0), make_rational(1)});
        REQUIRE(r.feasible);
        CHECK(r.objective == make_rational(1, 3));
    }
    // redundant equations are tolerated
    {
        const auto r = solve_lp(to_matrix({{1, 1}, {2, 2}}),
                                {make_rational(1), make_rational(2)},
                                {make_rational(1), make_rational(0)});
        REQUIRE(r.feasible);
        CHECK(r.objective == 1);
    }
}
