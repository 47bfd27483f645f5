#include <doctest.h>

#include <algorithm>

#include "gr2/sampling.hpp"
#include "gr2/strata.hpp"

using namespace gr2;

namespace {

Plane make_plane(const std::vector<std::pair<long, long>>& entries) {
    std::vector<Plane::Row> rows;
    for (const auto& [a, b] : entries) rows.emplace_back(GaussianRational(a), GaussianRational(b));
    return {static_cast<int>(entries.size()), std::move(rows)};
}

Signature sig_of(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::set<IndexPair> vanishing;
    for (const auto& [i, j] : pairs) vanishing.insert(ordered_pair(i, j));
    return {n, std::move(vanishing)};
}

// Independent realizability oracle: a signature is realizable by a rank-2
// plane iff some assignment of rows to {zero} or to direction classes (with
// at least two classes used) reproduces exactly its vanishing pattern.
bool realizable_by_enumeration(const Signature& sig) {
    const int n = sig.n();
    std::vector<int> label(static_cast<size_t>(n), 0);  // 0 = zero row, 1..n = class
    const auto matches = [&]() {
        std::set<int> used;
        for (int x : label)
            if (x != 0) used.insert(x);
        if (used.size() < 2) return false;
        for (const auto& [i, j] : all_pairs(n)) {
            const int a = label[static_cast<size_t>(i - 1)];
            const int b = label[static_cast<size_t>(j - 1)];
            const bool vanishes = a == 0 || b == 0 || a == b;
            if (vanishes != (sig.vanishing().count({i, j}) > 0)) return false;
        }
        return true;
    };
    while (true) {
        if (matches()) return true;
        size_t pos = 0;
        while (pos < label.size() && label[pos] == n) label[pos++] = 0;
        if (pos == label.size()) return false;
        ++label[pos];
    }
}

long bell_number(int m) {
    // Bell triangle
    std::vector<long> row{1};
    for (int i = 1; i < m; ++i) {
        std::vector<long> next{row.back()};
        for (long x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

long census_oracle(int n) {
    std::vector<long> binom(static_cast<size_t>(n) + 1, 0);
    binom[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j > 0; --j) binom[static_cast<size_t>(j)] += binom[static_cast<size_t>(j - 1)];
    long total = 0;
    for (int z = 0; n - z >= 2; ++z)
        total += binom[static_cast<size_t>(z)] * (bell_number(n - z) - 1);
    return total;
}

}  // namespace

TEST_CASE("signature of a plucker vector") {
    CHECK(signature_of(plucker_of(make_plane({{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}}))).empty());

    std::map<IndexPair, GaussianRational> coords;
    coords[{1, 2}] = GaussianRational(1);
    const auto fixed = signature_of(PluckerVector(5, coords));
    CHECK(fixed.vanishing().size() == 9);
    CHECK(!fixed.vanishes(1, 2));

    const auto repeated = plucker_of(make_plane({{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 2}}));
    CHECK(signature_of(repeated) == sig_of(5, {{4, 5}}));
}

TEST_CASE("parallel structures") {
    CHECK(!parallel_structure_of(sig_of(5, {{1, 2}, {1, 3}})).has_value());

    const auto clique = parallel_structure_of(sig_of(5, {{1, 2}, {1, 3}, {2, 3}}));
    REQUIRE(clique.has_value());
    CHECK(clique->zero_rows().empty());
    CHECK(clique->classes() == std::vector<std::vector<int>>{{1, 2, 3}, {4}, {5}});

    const auto main_structure = parallel_structure_of(sig_of(5, {}));
    REQUIRE(main_structure.has_value());
    CHECK(main_structure->classes().size() == 5);

    // zero rows vanish against everything
    std::set<IndexPair> vanishing{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {4, 5}};
    const auto with_zero = parallel_structure_of(Signature(5, vanishing));
    REQUIRE(with_zero.has_value());
    CHECK(with_zero->zero_rows() == std::set<int>{1});
    CHECK(with_zero->classes() == std::vector<std::vector<int>>{{2}, {3}, {4, 5}});
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(sig_of(5, {{1, 2}})));
    CHECK(!is_admissible(sig_of(5, {{1, 2}, {1, 3}})));
    std::set<IndexPair> everything;
    for (const auto& pair : all_pairs(5)) everything.insert(pair);
    CHECK(!is_admissible(Signature(5, everything)));
}

TEST_CASE("admissibility agrees with the enumeration oracle") {
    // every subset of pairs at n = 4
    const auto pairs4 = all_pairs(4);
    for (unsigned mask = 0; mask < (1u << pairs4.size()); ++mask) {
        std::set<IndexPair> vanishing;
        for (size_t p = 0; p < pairs4.size(); ++p)
            if (mask & (1u << p)) vanishing.insert(pairs4[p]);
        const Signature sig(4, vanishing);
        CHECK(is_admissible(sig) == realizable_by_enumeration(sig));
    }
    // random subsets at n = 5
    Rng rng(97);
    const auto pairs5 = all_pairs(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::set<IndexPair> vanishing;
        for (const auto& pair : pairs5)
            if (rng.uniform(0, 3) == 0) vanishing.insert(pair);
        const Signature sig(5, vanishing);
        CHECK(is_admissible(sig) == realizable_by_enumeration(sig));
    }
}

TEST_CASE("witness planes realize their signatures") {
    const ParallelStructure two_classes(5, {}, {{1, 2}, {3, 4, 5}});
    const ParallelStructure singletons(5, {}, {{1}, {2}, {3}, {4}, {5}});
    const ParallelStructure with_zero(5, {1}, {{2}, {3}, {4, 5}});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(signature_of(plucker_of(witness_plane(two_classes, seed))) ==
              two_classes.signature());
        CHECK(signature_of(plucker_of(witness_plane(singletons, seed))).empty());
        CHECK(signature_of(plucker_of(witness_plane(with_zero, seed))) == with_zero.signature());
    }
    const auto zero_witness = witness_plane(with_zero, 3);
    CHECK(zero_witness.row(1).first.is_zero());
    CHECK(zero_witness.row(1).second.is_zero());
}

TEST_CASE("stratum enumeration") {
    const auto strata4 = enumerate_strata(4);
    const auto strata5 = enumerate_strata(5);
    CHECK(strata4.size() == 36);
    CHECK(strata5.size() == 171);
    CHECK(census_oracle(4) == 36);
    CHECK(census_oracle(5) == 171);
    CHECK(enumerate_strata(6).size() == static_cast<size_t>(census_oracle(6)));
    CHECK_THROWS_AS(enumerate_strata(3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_strata(9), std::invalid_argument);

    CHECK(strata4.front().empty());  // the main stratum comes first
    CHECK(strata5.front().empty());

    for (const auto& sig : strata5) CHECK(is_admissible(sig));
    CHECK(std::set<Signature>(strata5.begin(), strata5.end()).size() == strata5.size());

    // every admissible signature appears
    Rng rng(11);
    const auto pairs5 = all_pairs(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::set<IndexPair> vanishing;
        for (const auto& pair : pairs5)
            if (rng.uniform(0, 3) == 0) vanishing.insert(pair);
        const Signature sig(5, vanishing);
        if (!is_admissible(sig)) continue;
        CHECK(std::find(strata5.begin(), strata5.end(), sig) != strata5.end());
    }

    // witnesses for every stratum, a few seeds each
    for (const auto& sig : strata5) {
        const auto structure = parallel_structure_of(sig);
        REQUIRE(structure.has_value());
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            CHECK(signature_of(plucker_of(witness_plane(*structure, seed))) == sig);
    }
}

TEST_CASE("stabilizer lattices") {
    CHECK(stabilizer_lattice(sig_of(5, {})).rank() == 1);

    const auto two_classes = ParallelStructure(5, {}, {{1, 2}, {3, 4, 5}}).signature();
    CHECK(stabilizer_lattice(two_classes).rank() == 2);

    std::set<IndexPair> fixed_point;
    for (const auto& pair : all_pairs(5))
        if (pair != IndexPair{1, 2}) fixed_point.insert(pair);
    CHECK(stabilizer_lattice(Signature(5, fixed_point)).rank() == 5);

    CHECK_THROWS_AS(stabilizer_lattice(sig_of(5, {{1, 2}, {1, 3}})), std::invalid_argument);

    // basis vectors really solve u_i + u_j = lambda over nonvanishing pairs
    const auto lattice = stabilizer_lattice(two_classes);
    for (const auto& u : lattice.basis) {
        std::optional<Integer> lambda;
        for (const auto& [i, j] : all_pairs(5)) {
            if (two_classes.vanishes(i, j)) continue;
            const Integer s = u[static_cast<size_t>(i - 1)] + u[static_cast<size_t>(j - 1)];
            if (!lambda) lambda = s;
            CHECK(*lambda == s);
        }
    }
}
