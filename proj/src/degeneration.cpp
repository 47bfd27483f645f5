#include "gr2/degeneration.hpp"

#include <random>

#include "gr2/param_space.hpp"

namespace gr2 {

LaurentPlane::LaurentPlane(int n, std::vector<Row> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ < 2) throw std::invalid_argument("a family of 2-planes needs n >= 2");
    if (rows_.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("family row count does not match n");
    for (const auto& [i, j] : all_pairs(n_)) {
        const auto& [ai, bi] = rows_[static_cast<size_t>(i - 1)];
        const auto& [aj, bj] = rows_[static_cast<size_t>(j - 1)];
        if (!(ai * bj - aj * bi).is_zero()) return;
    }
    throw std::invalid_argument("family has generic rank < 2: every Laurent minor vanishes");
}

std::map<IndexPair, LaurentScalar> plucker_laurent(const LaurentPlane& lp) {
    std::map<IndexPair, LaurentScalar> coords;
    for (const auto& [i, j] : all_pairs(lp.n())) {
        const auto& [ai, bi] = lp.row(i);
        const auto& [aj, bj] = lp.row(j);
        coords[{i, j}] = ai * bj - aj * bi;
    }
    return coords;
}

LimitReport limit_point(const LaurentPlane& lp) {
    const auto coords = plucker_laurent(lp);

    std::optional<int> min_valuation;
    for (const auto& [pair, series] : coords) {
        const auto v = series.valuation();
        if (!v) continue;
        if (!min_valuation || *v < *min_valuation) min_valuation = *v;
    }
    if (!min_valuation) throw std::invalid_argument("all Plucker series vanish identically");

    std::set<IndexPair> vanishing;
    for (const auto& [pair, series] : coords) {
        const auto v = series.valuation();
        if (!v || *v > *min_valuation) vanishing.insert(pair);
    }
    Signature limit_signature(lp.n(), std::move(vanishing));

    const auto at = [&](int i, int j) -> LaurentScalar {
        if (i < j) return coords.at({i, j});
        return -coords.at({j, i});
    };
    std::map<TupleKey, CrossRatioValue> values;
    for (const auto& [i, j, k, l] : all_tuples(lp.n())) {
        const LaurentScalar num = at(i, k) * at(j, l);
        const LaurentScalar den = at(i, l) * at(j, k);
        if (num.is_zero() && den.is_zero()) {
            values.emplace(TupleKey{i, j, k, l}, CrossRatioValue::undefined());
        } else if (den.is_zero()) {
            values.emplace(TupleKey{i, j, k, l},
                           CrossRatioValue::defined(ProjectivePoint::infinity()));
        } else {
            values.emplace(TupleKey{i, j, k, l},
                           CrossRatioValue::defined(laurent_limit_ratio(num, den)));
        }
    }
    CrossTuple limit_tuple(lp.n(), std::move(values));

    const bool member =
        limit_tuple.all_defined() && member_of_virtual(limit_tuple, limit_signature);
    return {std::move(limit_signature), std::move(limit_tuple), member};
}

bool continuity_check(const LaurentPlane& lp) { return limit_point(lp).member_of_virtual_space; }

LaurentPlane random_degeneration(const ParallelStructure& ps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = ps.n();
    const Signature target = ps.signature();
    auto draw = [&rng](long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(rng() % span);
    };
    while (true) {
        const Plane base = witness_plane(ps, rng());
        std::vector<LaurentPlane::Row> rows;
        rows.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            const auto& [a, b] = base.row(i);
            const GaussianRational pa(make_rational(draw(-4, 4)), make_rational(draw(-1, 1)));
            const GaussianRational pb(make_rational(draw(-4, 4)), make_rational(draw(-1, 1)));
            rows.emplace_back(LaurentScalar(a) + LaurentScalar::term(pa, 1),
                              LaurentScalar(b) + LaurentScalar::term(pb, 1));
        }
        LaurentPlane family(n, std::move(rows));
        // The generic fibre must be main-stratum, i.e. no Plucker series may
        // vanish identically; valuations are then 0 exactly off the target
        // vanishing set, so the limit signature comes out right.
        const auto coords = plucker_laurent(family);
        bool good = true;
        for (const auto& [pair, series] : coords) {
            if (series.is_zero()) {
                good = false;
                break;
            }
            if (target.vanishing().count(pair) == 0 && *series.valuation() != 0)
                throw std::logic_error("witness value lost at order zero");
        }
        if (good) return family;
    }
}

CrossTuple sample_virtual_member(const Signature& sig, std::uint64_t seed) {
    const auto structure = parallel_structure_of(sig);
    if (!structure) throw std::invalid_argument("inadmissible signature");
    std::mt19937_64 rng(seed);
    while (true) {
        const LaurentPlane family = random_degeneration(*structure, rng());
        LimitReport report = limit_point(family);
        if (report.limit_signature == sig && report.limit_tuple.all_defined())
            return std::move(report.limit_tuple);
    }
}

}  // namespace gr2
