#pragma once

#include <cstdint>
#include <map>

#include "gr2/crossratio.hpp"
#include "gr2/strata.hpp"

namespace gr2 {

/// One-parameter algebraic family of 2-planes: rows are Laurent polynomials
/// in t, of generic rank 2 (some 2x2 minor is a nonzero series).
class LaurentPlane {
public:
    using Row = std::pair<LaurentScalar, LaurentScalar>;

    LaurentPlane(int n, std::vector<Row> rows);

    int n() const { return n_; }
    const std::vector<Row>& rows() const { return rows_; }
    const Row& row(int i) const { return rows_.at(static_cast<size_t>(i - 1)); }

private:
    int n_;
    std::vector<Row> rows_;
};

/// t -> 0 limit data of a family: the stratum the limit lands in, the limit
/// point in (CP^1)^N taken coordinatewise on cross-ratios, and whether that
/// point lies in the virtual space of the limit stratum.
struct LimitReport {
    Signature limit_signature;
    CrossTuple limit_tuple;
    bool member_of_virtual_space = false;
};

/// Exact Laurent Plucker coordinates P_ij(t).
std::map<IndexPair, LaurentScalar> plucker_laurent(const LaurentPlane& lp);

/// Limit signature from valuations above the global minimum; limit values
/// as leading-term ratios of the cross-ratio products.
LimitReport limit_point(const LaurentPlane& lp);

/// True when the limit tuple is fully defined and lies in the virtual space
/// of the limit stratum.
bool continuity_check(const LaurentPlane& lp);

/// Witness of the structure plus t times a generic perturbation; the t -> 0
/// fibre realizes exactly the structure's signature.
LaurentPlane random_degeneration(const ParallelStructure& ps, std::uint64_t seed);

/// A random member of the virtual space of an admissible signature, sampled
/// as the limit of a random degeneration into the stratum.
CrossTuple sample_virtual_member(const Signature& sig, std::uint64_t seed);

}  // namespace gr2
