#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gr2/strata.hpp"

namespace gr2 {

using TupleKey = std::array<int, 4>;  // sorted ascending, used as map key

/// Four distinct 1-based indices. Evaluation honors the given order; sorted
/// order is the canonical storage key.
class Tuple4 {
public:
    Tuple4(int i, int j, int k, int l);

    int operator[](size_t pos) const { return idx_[pos]; }
    const std::array<int, 4>& indices() const { return idx_; }
    bool is_sorted() const;
    TupleKey sorted_key() const;

private:
    std::array<int, 4> idx_;
};

/// All sorted 4-subsets of [1, n], lexicographically.
std::vector<TupleKey> all_tuples(int n);

/// Value of a cross-ratio: a point of CP^1, or undefined (0/0).
class CrossRatioValue {
public:
    static CrossRatioValue undefined() { return CrossRatioValue(); }
    static CrossRatioValue defined(ProjectivePoint p) { return CrossRatioValue(std::move(p)); }

    bool is_defined() const { return value_.has_value(); }
    const ProjectivePoint& point() const {
        if (!value_) throw std::domain_error("undefined cross-ratio has no value");
        return *value_;
    }

    /// In CP^1 minus {0, 1, infinity}.
    bool is_generic() const;

    std::string to_string() const { return value_ ? value_->to_string() : "undef"; }

    friend bool operator==(const CrossRatioValue& a, const CrossRatioValue& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const CrossRatioValue& a, const CrossRatioValue& b) { return !(a == b); }

private:
    CrossRatioValue() = default;
    explicit CrossRatioValue(ProjectivePoint p) : value_(std::move(p)) {}
    std::optional<ProjectivePoint> value_;
};

/// Behavior of one cross-ratio on a whole stratum.
struct Classification {
    enum class Kind { Strong, Weak, NonAdmissible };
    Kind kind = Kind::Strong;
    std::optional<ProjectivePoint> forced;  // 0, 1 or infinity when Weak

    bool is_strong() const { return kind == Kind::Strong; }
    bool is_weak() const { return kind == Kind::Weak; }
    bool is_non_admissible() const { return kind == Kind::NonAdmissible; }

    friend bool operator==(const Classification& a, const Classification& b) {
        return a.kind == b.kind && a.forced == b.forced;
    }
};

/// A point of (CP^1)^N, N = C(n,4): one value per sorted 4-subset.
class CrossTuple {
public:
    CrossTuple(int n, std::map<TupleKey, CrossRatioValue> values);

    int n() const { return n_; }
    const std::map<TupleKey, CrossRatioValue>& values() const { return values_; }
    const CrossRatioValue& at(const TupleKey& key) const { return values_.at(key); }
    bool all_defined() const;

private:
    int n_;
    std::map<TupleKey, CrossRatioValue> values_;
};

/// w_{i,j,k,l} = [P_ik P_jl : P_il P_jk], with antisymmetric coordinate
/// access for out-of-order pairs; undefined iff both products vanish.
CrossRatioValue evaluate_cross_ratio(const PluckerVector& pv, const Tuple4& t);

/// Stratum-level classification of a sorted tuple from the signature alone.
Classification classify_cross_ratio(const Signature& sig, const Tuple4& t);

/// z_l = w_{1,2,3,l} for l = 4..n; defined on the main stratum, where the
/// values avoid {0,1} and are pairwise distinct.
std::vector<GaussianRational> z_coordinates(const PluckerVector& pv);

/// Closed-form value of any sorted cross-ratio from the z-coordinates,
/// dispatching on how many of {1,2,3} the tuple contains.
ProjectivePoint cross_ratio_from_z(const Tuple4& t, const std::vector<GaussianRational>& z, int n);

/// The full evaluation map into (CP^1)^N.
CrossTuple embed_phi(const PluckerVector& pv);

struct IdentityFamilyReport {
    std::string name;
    long instances = 0;
    long failures = 0;
};

struct IdentitySuiteReport {
    std::vector<IdentityFamilyReport> families;
    bool all_passed() const {
        for (const auto& f : families)
            if (f.failures != 0) return false;
        return true;
    }
    long total_instances() const {
        long total = 0;
        for (const auto& f : families) total += f.instances;
        return total;
    }
};

/// Exact verification of the cross-ratio identities on a main-stratum
/// vector: reciprocal under swapping the first two indices, the complement
/// identity 1 - w_{ijkl} = w_{ikjl}, the three-term transfer, and the
/// cocycle w_{ijkl} w_{ijkm}^{-1} w_{ijlm} = 1 (also checked in its literal
/// printed form). The complement family additionally confirms the
/// underlying three-term relation P_il P_jk - P_ik P_jl = -P_ij P_kl.
IdentitySuiteReport identity_suite(const PluckerVector& pv);

}  // namespace gr2
