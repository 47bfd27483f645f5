#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gr2/scalar.hpp"

namespace gr2 {

/// Unordered index pair {i, j} stored with i < j; indices are 1-based
/// throughout the library.
using IndexPair = std::pair<int, int>;

inline IndexPair ordered_pair(int i, int j) {
    if (i == j) throw std::invalid_argument("index pair needs distinct indices");
    return i < j ? IndexPair{i, j} : IndexPair{j, i};
}

/// All pairs {i, j}, 1 <= i < j <= n, in lexicographic order.
std::vector<IndexPair> all_pairs(int n);

/// A 2-plane in C^n given by an n x 2 matrix of row vectors (a_i, b_i).
/// The rank-2 requirement is checked eagerly.
class Plane {
public:
    using Row = std::pair<GaussianRational, GaussianRational>;

    Plane(int n, std::vector<Row> rows);

    int n() const { return n_; }
    const std::vector<Row>& rows() const { return rows_; }
    const Row& row(int i) const { return rows_.at(static_cast<size_t>(i - 1)); }

private:
    int n_;
    std::vector<Row> rows_;
};

/// The C(n,2) Plucker coordinates of a 2-plane. Entries are stored for
/// i < j; the accessor extends antisymmetrically, P(j,i) = -P(i,j).
/// Projective equality (common nonzero factor) is the right notion of
/// sameness; operator== is componentwise and used only internally.
class PluckerVector {
public:
    PluckerVector(int n, std::map<IndexPair, GaussianRational> coords);

    int n() const { return n_; }

    /// Antisymmetric access; at(i, i) is zero.
    GaussianRational at(int i, int j) const;

    const std::map<IndexPair, GaussianRational>& coords() const { return coords_; }

    bool projectively_equal(const PluckerVector& other) const;

    PluckerVector scaled(const GaussianRational& factor) const;

    friend bool operator==(const PluckerVector& a, const PluckerVector& b) {
        return a.n_ == b.n_ && a.coords_ == b.coords_;
    }

private:
    void check_index(int i) const;

    int n_;
    std::map<IndexPair, GaussianRational> coords_;  // keys i < j, all pairs present
};

/// Element (t_1, ..., t_n) of the torus (C*)^n acting by row scaling.
class TorusElement {
public:
    TorusElement(int n, std::vector<GaussianRational> factors);

    int n() const { return n_; }
    const std::vector<GaussianRational>& factors() const { return factors_; }
    const GaussianRational& factor(int i) const { return factors_.at(static_cast<size_t>(i - 1)); }

private:
    int n_;
    std::vector<GaussianRational> factors_;
};

/// P_ij = a_i b_j - a_j b_i for i < j.
PluckerVector plucker_of(const Plane& plane);

/// Exact check of the three-term relations
/// P_ij P_kl - P_ik P_jl + P_jk P_il = 0 over all i < j < k < l.
bool check_plucker_relations(const PluckerVector& pv);

/// Componentwise action: P_ij multiplied by t_i t_j.
PluckerVector torus_act(const TorusElement& t, const PluckerVector& pv);

/// Recovers a torus element carrying pv1 to pv2 projectively, normalized so
/// the factor at the first index touching a nonvanishing pair is 1. Returns
/// nullopt when the coordinate ratios are multiplicatively inconsistent.
/// The two vectors must have the same vanishing pattern (that mismatch is an
/// error, not an absent result).
std::optional<TorusElement> reconstruct_torus(const PluckerVector& pv1, const PluckerVector& pv2);

}  // namespace gr2
