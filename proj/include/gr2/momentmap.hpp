#pragma once

#include <optional>
#include <set>

#include "gr2/strata.hpp"

namespace gr2 {

/// Exact rational point of the hypersimplex {0 <= x_i <= 1, sum x_i = 2}.
class HypersimplexPoint {
public:
    explicit HypersimplexPoint(std::vector<Rational> coords);

    int n() const { return static_cast<int>(coords_.size()); }
    const std::vector<Rational>& coords() const { return coords_; }

    friend bool operator==(const HypersimplexPoint& a, const HypersimplexPoint& b) {
        return a.coords_ == b.coords_;
    }

private:
    std::vector<Rational> coords_;
};

/// Convex hull of the hypersimplex vertices e_i + e_j over the nonvanishing
/// pairs of a stratum; dim is the affine dimension, computed exactly.
class AdmissiblePolytope {
public:
    AdmissiblePolytope(int n, std::set<IndexPair> vertices);

    int n() const { return n_; }
    const std::set<IndexPair>& vertices() const { return vertices_; }
    int dim() const { return dim_; }

private:
    int n_;
    std::set<IndexPair> vertices_;
    int dim_;
};

/// Wall form sum_{i in I} x_i = 1 attached to a two-class structure.
class HyperplaneForm {
public:
    HyperplaneForm(int n, std::set<int> index_set);

    int n() const { return n_; }
    const std::set<int>& index_set() const { return index_set_; }

    Rational evaluate(const HypersimplexPoint& x) const;
    /// Value of the form on the vertex e_i + e_j.
    int evaluate_vertex(const IndexPair& pair) const {
        return static_cast<int>(index_set_.count(pair.first) + index_set_.count(pair.second));
    }

private:
    int n_;
    std::set<int> index_set_;
};

/// mu(L) = (1/P(L)) sum |P_ij|^2 e_ij with |.|^2 the exact norm on Q(i).
HypersimplexPoint moment_map(const PluckerVector& pv);

AdmissiblePolytope admissible_polytope(const Signature& sig);

/// The Theorem-6 wall of a two-class structure with no zero rows; the class
/// containing the smallest index is the canonical choice. Absent otherwise.
std::optional<HyperplaneForm> theorem6_form(const ParallelStructure& ps);

/// Exact relative-interior membership: the point must admit a strictly
/// positive convex combination of the vertices (decided by rational LP).
bool in_relative_interior(const AdmissiblePolytope& poly, const HypersimplexPoint& point);

/// True when inner's vertex set spans a proper face of outer: some affine
/// functional is constant on inner's vertices and strictly smaller on the
/// rest of outer's.
bool is_proper_face(const AdmissiblePolytope& outer, const AdmissiblePolytope& inner);

}  // namespace gr2
