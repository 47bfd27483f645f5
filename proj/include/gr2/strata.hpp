#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "gr2/grassmann.hpp"
#include "gr2/linalg.hpp"

namespace gr2 {

/// Vanishing pattern of a Plucker vector: the set of pairs {i, j} with
/// P_ij = 0. The empty signature names the main stratum.
class Signature {
public:
    Signature(int n, std::set<IndexPair> vanishing);

    int n() const { return n_; }
    const std::set<IndexPair>& vanishing() const { return vanishing_; }
    bool vanishes(int i, int j) const { return vanishing_.count(ordered_pair(i, j)) > 0; }
    bool empty() const { return vanishing_.empty(); }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.n_ == b.n_ && a.vanishing_ == b.vanishing_;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
    friend bool operator<(const Signature& a, const Signature& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.vanishing_ < b.vanishing_;
    }

private:
    int n_;
    std::set<IndexPair> vanishing_;
};

/// Equivalent combinatorial form of an admissible signature: the set Z of
/// zero rows together with the partition of the remaining indices into
/// parallel classes. Realizability of a rank-2 plane forces at least two
/// classes.
class ParallelStructure {
public:
    ParallelStructure(int n, std::set<int> zero_rows, std::vector<std::vector<int>> classes);

    int n() const { return n_; }
    const std::set<int>& zero_rows() const { return zero_rows_; }
    const std::vector<std::vector<int>>& classes() const { return classes_; }

    /// The signature this structure realizes: every pair touching Z plus
    /// every within-class pair vanishes.
    Signature signature() const;

    friend bool operator==(const ParallelStructure& a, const ParallelStructure& b) {
        return a.n_ == b.n_ && a.zero_rows_ == b.zero_rows_ && a.classes_ == b.classes_;
    }

private:
    int n_;
    std::set<int> zero_rows_;
    std::vector<std::vector<int>> classes_;  // each sorted; ordered by smallest member
};

/// Exponent lattice of the subtorus fixing a stratum pointwise up to scale;
/// the diagonal one-parameter subgroup is always included.
struct StabilizerLattice {
    int n = 0;
    std::vector<linalg::IntVector> basis;  // independent exponent vectors in Z^n
    int rank() const { return static_cast<int>(basis.size()); }
};

Signature signature_of(const PluckerVector& pv);

/// Zero rows are the indices vanishing against everything; on the rest,
/// i ~ j iff {i,j} is in the signature. Returns nullopt when that relation
/// fails to be transitive or fewer than two classes remain (no rank-2 plane
/// realizes the pattern).
std::optional<ParallelStructure> parallel_structure_of(const Signature& sig);

bool is_admissible(const Signature& sig);

/// Deterministic random plane realizing exactly the structure's signature:
/// zero rows for Z, one direction per class with distinct directions across
/// classes, nonzero multipliers within a class.
Plane witness_plane(const ParallelStructure& ps, std::uint64_t seed);

/// All admissible signatures over [1, n], ordered by |Z| then by the
/// vanishing set lexicographically. Guarded to 4 <= n <= 8.
std::vector<Signature> enumerate_strata(int n);

/// Basis of the rational solution space of u_i + u_j = lambda over all
/// nonvanishing pairs, with lambda eliminated.
StabilizerLattice stabilizer_lattice(const Signature& sig);

}  // namespace gr2
