#pragma once

#include <optional>
#include <vector>

#include "gr2/rational.hpp"

namespace gr2::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Rank over Q, by fraction-free Gaussian elimination.
int rank(Matrix m);

/// Basis of {x : m x = 0} over Q, one vector per free column of the RREF.
/// Deterministic: vectors are scaled to primitive integer form.
std::vector<IntVector> nullspace(const Matrix& m);

/// Row-style Hermite normal form of the lattice spanned by the given rows:
/// echelon shape, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped. The result is a canonical basis of the
/// row lattice.
IntMatrix hermite_basis(IntMatrix rows);

/// Basis of the integer kernel lattice {x in Z^c : m x = 0}, in Hermite form.
IntMatrix integer_kernel(const IntMatrix& m);

struct LpResult {
    bool feasible = false;
    Rational objective;  // valid only when feasible
};

/// maximize c.x  subject to  A x = b, x >= 0.
/// Exact two-phase primal simplex with Bland's rule. The problem must be
/// bounded (all uses here are).
LpResult solve_lp(const Matrix& a, const Vector& b, const Vector& c);

}  // namespace gr2::linalg
