#include "gr2/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gr2::linalg {

int rank(Matrix m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const Rational factor(m[i][col] / m[r][col]);
            for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<IntVector> nullspace(const Matrix& input) {
    Matrix m = input;
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();

    // Reduced row echelon form, tracking pivot columns.
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rational lead = m[r][col];
        for (size_t j = col; j < cols; ++j) m[r][j] /= lead;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            const Rational factor = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<IntVector> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols, make_rational(0));
        v[free] = make_rational(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = Rational(-m[i][free]);
        // Clear denominators and divide by the content.
        Integer lcm(1);
        for (const auto& x : v) lcm = Integer(lcm / gcd(lcm, x.get_den()) * x.get_den());
        IntVector w(cols);
        Integer content(0);
        for (size_t j = 0; j < cols; ++j) {
            w[j] = Integer(v[j].get_num() * (lcm / v[j].get_den()));
            content = gcd(content, w[j]);
        }
        if (content > 1)
            for (auto& x : w) x /= content;
        basis.push_back(std::move(w));
    }
    return basis;
}

namespace {

// Hermite elimination applied to the leading `pivot_cols` columns; the
// remaining columns ride along (used to carry the transformation matrix).
void hermite_eliminate(IntMatrix& rows, size_t pivot_cols, size_t& rank_out) {
    const size_t n = rows.size();
    size_t r = 0;
    for (size_t col = 0; col < pivot_cols && r < n; ++col) {
        while (true) {
            size_t best = n;
            for (size_t i = r; i < n; ++i) {
                if (rows[i][col] == 0) continue;
                if (best == n || cmp(abs(rows[i][col]), abs(rows[best][col])) < 0) best = i;
            }
            if (best == n) break;
            std::swap(rows[r], rows[best]);
            bool reduced_all = true;
            for (size_t i = r + 1; i < n; ++i) {
                if (rows[i][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
                for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (auto& x : rows[r]) x = -x;
        for (size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
            if (q == 0) continue;
            for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rank_out = r;
}

}  // namespace

IntMatrix hermite_basis(IntMatrix rows) {
    if (rows.empty()) return rows;
    size_t rank_out = 0;
    hermite_eliminate(rows, rows[0].size(), rank_out);
    rows.resize(rank_out);
    return rows;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const size_t r = m.size();
    const size_t c = r == 0 ? 0 : m[0].size();
    // Rows of [m^T | I]; after eliminating the first r columns, rows whose
    // leading block is zero carry a kernel basis in the identity block.
    IntMatrix work(c, IntVector(r + c, Integer(0)));
    for (size_t i = 0; i < c; ++i) {
        for (size_t j = 0; j < r; ++j) work[i][j] = m[j][i];
        work[i][r + i] = 1;
    }
    size_t rank_out = 0;
    hermite_eliminate(work, r, rank_out);
    IntMatrix kernel;
    for (size_t i = rank_out; i < c; ++i)
        kernel.emplace_back(work[i].begin() + static_cast<long>(r), work[i].end());
    return hermite_basis(std::move(kernel));
}

namespace {

// One Bland-rule pivot of the full tableau; the last column is the RHS and
// the last row the objective (reduced costs). Returns false at optimality.
bool simplex_iterate(Matrix& tableau, std::vector<size_t>& basis) {
    const size_t m = basis.size();
    const size_t rhs = tableau[0].size() - 1;
    const Vector& obj = tableau[m];
    size_t enter = rhs;
    for (size_t j = 0; j < rhs; ++j) {
        if (obj[j] > 0) {
            enter = j;
            break;
        }
    }
    if (enter == rhs) return false;

    size_t leave = m;
    Rational best_ratio;
    for (size_t i = 0; i < m; ++i) {
        if (tableau[i][enter] <= 0) continue;
        const Rational ratio(tableau[i][rhs] / tableau[i][enter]);
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
            leave = i;
            best_ratio = ratio;
        }
    }
    if (leave == m) throw std::runtime_error("unbounded linear program");

    const Rational pivot = tableau[leave][enter];
    for (auto& x : tableau[leave]) x /= pivot;
    for (size_t i = 0; i <= m; ++i) {
        if (i == leave || tableau[i][enter] == 0) continue;
        const Rational factor = tableau[i][enter];
        for (size_t j = 0; j <= rhs; ++j) tableau[i][j] -= factor * tableau[leave][j];
    }
    basis[leave] = enter;
    return true;
}

void drop_column(Matrix& tableau, size_t col) {
    for (auto& row : tableau) row.erase(row.begin() + static_cast<long>(col));
}

}  // namespace

LpResult solve_lp(const Matrix& a_in, const Vector& b_in, const Vector& c) {
    const size_t m = a_in.size();
    const size_t n = c.size();
    Matrix a = a_in;
    Vector b = b_in;
    for (size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = Rational(-b[i]);
            for (auto& x : a[i]) x = Rational(-x);
        }
    }

    // Phase 1 tableau: columns [vars | artificials | rhs], basis = artificials.
    const size_t total = n + m;
    Matrix tableau(m + 1, Vector(total + 1, make_rational(0)));
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) tableau[i][j] = a[i][j];
        tableau[i][n + i] = make_rational(1);
        tableau[i][total] = b[i];
        basis[i] = n + i;
    }
    // Objective row for max -(sum of artificials), reduced over the basis:
    // entry j becomes sum of column j over constraint rows.
    for (size_t j = 0; j <= total; ++j) {
        if (j >= n && j < total) continue;
        Rational s = make_rational(0);
        for (size_t i = 0; i < m; ++i) s += tableau[i][j];
        tableau[m][j] = s;
    }
    while (simplex_iterate(tableau, basis)) {
    }
    if (tableau[m][total] != 0) return {false, make_rational(0)};

    // Pivot any artificial still basic (necessarily at zero) onto an
    // original column, or zero its redundant row.
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        size_t enter = n;
        for (size_t j = 0; j < n; ++j) {
            if (tableau[i][j] != 0) {
                enter = j;
                break;
            }
        }
        if (enter == n) {
            for (size_t j = 0; j <= total; ++j) tableau[i][j] = make_rational(0);
            basis[i] = total;  // marks a dead row
            continue;
        }
        const Rational pivot = tableau[i][enter];
        for (auto& x : tableau[i]) x /= pivot;
        for (size_t k = 0; k <= m; ++k) {
            if (k == i || tableau[k][enter] == 0) continue;
            const Rational factor = tableau[k][enter];
            for (size_t j = 0; j <= total; ++j) tableau[k][j] -= factor * tableau[i][j];
        }
        basis[i] = enter;
    }

    // Remove artificial columns entirely, then run phase 2 on c.
    for (size_t j = total; j-- > n;) drop_column(tableau, j);
    for (size_t j = 0; j < n; ++j) tableau[m][j] = c[j];
    tableau[m][n] = make_rational(0);
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] >= n || tableau[m][basis[i]] == 0) continue;
        const Rational factor = tableau[m][basis[i]];
        for (size_t j = 0; j <= n; ++j) tableau[m][j] -= factor * tableau[i][j];
    }
    while (simplex_iterate(tableau, basis)) {
    }

    Rational objective = make_rational(0);
    for (size_t i = 0; i < m; ++i)
        if (basis[i] < n) objective += c[basis[i]] * tableau[i][n];
    return {true, objective};
}

}  // namespace gr2::linalg
