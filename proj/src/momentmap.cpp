#include "gr2/momentmap.hpp"

#include "gr2/linalg.hpp"

namespace gr2 {

HypersimplexPoint::HypersimplexPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    Rational sum = make_rational(0);
    for (const auto& x : coords_) {
        if (x < 0 || x > 1) throw std::invalid_argument("hypersimplex coordinate outside [0,1]");
        sum += x;
    }
    if (sum != 2) throw std::invalid_argument("hypersimplex coordinates must sum to 2");
}

AdmissiblePolytope::AdmissiblePolytope(int n, std::set<IndexPair> vertices)
    : n_(n), vertices_(std::move(vertices)), dim_(0) {
    if (vertices_.empty()) throw std::invalid_argument("polytope needs at least one vertex");
    for (const auto& [i, j] : vertices_)
        if (i < 1 || j <= i || j > n_) throw std::invalid_argument("polytope vertex out of range");
    // Affine dimension: rank of the differences against the first vertex.
    const IndexPair base = *vertices_.begin();
    linalg::Matrix diffs;
    for (const auto& v : vertices_) {
        if (v == base) continue;
        linalg::Vector row(static_cast<size_t>(n_), make_rational(0));
        row[static_cast<size_t>(v.first - 1)] += 1;
        row[static_cast<size_t>(v.second - 1)] += 1;
        row[static_cast<size_t>(base.first - 1)] -= 1;
        row[static_cast<size_t>(base.second - 1)] -= 1;
        diffs.push_back(std::move(row));
    }
    dim_ = diffs.empty() ? 0 : linalg::rank(std::move(diffs));
}

HyperplaneForm::HyperplaneForm(int n, std::set<int> index_set)
    : n_(n), index_set_(std::move(index_set)) {
    if (index_set_.empty() || static_cast<int>(index_set_.size()) >= n_)
        throw std::invalid_argument("wall form needs a proper nonempty index set");
    for (int i : index_set_)
        if (i < 1 || i > n_) throw std::invalid_argument("wall form index out of range");
}

Rational HyperplaneForm::evaluate(const HypersimplexPoint& x) const {
    Rational sum = make_rational(0);
    for (int i : index_set_) sum += x.coords()[static_cast<size_t>(i - 1)];
    return sum;
}

HypersimplexPoint moment_map(const PluckerVector& pv) {
    const int n = pv.n();
    std::vector<Rational> weight_sum(static_cast<size_t>(n), make_rational(0));
    Rational total = make_rational(0);
    for (const auto& [pair, value] : pv.coords()) {
        const Rational w = value.norm_sq();
        weight_sum[static_cast<size_t>(pair.first - 1)] += w;
        weight_sum[static_cast<size_t>(pair.second - 1)] += w;
        total += w;
    }
    std::vector<Rational> coords;
    coords.reserve(static_cast<size_t>(n));
    for (const auto& w : weight_sum) coords.push_back(Rational(w / total));
    return HypersimplexPoint(std::move(coords));
}

AdmissiblePolytope admissible_polytope(const Signature& sig) {
    if (!is_admissible(sig)) throw std::invalid_argument("inadmissible signature");
    std::set<IndexPair> vertices;
    for (const auto& pair : all_pairs(sig.n()))
        if (!sig.vanishing().count(pair)) vertices.insert(pair);
    return {sig.n(), std::move(vertices)};
}

std::optional<HyperplaneForm> theorem6_form(const ParallelStructure& ps) {
    if (!ps.zero_rows().empty() || ps.classes().size() != 2) return std::nullopt;
    const auto& first_class = ps.classes().front();  // classes ordered by smallest member
    return HyperplaneForm(ps.n(), {first_class.begin(), first_class.end()});
}

bool in_relative_interior(const AdmissiblePolytope& poly, const HypersimplexPoint& point) {
    if (poly.n() != point.n())
        throw std::invalid_argument("polytope and point disagree on n");
    // x = sum lambda_v e_v with lambda_v >= eps, sum lambda = 1, eps maximal.
    // Substituting mu_v = lambda_v - eps gives an equality-form LP in
    // (mu, eps) >= 0; the point is interior iff the optimum is positive.
    const std::vector<IndexPair> verts(poly.vertices().begin(), poly.vertices().end());
    const size_t m = verts.size();
    const size_t n = static_cast<size_t>(poly.n());

    linalg::Matrix a(n + 1, linalg::Vector(m + 1, make_rational(0)));
    linalg::Vector b(n + 1, make_rational(0));
    for (size_t v = 0; v < m; ++v) {
        a[static_cast<size_t>(verts[v].first - 1)][v] = make_rational(1);
        a[static_cast<size_t>(verts[v].second - 1)][v] = make_rational(1);
        a[n][v] = make_rational(1);
    }
    for (size_t r = 0; r < n; ++r) {
        Rational vertex_sum = make_rational(0);
        for (size_t v = 0; v < m; ++v) vertex_sum += a[r][v];
        a[r][m] = vertex_sum;  // eps column
        b[r] = point.coords()[r];
    }
    a[n][m] = make_rational(static_cast<long>(m));
    b[n] = make_rational(1);

    linalg::Vector objective(m + 1, make_rational(0));
    objective[m] = make_rational(1);
    const auto result = linalg::solve_lp(a, b, objective);
    return result.feasible && result.objective > 0;
}

bool is_proper_face(const AdmissiblePolytope& outer, const AdmissiblePolytope& inner) {
    if (outer.n() != inner.n()) throw std::invalid_argument("polytopes disagree on n");
    std::vector<IndexPair> on_face;
    std::vector<IndexPair> off_face;
    for (const auto& v : outer.vertices()) {
        if (inner.vertices().count(v))
            on_face.push_back(v);
        else
            off_face.push_back(v);
    }
    if (on_face.size() != inner.vertices().size()) return false;  // not a vertex subset
    if (off_face.empty()) return false;                           // the whole polytope

    // Functional f and offset c with f(v) = c on the face and f(u) <= c - 1
    // off it; free variables split into nonnegative parts, one slack per
    // strict inequality. Pure feasibility.
    const size_t n = static_cast<size_t>(outer.n());
    const size_t vars = 2 * n + 2 + off_face.size();
    auto fill = [&](linalg::Vector& row, const IndexPair& v) {
        row[static_cast<size_t>(v.first - 1)] += 1;
        row[n + static_cast<size_t>(v.first - 1)] -= 1;
        row[static_cast<size_t>(v.second - 1)] += 1;
        row[n + static_cast<size_t>(v.second - 1)] -= 1;
        row[2 * n] -= 1;      // -c (positive part)
        row[2 * n + 1] += 1;  // +c (negative part)
    };
    linalg::Matrix a;
    linalg::Vector b;
    for (const auto& v : on_face) {
        linalg::Vector row(vars, make_rational(0));
        fill(row, v);
        a.push_back(std::move(row));
        b.push_back(make_rational(0));
    }
    for (size_t u = 0; u < off_face.size(); ++u) {
        linalg::Vector row(vars, make_rational(0));
        fill(row, off_face[u]);
        row[2 * n + 2 + u] = make_rational(1);  // slack
        a.push_back(std::move(row));
        b.push_back(make_rational(-1));
    }
    const linalg::Vector objective(vars, make_rational(0));
    return linalg::solve_lp(a, b, objective).feasible;
}

}  // namespace gr2
