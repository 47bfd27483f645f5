#include "gr2/grassmann.hpp"

#include <queue>

namespace gr2 {

std::vector<IndexPair> all_pairs(int n) {
    std::vector<IndexPair> pairs;
    pairs.reserve(static_cast<size_t>(n) * static_cast<size_t>(n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

Plane::Plane(int n, std::vector<Row> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ < 2) throw std::invalid_argument("a 2-plane needs n >= 2");
    if (rows_.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("plane row count does not match n");
    for (const auto& [i, j] : all_pairs(n_)) {
        const auto& [ai, bi] = rows_[static_cast<size_t>(i - 1)];
        const auto& [aj, bj] = rows_[static_cast<size_t>(j - 1)];
        if (!(ai * bj - aj * bi).is_zero()) return;
    }
    throw std::invalid_argument("matrix has rank < 2: all 2x2 minors vanish");
}

PluckerVector::PluckerVector(int n, std::map<IndexPair, GaussianRational> coords)
    : n_(n), coords_(std::move(coords)) {
    if (n_ < 2) throw std::invalid_argument("Plucker vector needs n >= 2");
    bool nonzero = false;
    for (const auto& [i, j] : all_pairs(n_)) {
        auto it = coords_.find({i, j});
        if (it == coords_.end()) {
            coords_[{i, j}] = GaussianRational(0);
        } else if (!it->second.is_zero()) {
            nonzero = true;
        }
    }
    if (coords_.size() != static_cast<size_t>(n_) * static_cast<size_t>(n_ - 1) / 2)
        throw std::invalid_argument("Plucker coordinates carry an out-of-range pair");
    if (!nonzero) throw std::invalid_argument("Plucker vector must not be identically zero");
}

void PluckerVector::check_index(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("Plucker index out of range");
}

GaussianRational PluckerVector::at(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) return GaussianRational(0);
    if (i < j) return coords_.at({i, j});
    return -coords_.at({j, i});
}

bool PluckerVector::projectively_equal(const PluckerVector& other) const {
    if (n_ != other.n_) return false;
    IndexPair ref{0, 0};
    for (const auto& [pair, value] : coords_) {
        if (!value.is_zero()) {
            ref = pair;
            break;
        }
    }
    if (other.coords_.at(ref).is_zero()) return false;
    const GaussianRational& a0 = coords_.at(ref);
    const GaussianRational& b0 = other.coords_.at(ref);
    for (const auto& [pair, a] : coords_) {
        if (a * b0 != other.coords_.at(pair) * a0) return false;
    }
    return true;
}

PluckerVector PluckerVector::scaled(const GaussianRational& factor) const {
    if (factor.is_zero()) throw std::invalid_argument("projective scaling by zero");
    std::map<IndexPair, GaussianRational> coords = coords_;
    for (auto& [pair, value] : coords) value *= factor;
    return {n_, std::move(coords)};
}

TorusElement::TorusElement(int n, std::vector<GaussianRational> factors)
    : n_(n), factors_(std::move(factors)) {
    if (factors_.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("torus element factor count does not match n");
    for (const auto& t : factors_)
        if (t.is_zero()) throw std::invalid_argument("torus factors must be nonzero");
}

PluckerVector plucker_of(const Plane& plane) {
    std::map<IndexPair, GaussianRational> coords;
    for (const auto& [i, j] : all_pairs(plane.n())) {
        const auto& [ai, bi] = plane.row(i);
        const auto& [aj, bj] = plane.row(j);
        coords[{i, j}] = ai * bj - aj * bi;
    }
    return {plane.n(), std::move(coords)};
}

bool check_plucker_relations(const PluckerVector& pv) {
    const int n = pv.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    const GaussianRational lhs = pv.at(i, j) * pv.at(k, l) -
                                                 pv.at(i, k) * pv.at(j, l) +
                                                 pv.at(j, k) * pv.at(i, l);
                    if (!lhs.is_zero()) return false;
                }
    return true;
}

PluckerVector torus_act(const TorusElement& t, const PluckerVector& pv) {
    if (t.n() != pv.n()) throw std::invalid_argument("torus element and Plucker vector disagree on n");
    std::map<IndexPair, GaussianRational> coords;
    for (const auto& [pair, value] : pv.coords())
        coords[pair] = t.factor(pair.first) * t.factor(pair.second) * value;
    return {pv.n(), std::move(coords)};
}

std::optional<TorusElement> reconstruct_torus(const PluckerVector& pv1, const PluckerVector& pv2) {
    if (pv1.n() != pv2.n()) throw std::invalid_argument("Plucker vectors disagree on n");
    const int n = pv1.n();

    std::vector<std::vector<int>> adjacent(static_cast<size_t>(n) + 1);
    for (const auto& [pair, value] : pv1.coords()) {
        const bool z1 = value.is_zero();
        const bool z2 = pv2.coords().at(pair).is_zero();
        if (z1 != z2) throw std::invalid_argument("vanishing patterns differ");
        if (z1) continue;
        adjacent[static_cast<size_t>(pair.first)].push_back(pair.second);
        adjacent[static_cast<size_t>(pair.second)].push_back(pair.first);
    }
    auto ratio = [&](int i, int j) {
        return pv2.coords().at(ordered_pair(i, j)) / pv1.coords().at(ordered_pair(i, j));
    };

    // Solve t_i t_j = mu * tau_ij on the nonvanishing-pair graph. Writing
    // t_i = v_i mu^{x_i} with x in {0,1} along a BFS tree leaves mu as the
    // one remaining unknown; non-tree edges either determine it or must be
    // consistent on their own.
    std::vector<int> x(static_cast<size_t>(n) + 1, -1);
    std::vector<GaussianRational> v(static_cast<size_t>(n) + 1, GaussianRational(0));
    std::optional<GaussianRational> mu;
    int base = 0;

    for (int start = 1; start <= n; ++start) {
        if (x[static_cast<size_t>(start)] != -1 || adjacent[static_cast<size_t>(start)].empty())
            continue;
        if (base == 0) base = start;
        x[static_cast<size_t>(start)] = 0;
        v[static_cast<size_t>(start)] = GaussianRational(1);
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop();
            for (int j : adjacent[static_cast<size_t>(i)]) {
                if (x[static_cast<size_t>(j)] != -1) continue;
                x[static_cast<size_t>(j)] = 1 - x[static_cast<size_t>(i)];
                v[static_cast<size_t>(j)] = ratio(i, j) / v[static_cast<size_t>(i)];
                queue.push(j);
            }
        }
    }
    if (base == 0) throw std::invalid_argument("no nonvanishing pair to reconstruct from");

    // Every edge gives mu^{1 - x_i - x_j} = v_i v_j / tau_ij.
    for (const auto& [pair, value] : pv1.coords()) {
        if (value.is_zero()) continue;
        const int i = pair.first;
        const int j = pair.second;
        const int exponent = 1 - x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)];
        const GaussianRational rhs =
            v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)] / ratio(i, j);
        if (exponent == 0) {
            if (rhs != GaussianRational(1)) return std::nullopt;
            continue;
        }
        const GaussianRational implied = exponent == 1 ? rhs : rhs.inverse();
        if (mu && *mu != implied) return std::nullopt;
        mu = implied;
    }
    const GaussianRational scale = mu.value_or(GaussianRational(1));

    std::vector<GaussianRational> t(static_cast<size_t>(n), GaussianRational(1));
    for (int i = 1; i <= n; ++i) {
        if (x[static_cast<size_t>(i)] == -1) continue;
        t[static_cast<size_t>(i - 1)] = x[static_cast<size_t>(i)] == 0
                                            ? v[static_cast<size_t>(i)]
                                            : GaussianRational(v[static_cast<size_t>(i)] * scale);
    }
    // Normalize so the first factor usable against a nonvanishing pair is 1.
    const GaussianRational pivot = t[static_cast<size_t>(base - 1)];
    for (auto& value : t) value /= pivot;
    for (int i = 1; i <= n; ++i)
        if (x[static_cast<size_t>(i)] == -1) t[static_cast<size_t>(i - 1)] = GaussianRational(1);

    TorusElement candidate(n, std::move(t));
    if (!torus_act(candidate, pv1).projectively_equal(pv2)) return std::nullopt;
    return candidate;
}

}  // namespace gr2
