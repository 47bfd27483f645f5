#include "gr2/strata.hpp"

#include <algorithm>
#include <random>

namespace gr2 {

Signature::Signature(int n, std::set<IndexPair> vanishing)
    : n_(n), vanishing_(std::move(vanishing)) {
    if (n_ < 2) throw std::invalid_argument("signature needs n >= 2");
    for (const auto& [i, j] : vanishing_) {
        if (i < 1 || j <= i || j > n_)
            throw std::invalid_argument("signature pair out of range or unordered");
    }
}

ParallelStructure::ParallelStructure(int n, std::set<int> zero_rows,
                                     std::vector<std::vector<int>> classes)
    : n_(n), zero_rows_(std::move(zero_rows)), classes_(std::move(classes)) {
    if (classes_.size() < 2)
        throw std::invalid_argument("parallel structure needs at least two classes");
    std::vector<bool> seen(static_cast<size_t>(n_) + 1, false);
    for (int z : zero_rows_) {
        if (z < 1 || z > n_) throw std::invalid_argument("zero row out of range");
        seen[static_cast<size_t>(z)] = true;
    }
    for (auto& cls : classes_) {
        if (cls.empty()) throw std::invalid_argument("empty parallel class");
        std::sort(cls.begin(), cls.end());
        for (int i : cls) {
            if (i < 1 || i > n_ || seen[static_cast<size_t>(i)])
                throw std::invalid_argument("parallel classes must partition the non-zero rows");
            seen[static_cast<size_t>(i)] = true;
        }
    }
    for (int i = 1; i <= n_; ++i)
        if (!seen[static_cast<size_t>(i)])
            throw std::invalid_argument("index missing from parallel structure");
    std::sort(classes_.begin(), classes_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Signature ParallelStructure::signature() const {
    std::set<IndexPair> vanishing;
    for (int z : zero_rows_)
        for (int i = 1; i <= n_; ++i)
            if (i != z) vanishing.insert(ordered_pair(z, i));
    for (const auto& cls : classes_)
        for (size_t a = 0; a < cls.size(); ++a)
            for (size_t b = a + 1; b < cls.size(); ++b)
                vanishing.insert(ordered_pair(cls[a], cls[b]));
    return {n_, std::move(vanishing)};
}

Signature signature_of(const PluckerVector& pv) {
    std::set<IndexPair> vanishing;
    for (const auto& [pair, value] : pv.coords())
        if (value.is_zero()) vanishing.insert(pair);
    return {pv.n(), std::move(vanishing)};
}

std::optional<ParallelStructure> parallel_structure_of(const Signature& sig) {
    const int n = sig.n();
    std::set<int> zero_rows;
    for (int i = 1; i <= n; ++i) {
        bool all = true;
        for (int j = 1; j <= n && all; ++j)
            if (j != i && !sig.vanishes(i, j)) all = false;
        if (all) zero_rows.insert(i);
    }
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
        if (!zero_rows.count(i)) rest.push_back(i);

    // i ~ j iff {i,j} vanishes; grow classes greedily and reject the pattern
    // unless every class is a clique and no vanishing pair crosses classes.
    std::vector<std::vector<int>> classes;
    std::vector<bool> assigned(rest.size(), false);
    for (size_t s = 0; s < rest.size(); ++s) {
        if (assigned[s]) continue;
        std::vector<int> cls{rest[s]};
        assigned[s] = true;
        for (size_t t = s + 1; t < rest.size(); ++t) {
            if (assigned[t]) continue;
            if (sig.vanishes(rest[s], rest[t])) {
                cls.push_back(rest[t]);
                assigned[t] = true;
            }
        }
        classes.push_back(std::move(cls));
    }
    for (const auto& cls : classes)
        for (size_t a = 0; a < cls.size(); ++a)
            for (size_t b = a + 1; b < cls.size(); ++b)
                if (!sig.vanishes(cls[a], cls[b])) return std::nullopt;
    for (size_t c1 = 0; c1 < classes.size(); ++c1)
        for (size_t c2 = c1 + 1; c2 < classes.size(); ++c2)
            for (int i : classes[c1])
                for (int j : classes[c2])
                    if (sig.vanishes(i, j)) return std::nullopt;
    if (classes.size() < 2) return std::nullopt;
    return ParallelStructure(n, std::move(zero_rows), std::move(classes));
}

bool is_admissible(const Signature& sig) { return parallel_structure_of(sig).has_value(); }

namespace {

GaussianRational random_scalar(std::mt19937_64& rng, bool nonzero) {
    auto draw = [&rng](long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(rng() % span);
    };
    while (true) {
        GaussianRational value(make_rational(draw(-5, 5)), make_rational(draw(-2, 2)));
        if (!nonzero || !value.is_zero()) return value;
    }
}

}  // namespace

Plane witness_plane(const ParallelStructure& ps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = ps.n();
    while (true) {
        std::vector<std::pair<GaussianRational, GaussianRational>> directions;
        bool distinct = true;
        for (size_t c = 0; c < ps.classes().size() && distinct; ++c) {
            GaussianRational a = random_scalar(rng, false);
            GaussianRational b = random_scalar(rng, false);
            if (a.is_zero() && b.is_zero()) a = GaussianRational(1);
            for (const auto& [pa, pb] : directions)
                if ((pa * b - a * pb).is_zero()) distinct = false;
            directions.emplace_back(a, b);
        }
        if (!distinct) continue;

        std::vector<Plane::Row> rows(static_cast<size_t>(n),
                                     {GaussianRational(0), GaussianRational(0)});
        for (size_t c = 0; c < ps.classes().size(); ++c) {
            for (int i : ps.classes()[c]) {
                const GaussianRational m = random_scalar(rng, true);
                rows[static_cast<size_t>(i - 1)] = {m * directions[c].first,
                                                    m * directions[c].second};
            }
        }
        return Plane(n, std::move(rows));
    }
}

namespace {

// Set partitions of `items` with at least two blocks, via restricted growth
// strings in lexicographic order.
std::vector<std::vector<std::vector<int>>> partitions_with_two_blocks(const std::vector<int>& items) {
    std::vector<std::vector<std::vector<int>>> result;
    const size_t m = items.size();
    if (m < 2) return result;
    std::vector<size_t> rgs(m, 0);
    while (true) {
        size_t blocks = 0;
        for (size_t i = 0; i < m; ++i) blocks = std::max(blocks, rgs[i] + 1);
        if (blocks >= 2) {
            std::vector<std::vector<int>> part(blocks);
            for (size_t i = 0; i < m; ++i) part[rgs[i]].push_back(items[i]);
            result.push_back(std::move(part));
        }
        // next restricted growth string
        size_t i = m;
        while (i-- > 1) {
            size_t maxprefix = 0;
            for (size_t j = 0; j < i; ++j) maxprefix = std::max(maxprefix, rgs[j]);
            if (rgs[i] <= maxprefix) {
                ++rgs[i];
                for (size_t j = i + 1; j < m; ++j) rgs[j] = 0;
                break;
            }
        }
        if (i == 0) break;
    }
    return result;
}

}  // namespace

std::vector<Signature> enumerate_strata(int n) {
    if (n < 4 || n > 8) throw std::invalid_argument("enumerate_strata expects 4 <= n <= 8");
    std::vector<Signature> result;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<int> zero_rows;
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i) {
            if (mask & (1u << (i - 1)))
                zero_rows.insert(i);
            else
                rest.push_back(i);
        }
        if (rest.size() < 2) continue;
        for (auto& part : partitions_with_two_blocks(rest))
            result.push_back(ParallelStructure(n, zero_rows, std::move(part)).signature());
    }
    std::sort(result.begin(), result.end(), [n](const Signature& a, const Signature& b) {
        const auto zeros = [n](const Signature& s) {
            int count = 0;
            for (int i = 1; i <= n; ++i) {
                bool all = true;
                for (int j = 1; j <= n && all; ++j)
                    if (j != i && !s.vanishes(i, j)) all = false;
                if (all) ++count;
            }
            return count;
        };
        const int za = zeros(a);
        const int zb = zeros(b);
        if (za != zb) return za < zb;
        return a.vanishing() < b.vanishing();
    });
    return result;
}

StabilizerLattice stabilizer_lattice(const Signature& sig) {
    if (!is_admissible(sig)) throw std::invalid_argument("inadmissible signature");
    const int n = sig.n();
    linalg::Matrix system;
    for (const auto& [i, j] : all_pairs(n)) {
        if (sig.vanishes(i, j)) continue;
        linalg::Vector row(static_cast<size_t>(n) + 1, make_rational(0));
        row[static_cast<size_t>(i - 1)] = make_rational(1);
        row[static_cast<size_t>(j - 1)] = make_rational(1);
        row[static_cast<size_t>(n)] = make_rational(-1);  // the lambda column
        system.push_back(std::move(row));
    }
    StabilizerLattice lattice;
    lattice.n = n;
    for (auto& vec : linalg::nullspace(system)) {
        vec.pop_back();  // drop lambda
        lattice.basis.push_back(std::move(vec));
    }
    return lattice;
}

}  // namespace gr2
