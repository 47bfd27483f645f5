#include "gr2/param_space.hpp"

#include <algorithm>

#include "gr2/degeneration.hpp"
#include "gr2/linalg.hpp"

namespace gr2 {

bool is_free(TupleStatus s) { return s == TupleStatus::Free || s == TupleStatus::FreeGhost; }

VirtualSpaceDescription::VirtualSpaceDescription(int n, std::map<TupleKey, TupleStatus> status,
                                                 std::vector<TupleKey> free_tuples,
                                                 std::vector<std::vector<long>> constraints)
    : n_(n),
      status_(std::move(status)),
      free_tuples_(std::move(free_tuples)),
      constraints_(std::move(constraints)) {
    for (const auto& key : all_tuples(n_))
        if (!status_.count(key))
            throw std::invalid_argument("virtual space description misses a 4-subset");
    for (const auto& vec : constraints_) {
        if (vec.size() != free_tuples_.size())
            throw std::invalid_argument("constraint vector length does not match free tuples");
        bool nonzero = false;
        for (long e : vec) nonzero = nonzero || e != 0;
        if (!nonzero) throw std::invalid_argument("zero constraint vector");
    }
}

ProjectivePoint VirtualSpaceDescription::forced_value(const TupleKey& key) const {
    switch (status_.at(key)) {
        case TupleStatus::Forced0:
            return ProjectivePoint::zero();
        case TupleStatus::Forced1:
            return ProjectivePoint::one();
        case TupleStatus::ForcedInf:
            return ProjectivePoint::infinity();
        default:
            throw std::domain_error("tuple is not forced");
    }
}

OrbitClass orbit_class_of(const PluckerVector& pv) {
    OrbitClass result{signature_of(pv), {}};
    for (const auto& key : all_tuples(pv.n())) {
        const auto value = evaluate_cross_ratio(pv, Tuple4(key[0], key[1], key[2], key[3]));
        if (value.is_defined()) result.values.emplace(key, value.point());
    }
    return result;
}

bool same_orbit(const PluckerVector& pv1, const PluckerVector& pv2) {
    if (pv1.n() != pv2.n()) throw std::invalid_argument("Plucker vectors disagree on n");
    return orbit_class_of(pv1) == orbit_class_of(pv2);
}

namespace {

TupleStatus status_from_classification(const Classification& c) {
    if (c.is_non_admissible()) return TupleStatus::FreeGhost;
    if (c.is_strong()) return TupleStatus::Free;
    if (c.forced == ProjectivePoint::zero()) return TupleStatus::Forced0;
    if (c.forced == ProjectivePoint::infinity()) return TupleStatus::ForcedInf;
    return TupleStatus::Forced1;
}

// Exponent vector of a sorted tuple in the pair coordinates: +1 on (i,k)
// and (j,l), -1 on (i,l) and (j,k). All four pairs are index-ordered, so no
// sign corrections enter.
void add_exponents(linalg::IntVector& column_out, const TupleKey& t,
                   const std::map<IndexPair, size_t>& pair_index) {
    column_out[pair_index.at({t[0], t[2]})] += 1;
    column_out[pair_index.at({t[1], t[3]})] += 1;
    column_out[pair_index.at({t[0], t[3]})] -= 1;
    column_out[pair_index.at({t[1], t[2]})] -= 1;
}

}  // namespace

VirtualSpaceDescription virtual_space_of(const Signature& sig) {
    if (!is_admissible(sig)) throw std::invalid_argument("inadmissible signature");
    const int n = sig.n();

    std::map<TupleKey, TupleStatus> status;
    std::vector<TupleKey> included;  // free and forced-1 tuples, sorted order
    std::vector<TupleKey> free_tuples;
    for (const auto& key : all_tuples(n)) {
        const auto cls = classify_cross_ratio(sig, Tuple4(key[0], key[1], key[2], key[3]));
        const TupleStatus s = status_from_classification(cls);
        status.emplace(key, s);
        if (s == TupleStatus::Forced0 || s == TupleStatus::ForcedInf) continue;
        included.push_back(key);
        if (is_free(s)) free_tuples.push_back(key);
    }

    // Kernel of the exponent matrix over the included tuples = the
    // multiplicative identities on the closure that avoid every coordinate
    // pinned at 0 or infinity; projecting away the forced-1 components
    // leaves the constraint lattice on the free coordinates.
    const auto pairs = all_pairs(n);
    std::map<IndexPair, size_t> pair_index;
    for (size_t p = 0; p < pairs.size(); ++p) pair_index[pairs[p]] = p;

    linalg::IntMatrix exponent(pairs.size(), linalg::IntVector(included.size(), Integer(0)));
    for (size_t c = 0; c < included.size(); ++c) {
        linalg::IntVector column(pairs.size(), Integer(0));
        add_exponents(column, included[c], pair_index);
        for (size_t p = 0; p < pairs.size(); ++p) exponent[p][c] = column[p];
    }
    const linalg::IntMatrix kernel = linalg::integer_kernel(exponent);

    std::vector<size_t> free_position;  // position of each free tuple inside `included`
    for (size_t c = 0; c < included.size(); ++c)
        if (is_free(status.at(included[c]))) free_position.push_back(c);

    linalg::IntMatrix projected;
    for (const auto& vec : kernel) {
        linalg::IntVector row;
        row.reserve(free_position.size());
        bool nonzero = false;
        for (size_t p : free_position) {
            row.push_back(vec[p]);
            nonzero = nonzero || vec[p] != 0;
        }
        if (nonzero) projected.push_back(std::move(row));
    }
    std::vector<std::vector<long>> constraints;
    for (const auto& vec : linalg::hermite_basis(std::move(projected))) {
        std::vector<long> row;
        row.reserve(vec.size());
        for (const auto& e : vec) {
            if (!e.fits_slong_p()) throw std::runtime_error("constraint exponent overflow");
            row.push_back(e.get_si());
        }
        constraints.push_back(std::move(row));
    }

    return {n, std::move(status), std::move(free_tuples), std::move(constraints)};
}

namespace {

// Projective evaluation of prod w_t^{v_t} = 1 on canonical representatives:
// both sides of prod c^{v+} c'^{v-} = prod c'^{v+} c^{v-} are formed and
// compared; entries at 0 or infinity may legitimately reduce the relation
// to 0 = 0.
bool constraint_holds(const CrossTuple& x, const std::vector<TupleKey>& free_tuples,
                      const std::vector<long>& exponents) {
    GaussianRational lhs(1);
    GaussianRational rhs(1);
    for (size_t p = 0; p < free_tuples.size(); ++p) {
        const long e = exponents[p];
        if (e == 0) continue;
        const ProjectivePoint& value = x.at(free_tuples[p]).point();
        const GaussianRational& c = value.first();
        const GaussianRational& cp = value.second();
        for (long r = 0; r < std::abs(e); ++r) {
            if (e > 0) {
                lhs *= c;
                rhs *= cp;
            } else {
                lhs *= cp;
                rhs *= c;
            }
        }
    }
    return lhs == rhs;
}

}  // namespace

bool closure_identities_hold(const CrossTuple& x, const std::array<int, 5>& subset) {
    const auto& [a, b, c, d, e] = subset;
    const auto point = [&](int p, int q, int r, int s) -> const ProjectivePoint& {
        return x.at(TupleKey{p, q, r, s}).point();
    };
    const ProjectivePoint& w1 = point(a, b, c, d);
    const ProjectivePoint& w2 = point(a, b, c, e);
    const ProjectivePoint& w3 = point(a, b, d, e);
    const ProjectivePoint& w4 = point(a, c, d, e);
    const ProjectivePoint& w5 = point(b, c, d, e);
    const GaussianRational &c1 = w1.first(), &p1 = w1.second();
    const GaussianRational &c2 = w2.first(), &p2 = w2.second();
    const GaussianRational &c3 = w3.first(), &p3 = w3.second();
    const GaussianRational &c4 = w4.first(), &p4 = w4.second();
    const GaussianRational &c5 = w5.first(), &p5 = w5.second();
    // The four relations cutting out the closure over one 5-subset: two
    // cocycles and the two complement-type couplings of w4, w5 to w1, w2.
    if (c1 * p2 * c3 != p1 * c2 * p3) return false;
    if (c4 * (p1 - c1) * p2 != p4 * (p2 - c2) * p1) return false;
    if (c5 * (p1 - c1) * c2 != p5 * (p2 - c2) * c1) return false;
    if (c5 * p4 * c3 != p5 * c4 * p3) return false;
    return true;
}

bool member_of_virtual(const CrossTuple& x, const Signature& sig) {
    if (x.n() != sig.n()) throw std::invalid_argument("cross tuple and signature disagree on n");
    if (!x.all_defined())
        throw std::invalid_argument("membership needs a fully defined cross tuple");
    const auto description = virtual_space_of(sig);

    for (const auto& [key, status] : description.status()) {
        const CrossRatioValue& value = x.at(key);
        switch (status) {
            case TupleStatus::Forced0:
            case TupleStatus::Forced1:
            case TupleStatus::ForcedInf:
                if (value.point() != description.forced_value(key)) return false;
                break;
            case TupleStatus::Free:
                if (!value.is_generic()) return false;
                break;
            case TupleStatus::FreeGhost:
                break;  // unconstrained beyond the relations below
        }
    }
    for (const auto& vec : description.constraints())
        if (!constraint_holds(x, description.free_tuples(), vec)) return false;

    const int n = sig.n();
    std::array<int, 5> subset{};
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    for (int e = d + 1; e <= n; ++e) {
                        subset = {a, b, c, d, e};
                        if (!closure_identities_hold(x, subset)) return false;
                    }
    return true;
}

std::vector<ProjectivePoint> project_strong(const CrossTuple& x, const Signature& sig) {
    if (!member_of_virtual(x, sig))
        throw std::invalid_argument("projection expects a member of the virtual space");
    const auto description = virtual_space_of(sig);
    std::vector<ProjectivePoint> values;
    for (const auto& key : all_tuples(sig.n()))
        if (description.status_of(key) == TupleStatus::Free) values.push_back(x.at(key).point());
    return values;
}

bool check_containment(const Signature& outer, const Signature& inner, int samples,
                       std::uint64_t seed) {
    const auto outer_poly = admissible_polytope(outer);
    const auto inner_poly = admissible_polytope(inner);
    if (!is_proper_face(outer_poly, inner_poly))
        throw NotApplicableError("inner polytope is not a proper face of the outer polytope");
    for (int s = 0; s < samples; ++s) {
        const CrossTuple x = sample_virtual_member(outer, seed + static_cast<std::uint64_t>(s));
        if (!member_of_virtual(x, inner)) return false;
    }
    return true;
}

}  // namespace gr2
