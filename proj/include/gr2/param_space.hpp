#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gr2/crossratio.hpp"
#include "gr2/momentmap.hpp"

namespace gr2 {

/// Per-coordinate status of a virtual space of parameters. Ghost marks a
/// coordinate undefined on the stratum itself (0/0); such coordinates count
/// as free, constrained only through the multiplicative relations and
/// closure membership.
enum class TupleStatus { Forced0, Forced1, ForcedInf, Free, FreeGhost };

bool is_free(TupleStatus s);

/// Description of the virtual space of parameters of a stratum: a status
/// per 4-subset plus a lattice of multiplicative constraints among the free
/// coordinates. A constraint vector v means prod_t w_t^{v_t} = 1, read
/// projectively.
class VirtualSpaceDescription {
public:
    VirtualSpaceDescription(int n, std::map<TupleKey, TupleStatus> status,
                            std::vector<TupleKey> free_tuples,
                            std::vector<std::vector<long>> constraints);

    int n() const { return n_; }
    const std::map<TupleKey, TupleStatus>& status() const { return status_; }
    TupleStatus status_of(const TupleKey& key) const { return status_.at(key); }
    /// Sorted list of free tuples (ghosts included); constraint vectors are
    /// indexed against it.
    const std::vector<TupleKey>& free_tuples() const { return free_tuples_; }
    const std::vector<std::vector<long>>& constraints() const { return constraints_; }

    ProjectivePoint forced_value(const TupleKey& key) const;

private:
    int n_;
    std::map<TupleKey, TupleStatus> status_;
    std::vector<TupleKey> free_tuples_;
    std::vector<std::vector<long>> constraints_;
};

/// Torus-orbit invariant of a Plucker vector: its signature together with
/// every defined cross-ratio value.
struct OrbitClass {
    Signature signature;
    std::map<TupleKey, ProjectivePoint> values;

    friend bool operator==(const OrbitClass& a, const OrbitClass& b) {
        return a.signature == b.signature && a.values == b.values;
    }
};

OrbitClass orbit_class_of(const PluckerVector& pv);

/// Same H-orbit: equal signatures and equal defined cross-ratio values.
bool same_orbit(const PluckerVector& pv1, const PluckerVector& pv2);

/// Statuses from the per-tuple classification; constraints derived by exact
/// integer linear algebra. Cross-ratios are formal monomials in the Plucker
/// coordinates, so the identities valid on the whole closure are the kernel
/// of the exponent matrix; kernel vectors avoiding the tuples forced to 0 or
/// infinity descend to relations among the free coordinates once the
/// forced-1 factors drop out. The projected lattice is reported in Hermite
/// form.
VirtualSpaceDescription virtual_space_of(const Signature& sig);

/// Membership of a fully defined point of (CP^1)^N in the virtual space:
/// forced coordinates at their forced values, strong coordinates outside
/// {0,1,inf}, multiplicative constraints satisfied projectively, and the
/// homogenized five-subset identity system (closure membership).
bool member_of_virtual(const CrossTuple& x, const Signature& sig);

/// Values at the strongly admissible tuples in sorted order (the projection
/// onto the stratum's own space of parameters). Input must be a member.
std::vector<ProjectivePoint> project_strong(const CrossTuple& x, const Signature& sig);

struct NotApplicableError : std::runtime_error {
    explicit NotApplicableError(const std::string& what) : std::runtime_error(what) {}
};

/// When inner's polytope is a proper face of outer's, samples members of
/// outer's virtual space (limits of random degenerations) and checks each
/// lies in inner's virtual space. Throws NotApplicableError when the face
/// precondition fails.
bool check_containment(const Signature& outer, const Signature& inner, int samples,
                       std::uint64_t seed);

/// The homogenized closure identities of one sorted 5-subset, evaluated on
/// canonical representatives; used by member_of_virtual and exposed for the
/// degeneration checks.
bool closure_identities_hold(const CrossTuple& x, const std::array<int, 5>& subset);

}  // namespace gr2
