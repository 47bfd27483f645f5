#pragma once

#include <json.hpp>

#include "gr2/degeneration.hpp"
#include "gr2/gm_config.hpp"
#include "gr2/momentmap.hpp"
#include "gr2/param_space.hpp"

namespace gr2 {

// JSON encodings used by the CLI and the python bindings. ordered_json keeps
// key order deterministic so identical inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

Json plane_to_json(const Plane& plane);
Plane plane_from_json(const Json& j);

Json signature_to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

Json polytope_to_json(const AdmissiblePolytope& poly);

Json cross_tuple_to_json(const CrossTuple& x);
CrossTuple cross_tuple_from_json(const Json& j);

Json virtual_space_to_json(const VirtualSpaceDescription& description);

Json configuration_to_json(const PointConfiguration& config);
PointConfiguration configuration_from_json(const Json& j);

/// Family files restrict entries to polynomials in t (no negative
/// exponents); parsing rejects anything else.
Json laurent_plane_to_json(const LaurentPlane& lp);
LaurentPlane laurent_plane_from_json(const Json& j);

/// "1,2;3,4" -> signature over [1, n].
Signature signature_from_flag(int n, const std::string& text);

}  // namespace gr2
