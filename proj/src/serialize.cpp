#include "gr2/serialize.hpp"

#include <sstream>

namespace gr2 {

namespace {

int json_n(const Json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("missing integer field \"n\"");
    return j["n"].get<int>();
}

}  // namespace

Json plane_to_json(const Plane& plane) {
    Json rows = Json::array();
    for (const auto& [a, b] : plane.rows()) rows.push_back({a.to_string(), b.to_string()});
    return Json{{"n", plane.n()}, {"rows", std::move(rows)}};
}

Plane plane_from_json(const Json& j) {
    const int n = json_n(j);
    if (!j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("plane JSON needs a \"rows\" array");
    std::vector<Plane::Row> rows;
    for (const auto& row : j["rows"]) {
        if (!row.is_array() || row.size() != 2)
            throw std::invalid_argument("plane row must be a [a, b] pair of scalars");
        rows.emplace_back(GaussianRational::from_string(row[0].get<std::string>()),
                          GaussianRational::from_string(row[1].get<std::string>()));
    }
    return {n, std::move(rows)};
}

Json signature_to_json(const Signature& sig) {
    Json pairs = Json::array();
    for (const auto& [i, j] : sig.vanishing()) pairs.push_back({i, j});
    return Json{{"n", sig.n()}, {"vanishing", std::move(pairs)}};
}

Signature signature_from_json(const Json& j) {
    const int n = json_n(j);
    if (!j.contains("vanishing") || !j["vanishing"].is_array())
        throw std::invalid_argument("signature JSON needs a \"vanishing\" array");
    std::set<IndexPair> vanishing;
    for (const auto& pair : j["vanishing"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("vanishing entry must be an index pair");
        vanishing.insert(ordered_pair(pair[0].get<int>(), pair[1].get<int>()));
    }
    return {n, std::move(vanishing)};
}

Json polytope_to_json(const AdmissiblePolytope& poly) {
    Json vertices = Json::array();
    for (const auto& [i, j] : poly.vertices()) vertices.push_back({i, j});
    return Json{{"n", poly.n()}, {"vertices", std::move(vertices)}, {"dim", poly.dim()}};
}

Json cross_tuple_to_json(const CrossTuple& x) {
    Json entries = Json::array();
    for (const auto& [key, value] : x.values()) {
        entries.push_back(
            {{"tuple", {key[0], key[1], key[2], key[3]}}, {"value", value.to_string()}});
    }
    return Json{{"n", x.n()}, {"values", std::move(entries)}};
}

CrossTuple cross_tuple_from_json(const Json& j) {
    const int n = json_n(j);
    if (!j.contains("values") || !j["values"].is_array())
        throw std::invalid_argument("cross tuple JSON needs a \"values\" array");
    std::map<TupleKey, CrossRatioValue> values;
    for (const auto& entry : j["values"]) {
        const auto& tuple = entry.at("tuple");
        if (!tuple.is_array() || tuple.size() != 4)
            throw std::invalid_argument("cross tuple entry needs a 4-index tuple");
        TupleKey key{tuple[0].get<int>(), tuple[1].get<int>(), tuple[2].get<int>(),
                     tuple[3].get<int>()};
        const std::string text = entry.at("value").get<std::string>();
        values.emplace(key, text == "undef"
                                ? CrossRatioValue::undefined()
                                : CrossRatioValue::defined(ProjectivePoint::from_string(text)));
    }
    return {n, std::move(values)};
}

namespace {

std::string tuple_digits(const TupleKey& key) {
    std::string out;
    for (int i : key) out += std::to_string(i);
    return out;
}

}  // namespace

Json virtual_space_to_json(const VirtualSpaceDescription& description) {
    Json forced = Json::array();
    Json free_list = Json::array();
    Json ghost_list = Json::array();
    for (const auto& [key, status] : description.status()) {
        switch (status) {
            case TupleStatus::Forced0:
            case TupleStatus::Forced1:
            case TupleStatus::ForcedInf:
                forced.push_back({{"tuple", {key[0], key[1], key[2], key[3]}},
                                  {"value", description.forced_value(key).to_string()}});
                break;
            case TupleStatus::Free:
                free_list.push_back({key[0], key[1], key[2], key[3]});
                break;
            case TupleStatus::FreeGhost:
                free_list.push_back({key[0], key[1], key[2], key[3]});
                ghost_list.push_back({key[0], key[1], key[2], key[3]});
                break;
        }
    }
    Json constraints = Json::array();
    for (const auto& vec : description.constraints()) {
        Json exponents = Json::object();
        for (size_t p = 0; p < vec.size(); ++p) {
            if (vec[p] == 0) continue;
            exponents[tuple_digits(description.free_tuples()[p])] = vec[p];
        }
        constraints.push_back({{"exponents", std::move(exponents)}});
    }
    return Json{{"n", description.n()},
                {"forced", std::move(forced)},
                {"free", std::move(free_list)},
                {"ghost", std::move(ghost_list)},
                {"constraints", std::move(constraints)}};
}

Json configuration_to_json(const PointConfiguration& config) {
    Json points = Json::array();
    for (const auto& p : config.points())
        points.push_back({p.first().to_string(), p.second().to_string()});
    return Json{{"n", config.n()}, {"points", std::move(points)}};
}

PointConfiguration configuration_from_json(const Json& j) {
    const int n = json_n(j);
    if (!j.contains("points") || !j["points"].is_array())
        throw std::invalid_argument("configuration JSON needs a \"points\" array");
    std::vector<ProjectivePoint> points;
    for (const auto& entry : j["points"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("configuration point must be a coordinate pair");
        points.emplace_back(GaussianRational::from_string(entry[0].get<std::string>()),
                            GaussianRational::from_string(entry[1].get<std::string>()));
    }
    return {n, std::move(points)};
}

Json laurent_plane_to_json(const LaurentPlane& lp) {
    Json rows = Json::array();
    for (const auto& [a, b] : lp.rows()) rows.push_back({a.to_string(), b.to_string()});
    return Json{{"n", lp.n()}, {"rows", std::move(rows)}};
}

LaurentPlane laurent_plane_from_json(const Json& j) {
    const int n = json_n(j);
    if (!j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("family JSON needs a \"rows\" array");
    std::vector<LaurentPlane::Row> rows;
    for (const auto& row : j["rows"]) {
        if (!row.is_array() || row.size() != 2)
            throw std::invalid_argument("family row must be a [a, b] pair of Laurent scalars");
        LaurentScalar a = LaurentScalar::from_string(row[0].get<std::string>());
        LaurentScalar b = LaurentScalar::from_string(row[1].get<std::string>());
        for (const auto* s : {&a, &b}) {
            const auto v = s->valuation();
            if (v && *v < 0)
                throw std::invalid_argument("family entries must be polynomials in t");
        }
        rows.emplace_back(std::move(a), std::move(b));
    }
    return {n, std::move(rows)};
}

Signature signature_from_flag(int n, const std::string& text) {
    std::set<IndexPair> vanishing;
    if (!text.empty()) {
        std::istringstream stream(text);
        std::string pair_text;
        while (std::getline(stream, pair_text, ';')) {
            const auto comma = pair_text.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("signature pair needs two comma-separated indices");
            const int i = std::stoi(pair_text.substr(0, comma));
            const int j = std::stoi(pair_text.substr(comma + 1));
            vanishing.insert(ordered_pair(i, j));
        }
    }
    return {n, std::move(vanishing)};
}

}  // namespace gr2
