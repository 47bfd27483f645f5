#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gr2/degeneration.hpp"
#include "gr2/gm_config.hpp"
#include "gr2/param_space.hpp"
#include "gr2/reference.hpp"
#include "gr2/serialize.hpp"

namespace py = pybind11;

namespace {

// The bindings speak strings: every scalar crosses the boundary in the same
// exact textual format the CLI uses, so nothing is ever rounded.

gr2::Plane plane_from_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<gr2::Plane::Row> parsed;
    parsed.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != 2) throw std::invalid_argument("each row needs exactly two entries");
        parsed.emplace_back(gr2::GaussianRational::from_string(row[0]),
                            gr2::GaussianRational::from_string(row[1]));
    }
    return {static_cast<int>(rows.size()), std::move(parsed)};
}

gr2::Signature signature_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::set<gr2::IndexPair> vanishing;
    for (const auto& [i, j] : pairs) vanishing.insert(gr2::ordered_pair(i, j));
    return {n, std::move(vanishing)};
}

}  // namespace

PYBIND11_MODULE(pygr2, m) {
    m.doc() = "Exact torus-action combinatorics on the Grassmannian of 2-planes";

    m.def("plucker", [](const std::vector<std::vector<std::string>>& rows) {
        std::map<std::pair<int, int>, std::string> out;
        for (const auto& [pair, value] : gr2::plucker_of(plane_from_rows(rows)).coords())
            out[pair] = value.to_string();
        return out;
    });

    m.def("plucker_relations_hold", [](const std::vector<std::vector<std::string>>& rows) {
        return gr2::check_plucker_relations(gr2::plucker_of(plane_from_rows(rows)));
    });

    m.def("signature", [](const std::vector<std::vector<std::string>>& rows) {
        std::vector<std::pair<int, int>> out;
        for (const auto& pair : gr2::signature_of(gr2::plucker_of(plane_from_rows(rows))).vanishing())
            out.push_back(pair);
        return out;
    });

    m.def("moment_map", [](const std::vector<std::vector<std::string>>& rows) {
        std::vector<std::string> out;
        for (const auto& x : gr2::moment_map(gr2::plucker_of(plane_from_rows(rows))).coords())
            out.push_back(gr2::to_string(x));
        return out;
    });

    m.def("cross_ratio", [](const std::vector<std::vector<std::string>>& rows, int i, int j, int k,
                            int l) {
        return gr2::evaluate_cross_ratio(gr2::plucker_of(plane_from_rows(rows)),
                                         gr2::Tuple4(i, j, k, l))
            .to_string();
    });

    m.def("z_coordinates", [](const std::vector<std::vector<std::string>>& rows) {
        std::vector<std::string> out;
        for (const auto& z : gr2::z_coordinates(gr2::plucker_of(plane_from_rows(rows))))
            out.push_back(z.to_string());
        return out;
    });

    m.def("stratum_census", [](int n) {
        return static_cast<int>(gr2::enumerate_strata(n).size());
    });

    m.def("enumerate_strata", [](int n) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& sig : gr2::enumerate_strata(n)) {
            std::vector<std::pair<int, int>> pairs;
            for (const auto& pair : sig.vanishing()) pairs.push_back(pair);
            out.push_back(std::move(pairs));
        }
        return out;
    });

    m.def("is_admissible", [](int n, const std::vector<std::pair<int, int>>& pairs) {
        return gr2::is_admissible(signature_from_pairs(n, pairs));
    });

    m.def("virtual_space", [](int n, const std::vector<std::pair<int, int>>& pairs) {
        const auto description = gr2::virtual_space_of(signature_from_pairs(n, pairs));
        return gr2::virtual_space_to_json(description).dump();
    });

    m.def("limit_point", [](const std::vector<std::vector<std::string>>& rows) {
        std::vector<gr2::LaurentPlane::Row> parsed;
        parsed.reserve(rows.size());
        for (const auto& row : rows) {
            if (row.size() != 2) throw std::invalid_argument("each row needs exactly two entries");
            parsed.emplace_back(gr2::LaurentScalar::from_string(row[0]),
                                gr2::LaurentScalar::from_string(row[1]));
        }
        const gr2::LaurentPlane family(static_cast<int>(rows.size()), std::move(parsed));
        const auto report = gr2::limit_point(family);
        std::vector<std::pair<int, int>> vanishing;
        for (const auto& pair : report.limit_signature.vanishing()) vanishing.push_back(pair);
        std::vector<std::string> values;
        for (const auto& [key, value] : report.limit_tuple.values())
            values.push_back(value.to_string());
        return py::make_tuple(vanishing, values, report.member_of_virtual_space);
    });

    m.def("paper_check", [](const std::string& name) {
        if (name != "g42" && name != "g52") throw std::invalid_argument("case must be g42 or g52");
        const auto result = name == "g42" ? gr2::reference_check_g42() : gr2::reference_check_g52();
        return result.passed;
    });
}
