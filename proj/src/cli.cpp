#include "gr2/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gr2/reference.hpp"
#include "gr2/sampling.hpp"
#include "gr2/serialize.hpp"

namespace gr2::cli {

namespace {

std::string signature_flag_text(const Signature& sig) {
    std::string out;
    for (const auto& [i, j] : sig.vanishing()) {
        if (!out.empty()) out += ";";
        out += std::to_string(i) + "," + std::to_string(j);
    }
    return out.empty() ? "(main)" : out;
}

struct ClassificationCounts {
    int strong = 0;
    int weak = 0;
    int non_admissible = 0;
};

ClassificationCounts count_classifications(const Signature& sig) {
    ClassificationCounts counts;
    for (const auto& key : all_tuples(sig.n())) {
        const auto cls = classify_cross_ratio(sig, Tuple4(key[0], key[1], key[2], key[3]));
        if (cls.is_strong())
            ++counts.strong;
        else if (cls.is_weak())
            ++counts.weak;
        else
            ++counts.non_admissible;
    }
    return counts;
}

int cmd_enumerate(int n, bool as_json, std::ostream& out) {
    const auto strata = enumerate_strata(n);
    Json rows = Json::array();
    for (const auto& sig : strata) {
        const auto poly = admissible_polytope(sig);
        const auto stabilizer = stabilizer_lattice(sig);
        const auto counts = count_classifications(sig);
        if (as_json) {
            Json row = signature_to_json(sig);
            row["dim"] = poly.dim();
            row["vertex_count"] = static_cast<int>(poly.vertices().size());
            row["stabilizer_rank"] = stabilizer.rank();
            row["strong"] = counts.strong;
            row["weak"] = counts.weak;
            row["non_admissible"] = counts.non_admissible;
            rows.push_back(std::move(row));
        } else {
            out << signature_flag_text(sig) << "  dim=" << poly.dim()
                << " vertices=" << poly.vertices().size() << " stab_rank=" << stabilizer.rank()
                << " strong=" << counts.strong << " weak=" << counts.weak
                << " nonadm=" << counts.non_admissible << "\n";
        }
    }
    if (as_json) {
        out << Json{{"n", n}, {"count", static_cast<int>(strata.size())}, {"strata", std::move(rows)}}
                   .dump()
            << "\n";
    } else {
        out << "total: " << strata.size() << " strata\n";
    }
    return 0;
}

int cmd_classify(int n, const std::string& signature_text, bool as_json, std::ostream& out) {
    const Signature sig = signature_from_flag(n, signature_text);
    const bool admissible = is_admissible(sig);
    Json report = signature_to_json(sig);
    report["admissible"] = admissible;
    if (admissible) {
        const auto structure = *parallel_structure_of(sig);
        Json zero_rows = Json::array();
        for (int z : structure.zero_rows()) zero_rows.push_back(z);
        Json classes = Json::array();
        for (const auto& cls : structure.classes()) classes.push_back(cls);
        report["zero_rows"] = std::move(zero_rows);
        report["classes"] = std::move(classes);
        report["polytope"] = polytope_to_json(admissible_polytope(sig));
        report["stabilizer_rank"] = stabilizer_lattice(sig).rank();
        Json tuples = Json::array();
        for (const auto& key : all_tuples(n)) {
            const auto cls = classify_cross_ratio(sig, Tuple4(key[0], key[1], key[2], key[3]));
            std::string kind = cls.is_strong() ? "strong" : cls.is_weak() ? "weak" : "non-admissible";
            Json entry{{"tuple", {key[0], key[1], key[2], key[3]}}, {"kind", std::move(kind)}};
            if (cls.is_weak()) entry["forced"] = cls.forced->to_string();
            tuples.push_back(std::move(entry));
        }
        report["cross_ratios"] = std::move(tuples);
        report["virtual_space"] = virtual_space_to_json(virtual_space_of(sig));
    }
    if (as_json) {
        out << report.dump() << "\n";
    } else {
        out << "signature " << signature_flag_text(sig) << " over [1," << n << "]\n";
        out << "admissible: " << (admissible ? "yes" : "no") << "\n";
        if (admissible) {
            out << "zero rows: " << report["zero_rows"].dump()
                << "  classes: " << report["classes"].dump() << "\n";
            out << "polytope dim " << report["polytope"]["dim"] << " with "
                << report["polytope"]["vertices"].size() << " vertices; stabilizer rank "
                << report["stabilizer_rank"] << "\n";
            out << "virtual space: " << report["virtual_space"].dump() << "\n";
        }
    }
    return 0;
}

int cmd_limit(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
    std::ifstream file(path);
    if (!file) {
        err << "cannot open family file: " << path << "\n";
        return 2;
    }
    LimitReport report = [&] {
        try {
            Json j = Json::parse(file);
            return limit_point(laurent_plane_from_json(j));
        } catch (const Json::exception& e) {
            throw std::invalid_argument(std::string("family file is not valid JSON: ") + e.what());
        }
    }();
    if (as_json) {
        Json j{{"limit_signature", signature_to_json(report.limit_signature)},
               {"limit_tuple", cross_tuple_to_json(report.limit_tuple)},
               {"member_of_virtual", report.member_of_virtual_space}};
        out << j.dump() << "\n";
    } else {
        out << "limit signature: " << signature_flag_text(report.limit_signature) << "\n";
        out << "limit tuple:";
        for (const auto& [key, value] : report.limit_tuple.values()) out << " " << value.to_string();
        out << "\n";
        out << "member of limit virtual space: " << (report.member_of_virtual_space ? "yes" : "no")
            << "\n";
    }
    return report.member_of_virtual_space ? 0 : 1;
}

struct SuiteOutcome {
    long checks = 0;
    long failures = 0;
    void require(bool ok) {
        ++checks;
        if (!ok) ++failures;
    }
};

void suite_plucker(int n, int samples, Rng& rng, SuiteOutcome& outcome) {
    for (int s = 0; s < samples; ++s)
        outcome.require(check_plucker_relations(plucker_of(random_plane(n, rng))));
}

void suite_identities(int n, int samples, Rng& rng, SuiteOutcome& outcome) {
    for (int s = 0; s < samples; ++s) {
        const auto report = identity_suite(plucker_of(random_main_stratum_plane(n, rng)));
        outcome.require(report.all_passed());
    }
}

void suite_theorem6(int n, SuiteOutcome& outcome) {
    // Every two-class structure with no zero rows: product-of-simplices
    // vertex set, dimension n - 2, and wall value 1 on every vertex.
    for (unsigned mask = 1; mask + 1 < (1u << (n - 1)); ++mask) {
        std::vector<int> first{1};
        std::vector<int> second;
        for (int i = 2; i <= n; ++i) {
            if (mask & (1u << (i - 2)))
                first.push_back(i);
            else
                second.push_back(i);
        }
        if (second.empty()) continue;
        const ParallelStructure structure(n, {}, {first, second});
        const auto form = theorem6_form(structure);
        outcome.require(form.has_value());
        if (!form) continue;
        const auto poly = admissible_polytope(structure.signature());
        outcome.require(poly.dim() == n - 2);
        std::set<IndexPair> expected;
        for (int i : first)
            for (int j : second) expected.insert(ordered_pair(i, j));
        outcome.require(poly.vertices() == expected);
        bool walls = true;
        for (const auto& v : poly.vertices()) walls = walls && form->evaluate_vertex(v) == 1;
        outcome.require(walls);
    }
}

void suite_orbit(int n, int samples, Rng& rng, SuiteOutcome& outcome) {
    for (int s = 0; s < samples; ++s) {
        const auto pv = plucker_of(random_plane(n, rng));
        const auto t = random_torus_element(n, rng);
        const auto moved = torus_act(t, pv);
        outcome.require(same_orbit(pv, moved));
        const auto recovered = reconstruct_torus(pv, moved);
        outcome.require(recovered.has_value() &&
                        torus_act(*recovered, pv).projectively_equal(moved));

        // Break ratio consistency at one coordinate. {1,3} occurs inside the
        // cross-ratio formulas ({1,2} and {n-1,n} never do), so on a
        // main-stratum vector the change is visible to both oracles.
        const auto mpv = plucker_of(random_main_stratum_plane(n, rng));
        auto coords = torus_act(random_torus_element(n, rng), mpv).coords();
        coords[{1, 3}] *= GaussianRational(2);
        const PluckerVector perturbed(n, std::move(coords));
        outcome.require(!same_orbit(mpv, perturbed));
        outcome.require(!reconstruct_torus(mpv, perturbed).has_value());
    }
}

void suite_momentmap(int n, int samples, Rng& rng, SuiteOutcome& outcome, std::ostream& out) {
    for (int s = 0; s < samples; ++s) {
        const auto point = moment_map(plucker_of(random_plane(n, rng)));
        Rational sum = make_rational(0);
        bool box = true;
        for (const auto& x : point.coords()) {
            sum += x;
            box = box && x >= 0 && x <= 1;
        }
        outcome.require(box && sum == 2);
    }
    const auto strata = enumerate_strata(n);
    const size_t limit = n <= 6 ? strata.size() : 500;
    out << "relative-interior witnesses over " << std::min(limit, strata.size()) << " of "
        << strata.size() << " strata\n";
    for (size_t i = 0; i < strata.size() && i < limit; ++i) {
        const auto structure = *parallel_structure_of(strata[i]);
        const auto pv = plucker_of(witness_plane(structure, rng.next()));
        outcome.require(in_relative_interior(admissible_polytope(strata[i]), moment_map(pv)));
    }
}

int cmd_verify(const std::string& suite, int n, int samples, std::uint64_t seed, std::ostream& out) {
    Rng rng(seed);
    SuiteOutcome outcome;
    if (suite == "plucker")
        suite_plucker(n, samples, rng, outcome);
    else if (suite == "identities")
        suite_identities(n, samples, rng, outcome);
    else if (suite == "theorem6")
        suite_theorem6(n, outcome);
    else if (suite == "orbit")
        suite_orbit(n, samples, rng, outcome);
    else if (suite == "momentmap")
        suite_momentmap(n, samples, rng, outcome, out);
    out << "suite " << suite << " (n=" << n << ", samples=" << samples << ", seed=" << seed
        << "): " << outcome.checks << " checks, " << outcome.failures << " failures\n";
    return outcome.failures == 0 ? 0 : 1;
}

int cmd_paper_check(const std::string& name, std::ostream& out) {
    const ReferenceCheckResult result = name == "g42" ? reference_check_g42() : reference_check_g52();
    for (const auto& line : result.lines) out << line << "\n";
    out << (result.passed ? "PASS" : "FAIL") << " " << name << "\n";
    return result.passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact torus-action combinatorics on the Grassmannian of 2-planes"};
    app.require_subcommand(1);

    int n = 5;
    bool as_json = false;
    std::string signature_text;
    std::string family_path;
    std::string suite;
    std::string case_name;
    int samples = 50;
    std::uint64_t seed = 12345;

    auto* enumerate = app.add_subcommand("enumerate", "List all strata of G(n,2)");
    enumerate->add_option("--n", n, "ambient dimension, 4..8")->required()->check(CLI::Range(4, 8));
    enumerate->add_flag("--json", as_json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "Run a sampled verification suite");
    verify->add_option("--suite", suite, "plucker|identities|theorem6|orbit|momentmap")
        ->required()
        ->check(CLI::IsMember({"plucker", "identities", "theorem6", "orbit", "momentmap"}));
    verify->add_option("--n", n, "ambient dimension, 4..8")->required()->check(CLI::Range(4, 8));
    verify->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "RNG seed");

    auto* limit = app.add_subcommand("limit", "Limit of a one-parameter family at t=0");
    limit->add_option("--family", family_path, "family JSON file")->required();
    limit->add_flag("--json", as_json, "machine-readable output");

    auto* classify = app.add_subcommand("classify", "Classify one signature");
    classify->add_option("--n", n, "ambient dimension, 4..8")->required()->check(CLI::Range(4, 8));
    classify->add_option("--signature", signature_text,
                         "semicolon-separated pairs, e.g. \"1,2;3,4\"; empty for the main stratum");
    classify->add_flag("--json", as_json, "machine-readable output");

    auto* paper_check = app.add_subcommand("paper-check", "Compare against the published tables");
    paper_check->add_option("--case", case_name, "g42|g52")
        ->required()
        ->check(CLI::IsMember({"g42", "g52"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(n, as_json, out);
        if (verify->parsed()) return cmd_verify(suite, n, samples, seed, out);
        if (limit->parsed()) return cmd_limit(family_path, as_json, out, err);
        if (classify->parsed()) return cmd_classify(n, signature_text, as_json, out);
        if (paper_check->parsed()) return cmd_paper_check(case_name, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace gr2::cli
