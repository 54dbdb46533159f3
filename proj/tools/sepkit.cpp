#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sepkit/json_io.hpp"

namespace {

using sepkit::Json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw sepkit::domain_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

sepkit::SearchBudget make_budget(double budget_ms, std::int64_t budget_nodes) {
    sepkit::SearchBudget budget;
    if (budget_ms > 0) {
        budget.max_ms = budget_ms;
    } else if (const char* env = std::getenv("SEPKIT_BUDGET_MS")) {
        try {
            double ms = std::stod(env);
            if (ms > 0) budget.max_ms = ms;
        } catch (...) {
            throw sepkit::domain_error("SEPKIT_BUDGET_MS must be a number");
        }
    }
    if (budget_nodes > 0) budget.max_nodes = budget_nodes;
    return budget;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sepkit: exact analysis of minimal vertex and edge separators"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::string file = "-";
    double budget_ms = 0;
    std::int64_t budget_nodes = 0;

    auto add_budget_flags = [&](CLI::App* sub) {
        sub->add_option("--budget-ms", budget_ms, "time budget for exact searches (ms)");
        sub->add_option("--budget-nodes", budget_nodes, "node budget for exact searches");
    };

    // profile
    auto* profile = app.add_subcommand("profile", "structural profile of a graph");
    profile->add_option("file", file, "edge-list file, - for stdin");
    profile->callback([&] {
        auto g = sepkit::parse_graph(read_input(file));
        emit(sepkit::to_json(sepkit::structural_profile(g)));
    });

    // separators
    auto* separators =
        app.add_subcommand("separators", "minimal separators for a vertex pair");
    separators->validate_positionals();
    std::vector<int> pair;
    bool edges_mode = false;
    separators->add_option("--pair", pair, "the two endpoint ids")
        ->expected(2)
        ->allow_extra_args(false)
        ->required();
    separators->add_flag("--edges", edges_mode, "edge separators instead of vertex separators");
    separators->add_option("file", file, "edge-list file, - for stdin");
    separators->callback([&] {
        auto g = sepkit::parse_graph(read_input(file));
        Json out = Json::array();
        if (edges_mode) {
            for (const auto& rec :
                 sepkit::enumerate_minimal_ab_edge_separators(g, pair[0], pair[1]).records)
                out.push_back(sepkit::to_json(rec));
        } else {
            for (const auto& rec :
                 sepkit::enumerate_minimal_ab_separators(g, pair[0], pair[1]).records)
                out.push_back(sepkit::to_json(rec));
        }
        emit(out);
    });

    // check
    auto* check = app.add_subcommand("check", "decide a graph property, with witness");
    std::string property;
    check
        ->add_option("--property", property, "one of one-chord-free, separators-stable, "
                                             "matching-edge-seps, tree, chordal")
        ->required()
        ->check(CLI::IsMember({"one-chord-free", "separators-stable", "matching-edge-seps",
                               "tree", "chordal"}));
    check->add_option("file", file, "edge-list file, - for stdin");
    add_budget_flags(check);
    check->callback([&] {
        auto g = sepkit::parse_graph(read_input(file));
        auto budget = make_budget(budget_ms, budget_nodes);
        Json out{{"property", property}};
        bool holds = true;
        Json witness;
        if (property == "one-chord-free") {
            if (auto w = sepkit::find_induced_one_chord(g, budget)) {
                holds = false;
                witness = sepkit::to_json(*w);
            }
        } else if (property == "separators-stable") {
            auto res = sepkit::all_minimal_separators(g);
            holds = res.all_stable;
            if (res.witness) witness = sepkit::to_json(*res.witness);
        } else if (property == "matching-edge-seps") {
            auto res = sepkit::matching_edge_separator_property(g);
            holds = res.holds;
            if (res.witness) witness = sepkit::to_json(*res.witness);
        } else if (property == "tree") {
            holds = sepkit::structural_profile(g).is_tree;
            if (!holds && sepkit::is_connected(g)) {
                // witness is best effort; the verdict stands without one
                try {
                    if (auto w = sepkit::max_induced_cycle(g, 3, budget))
                        witness = sepkit::to_json(*w);
                } catch (const sepkit::resource_error&) {
                }
            }
        } else {  // chordal
            if (auto w = sepkit::max_induced_cycle(g, 4, budget)) {
                holds = false;
                witness = sepkit::to_json(*w);
            }
        }
        out["holds"] = holds;
        out["witness"] = witness.is_null() ? Json(nullptr) : witness;
        emit(out);
        exit_code = holds ? 0 : 1;
    });

    // contractible
    auto* contractible = app.add_subcommand("contractible", "Saito edge-contractibility report");
    contractible->add_option("file", file, "edge-list file, - for stdin");
    contractible->callback([&] {
        auto g = sepkit::parse_graph(read_input(file));
        emit(sepkit::to_json(sepkit::contractible_edges(g)));
    });

    // max
    auto* max_cmd = app.add_subcommand("max", "exact maximum one-chord subgraph or induced cycle");
    std::string target;
    int at_least = 0;
    max_cmd->add_option("--target", target, "one-chord or induced-cycle")
        ->required()
        ->check(CLI::IsMember({"one-chord", "induced-cycle"}));
    max_cmd->add_option("--at-least", at_least, "stop at any witness of this size");
    max_cmd->add_option("file", file, "edge-list file, - for stdin");
    add_budget_flags(max_cmd);
    max_cmd->callback([&] {
        auto g = sepkit::parse_graph(read_input(file));
        auto budget = make_budget(budget_ms, budget_nodes);
        std::optional<int> threshold;
        if (at_least > 0) threshold = at_least;
        Json out{{"target", target}};
        out["at_least"] = threshold ? Json(*threshold) : Json(nullptr);
        bool found = false;
        if (target == "one-chord") {
            if (auto w = sepkit::max_one_chord_subgraph(g, threshold, budget)) {
                found = true;
                out["size"] = w->size();
                out["witness"] = sepkit::to_json(*w);
            }
        } else {
            if (auto w = sepkit::max_induced_cycle(g, threshold, budget)) {
                found = true;
                out["size"] = w->size();
                out["witness"] = sepkit::to_json(*w);
            }
        }
        out["found"] = found;
        if (!found) {
            out["size"] = Json(nullptr);
            out["witness"] = Json(nullptr);
        }
        emit(out);
        exit_code = found ? 0 : 1;
    });

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build the induced-cycle to one-chord gadget");
    int k = 3;
    reduce->add_option("--k", k, "gadget path length (>= 3)")->required();
    reduce->add_option("file", file, "edge-list file, - for stdin");
    reduce->callback([&] {
        auto g = sepkit::parse_graph(read_input(file));
        emit(sepkit::to_json(sepkit::build_reduction(g, k)));
    });

    // verify-reduction
    auto* verify = app.add_subcommand("verify-reduction", "check the reduction iff on an instance");
    verify->add_option("--k", k, "gadget path length (>= 3)")->required();
    verify->add_option("file", file, "edge-list file, - for stdin");
    add_budget_flags(verify);
    verify->callback([&] {
        auto g = sepkit::parse_graph(read_input(file));
        auto check_result = sepkit::verify_reduction(g, k, make_budget(budget_ms, budget_nodes));
        emit(sepkit::to_json(check_result));
        exit_code = check_result.consistent ? 0 : 1;
    });

    // suite
    auto* suite = app.add_subcommand("suite", "run a verification suite");
    std::string suite_name;
    sepkit::SuiteConfig config;
    suite->add_option("--name", suite_name, "suite name")
        ->required()
        ->check(CLI::IsMember(sepkit::suite_names()));
    suite->add_option("--n-max", config.n_max, "largest vertex count to sweep");
    suite->add_option("--seed", config.seed, "seed for randomized phases");
    suite->add_option("--jobs", config.jobs, "worker threads");
    suite->add_flag("--fail-fast", config.fail_fast, "stop at the first counterexample");
    suite->add_option("--random-instances", config.random_instances,
                      "instances for randomized phases");
    suite->callback([&] {
        auto rep = sepkit::run_suite(suite_name, config);
        emit(sepkit::to_json(rep));
        exit_code = rep.pass() ? 0 : 1;
    });

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph as edge-list text");
    sepkit::GeneratorSpec spec;
    std::string kind_name;
    gen->add_option("--kind", kind_name, "generator kind")->required();
    gen->add_option("--n", spec.n, "vertex count")->required();
    gen->add_option("--p", spec.p, "edge probability (random_gnp)");
    gen->add_option("--seed", spec.seed, "generator seed");
    gen->callback([&] {
        spec.kind = sepkit::generator_kind_from_string(kind_name);
        std::cout << sepkit::format_graph(sepkit::generate(spec));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sepkit::resource_error& e) {
        emit(Json{{"error", "budget-exceeded"}, {"detail", e.what()}});
        std::cerr << "sepkit: " << e.what() << "\n";
        return 3;
    } catch (const sepkit::parse_error& e) {
        std::cerr << "sepkit: parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "sepkit: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
