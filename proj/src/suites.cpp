#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "sepkit/harness.hpp"

namespace sepkit {

namespace {

using CheckFn = std::function<std::optional<std::string>(const Graph&)>;

struct PhaseResult {
    long long checked = 0;
    std::vector<Failure> failures;
    bool stopped = false;
};

void record_failure(PhaseResult& r, int cap, const Graph& g, const std::string& detail) {
    if (int(r.failures.size()) < cap) r.failures.push_back({format_graph(g), detail});
}

std::optional<std::string> guarded(const CheckFn& check, const Graph& g) {
    try {
        return check(g);
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

// Exhaustive labeled sweep on n vertices. fail_fast scans sequentially and
// stops at the first counterexample; otherwise the mask space is split across
// jobs workers and every graph is checked.
PhaseResult sweep_graphs(int n, bool connected_only, const SuiteConfig& cfg,
                         const CheckFn& check) {
    PhaseResult result;
    const std::uint64_t space = graph_mask_space(n);
    if (cfg.fail_fast || cfg.jobs <= 1 || space < 1024) {
        enumerate_graph_masks(n, 0, space, connected_only, [&](const Graph& g) {
            ++result.checked;
            if (auto detail = guarded(check, g)) {
                record_failure(result, cfg.failure_cap, g, *detail);
                if (cfg.fail_fast) {
                    result.stopped = true;
                    return false;
                }
            }
            return true;
        });
        return result;
    }
    const int jobs = cfg.jobs;
    std::vector<PhaseResult> parts(jobs);
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) {
        std::uint64_t lo = space / jobs * t;
        std::uint64_t hi = (t + 1 == jobs) ? space : space / jobs * (t + 1);
        threads.emplace_back([&, t, lo, hi] {
            enumerate_graph_masks(n, lo, hi, connected_only, [&](const Graph& g) {
                ++parts[t].checked;
                if (auto detail = guarded(check, g))
                    record_failure(parts[t], cfg.failure_cap, g, *detail);
                return true;
            });
        });
    }
    for (auto& th : threads) th.join();
    for (auto& part : parts) {
        result.checked += part.checked;
        result.failures.insert(result.failures.end(), part.failures.begin(),
                               part.failures.end());
    }
    return result;
}

void merge_phase(Report& rep, const std::string& key, const PhaseResult& phase,
                 std::chrono::steady_clock::time_point t0) {
    rep.instances_checked += phase.checked;
    rep.failures.insert(rep.failures.end(), phase.failures.begin(), phase.failures.end());
    rep.timings_ms[key] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool graph_is_complete(const Graph& g) {
    auto n = std::int64_t(g.vertex_count());
    return g.edge_count() == n * (n - 1) / 2;
}

// check functions -----------------------------------------------------------

std::optional<std::string> check_theorem2(const Graph& g) {
    bool one_chord_free = !find_induced_one_chord(g).has_value();
    bool stable = all_minimal_separators(g).all_stable;
    if (one_chord_free == stable) return std::nullopt;
    std::ostringstream out;
    out << "one_chord_free=" << one_chord_free << " all_separators_stable=" << stable;
    return out.str();
}

std::optional<std::string> check_theorem4(const Graph& g) {
    bool holds = matching_edge_separator_property(g).holds;
    bool tree = structural_profile(g).is_tree;
    if (holds == tree) return std::nullopt;
    std::ostringstream out;
    out << "matching_edge_separators=" << holds << " is_tree=" << tree;
    return out.str();
}

std::optional<std::string> check_lemma3(const Graph& g) {
    if (graph_is_complete(g)) return std::nullopt;
    if (g.vertex_count() < 3 || !articulation_points(g).empty()) return std::nullopt;
    if (find_induced_one_chord(g).has_value()) return std::nullopt;
    if (!has_triangle(g)) return std::nullopt;
    return "2-connected non-complete 1-chord-free graph with a triangle";
}

std::optional<std::string> check_lemma4(const Graph& g) {
    auto cuts = articulation_points(g);
    if (cuts.empty()) return std::nullopt;
    if (find_induced_one_chord(g).has_value()) return std::nullopt;
    const int n = g.vertex_count();
    for (int v : cuts) {
        Bitset removed(n);
        removed.set(v);
        Bitset done(n);
        for (int x = 0; x < n; ++x) {
            if (x == v || done.test(x)) continue;
            Bitset comp = component_of(g, x, removed);
            done |= comp;
            VertexSet part = comp.to_vector();
            part.push_back(v);
            std::sort(part.begin(), part.end());
            auto sub = induced_subgraph(g, part);
            if (graph_is_complete(sub.graph)) continue;
            if (find_induced_one_chord(sub.graph).has_value()) {
                std::ostringstream out;
                out << "component plus cut vertex " << v
                    << " is neither complete nor 1-chord free";
                return out.str();
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_dirac(const Graph& g) {
    auto seps = all_minimal_separators(g);
    bool all_cliques = true;
    for (const auto& rec : seps.records) all_cliques = all_cliques && rec.is_clique;
    bool chordal = !max_induced_cycle(g, 4).has_value();
    if (all_cliques == chordal) return std::nullopt;
    std::ostringstream out;
    out << "all_separators_clique=" << all_cliques << " chordal=" << chordal;
    return out.str();
}

std::optional<std::string> check_reduction_instance(const Graph& g, int k) {
    std::optional<ReductionOutput> r;
    if (g.edge_count() > 0) {
        r = build_reduction(g, k);  // size formulas asserted inside
        if (r->target.vertex_count() != g.vertex_count() + k * int(g.edge_count()))
            return "vertex-count formula violated";
        if (r->target.edge_count() != std::int64_t(k + 2) * g.edge_count())
            return "edge-count formula violated";
        for (const auto& [edge, path] : r->gadgets)
            for (int x : path)
                if (r->target.degree(x) != 2) return "gadget vertex degree differs from 2";
        // round trip through the witness maps
        if (auto cycle = max_induced_cycle(g)) {
            auto w = forward_witness(*r, *cycle);
            if (w.size() != cycle->size() + k) return "forward witness size mismatch";
            if (w.size() >= 2 * k) {
                auto back = extract_cycle_from_one_chord(*r, w);
                if (back.size() < k) return "extracted cycle smaller than k";
            }
        }
    }
    auto check = verify_reduction(g, k);
    if (!check.consistent) {
        std::ostringstream out;
        out << "k=" << k << " lhs=" << check.lhs << " rhs=" << check.rhs;
        return out.str();
    }
    // independent subset-scan certification on small targets
    if (r && r->target.vertex_count() <= 14) {
        auto brute = brute_force_max_one_chord_size(r->target);
        bool brute_rhs = brute && *brute >= 2 * k;
        if (brute_rhs != check.rhs) {
            std::ostringstream out;
            out << "k=" << k << " exact-search rhs=" << check.rhs
                << " subset-oracle rhs=" << brute_rhs;
            return out.str();
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_oracle_agreement(const Graph& g, bool lemma2_sweep,
                                                  bool edge_cut_sweep) {
    const int n = g.vertex_count();
    // recognition certificate versus the edge-deletion definition
    if (is_one_chord_graph(g) != definitional_is_one_chord_graph(g))
        return "is_one_chord_graph disagrees with the definitional check";
    // exact searches versus subset scans
    auto brute_chord = brute_force_max_one_chord_size(g);
    auto found = find_induced_one_chord(g);
    if (found.has_value() != brute_chord.has_value())
        return "find_induced_one_chord existence disagrees with subset oracle";
    if (found && !is_valid_one_chord_witness(g, *found))
        return "find_induced_one_chord returned an invalid witness";
    auto max_chord = max_one_chord_subgraph(g);
    if (max_chord.has_value() != brute_chord.has_value() ||
        (max_chord && max_chord->size() != *brute_chord))
        return "max_one_chord_subgraph optimum disagrees with subset oracle";
    if (max_chord && !is_valid_one_chord_witness(g, *max_chord))
        return "max_one_chord_subgraph returned an invalid witness";
    auto brute_cycle = brute_force_max_induced_cycle_size(g);
    auto max_cycle = max_induced_cycle(g);
    if (max_cycle.has_value() != brute_cycle.has_value() ||
        (max_cycle && max_cycle->size() != *brute_cycle))
        return "max_induced_cycle optimum disagrees with subset oracle";
    if (max_cycle && !is_valid_induced_cycle_witness(g, *max_cycle))
        return "max_induced_cycle returned an invalid witness";
    // vertex connectivity: Menger flow versus subset scan
    if (vertex_connectivity(g) != brute_force_vertex_connectivity(g))
        return "vertex_connectivity disagrees with subset oracle";
    // separator enumeration versus the definitional filter
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            auto fast = enumerate_minimal_ab_separators(g, a, b);
            auto brute = brute_force_minimal_separators(g, a, b);
            bool same = fast.records.size() == brute.size();
            for (std::size_t i = 0; same && i < brute.size(); ++i)
                same = fast.records[i].separator == brute[i];
            if (!same) {
                std::ostringstream out;
                out << "pair (" << a << "," << b << "): separator enumeration mismatch";
                return out.str();
            }
        }
    // Lemma-2 minimality versus definitional subset minimality, every
    // separating subset of every pair
    if (lemma2_sweep) {
        std::vector<int> rest;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (g.has_edge(a, b)) continue;
                rest.clear();
                for (int v = 0; v < n; ++v)
                    if (v != a && v != b) rest.push_back(v);
                const std::uint64_t total = std::uint64_t{1} << rest.size();
                for (std::uint64_t mask = 0; mask < total; ++mask) {
                    VertexSet s;
                    for (std::size_t i = 0; i < rest.size(); ++i)
                        if (mask >> i & 1) s.push_back(rest[i]);
                    if (!is_vertex_separator(g, a, b, s)) continue;
                    bool lemma2 = is_minimal_vertex_separator(g, a, b, s);
                    bool definitional = brute_force_is_minimal_vertex_separator(g, a, b, s);
                    if (lemma2 != definitional) {
                        std::ostringstream out;
                        out << "pair (" << a << "," << b << ") set size " << s.size()
                            << ": lemma-2 test=" << lemma2
                            << " definitional test=" << definitional;
                        return out.str();
                    }
                }
            }
    }
    // contractibility classification versus recomputed connectivity
    if (is_connected(g) && !graph_is_complete(g) && n >= 2) {
        auto report = contractible_edges(g);
        for (auto e : g.edges()) {
            bool says_contractible =
                std::binary_search(report.contractible.begin(), report.contractible.end(), e);
            Graph contracted = contract_edge(g, e.first, e.second);
            bool keeps_k = brute_force_vertex_connectivity(contracted) >= report.k;
            if (says_contractible != keeps_k) {
                std::ostringstream out;
                out << "edge (" << e.first << "," << e.second
                    << "): lemma-1 contractible=" << says_contractible
                    << " contracted kappa keeps k=" << keeps_k;
                return out.str();
            }
        }
    }
    // edge-cut enumeration versus the edge-subset oracle
    if (edge_cut_sweep && is_connected(g)) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                auto fast = enumerate_minimal_ab_edge_separators(g, a, b);
                auto brute = brute_force_minimal_edge_separators(g, a, b);
                bool same = fast.records.size() == brute.size();
                for (std::size_t i = 0; same && i < brute.size(); ++i)
                    same = fast.records[i].cut == brute[i];
                if (!same) {
                    std::ostringstream out;
                    out << "pair (" << a << "," << b << "): edge-cut enumeration mismatch";
                    return out.str();
                }
            }
    }
    return std::nullopt;
}

Graph random_connected_graph(std::mt19937_64& rng, int n_lo, int n_hi) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int n = n_lo + int(rng() % std::uint64_t(n_hi - n_lo + 1));
        double p = 0.2 + double(rng() % 60) / 100.0;
        Graph g = generate({GeneratorSpec::Kind::random_gnp, n, p, rng()});
        if (g.edge_count() >= 1 && is_connected(g)) return g;
    }
    throw resource_error("random connected graph sampling failed");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "theorem2", "theorem4", "lemma3", "lemma4", "dirac", "reduction", "oracle_agreement"};
    return names;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
    Report rep;
    rep.suite = name;
    rep.seed = config.seed;
    auto start = std::chrono::steady_clock::now();
    auto run_sweeps = [&](int n_cap, bool connected_only, const CheckFn& check) {
        for (int n = 1; n <= n_cap; ++n) {
            auto t0 = std::chrono::steady_clock::now();
            auto phase = sweep_graphs(n, connected_only, config, check);
            merge_phase(rep, "n" + std::to_string(n) + "_ms", phase, t0);
            if (phase.stopped) break;
        }
    };

    if (name == "theorem2") {
        run_sweeps(config.n_max, true, check_theorem2);
    } else if (name == "theorem4") {
        run_sweeps(config.n_max, true, check_theorem4);
    } else if (name == "lemma3") {
        run_sweeps(config.n_max, true, check_lemma3);
    } else if (name == "lemma4") {
        run_sweeps(config.n_max, true, check_lemma4);
    } else if (name == "dirac") {
        run_sweeps(config.n_max, true, check_dirac);
    } else if (name == "reduction") {
        for (int k : config.k_values) {
            auto check = [k](const Graph& g) { return check_reduction_instance(g, k); };
            run_sweeps(std::min(config.n_max, 5), true, check);
        }
        auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 rng(config.seed);
        PhaseResult phase;
        for (int i = 0; i < config.random_instances && !phase.stopped; ++i) {
            Graph g = random_connected_graph(rng, 3, 7);
            for (int k : config.k_values_random) {
                ++phase.checked;
                if (auto detail = guarded([&](const Graph& gr) {
                        return check_reduction_instance(gr, k);
                    }, g)) {
                    record_failure(phase, config.failure_cap, g, *detail);
                    if (config.fail_fast) {
                        phase.stopped = true;
                        break;
                    }
                }
            }
        }
        merge_phase(rep, "random_ms", phase, t0);
    } else if (name == "oracle_agreement") {
        int cap = std::min(config.n_max, 7);
        for (int n = 1; n <= cap; ++n) {
            auto t0 = std::chrono::steady_clock::now();
            bool lemma2_sweep = n <= 6;
            bool edge_cut_sweep = n <= 5;
            auto phase = sweep_graphs(n, false, config, [&](const Graph& g) {
                return check_oracle_agreement(g, lemma2_sweep, edge_cut_sweep);
            });
            merge_phase(rep, "n" + std::to_string(n) + "_ms", phase, t0);
            if (phase.stopped) break;
        }
        auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 rng(config.seed);
        PhaseResult phase;
        for (int i = 0; i < config.random_instances && !phase.stopped; ++i) {
            Graph g = random_connected_graph(rng, 8, 12);
            ++phase.checked;
            bool edge_cut = g.edge_count() <= 16;
            if (auto detail = guarded([&](const Graph& gr) {
                    return check_oracle_agreement(gr, false, edge_cut);
                }, g)) {
                record_failure(phase, config.failure_cap, g, *detail);
                if (config.fail_fast) phase.stopped = true;
            }
        }
        merge_phase(rep, "random_ms", phase, t0);
    } else {
        throw domain_error("unknown suite '" + name + "'");
    }

    std::sort(rep.failures.begin(), rep.failures.end(), [](const Failure& x, const Failure& y) {
        return x.graph != y.graph ? x.graph < y.graph : x.detail < y.detail;
    });
    if (int(rep.failures.size()) > config.failure_cap) rep.failures.resize(config.failure_cap);
    rep.timings_ms["total_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

}  // namespace sepkit
