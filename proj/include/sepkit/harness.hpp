#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>

#include "sepkit/reduction.hpp"

namespace sepkit {

// ---------------------------------------------------------------------------
// Deterministic graph generators.

struct GeneratorSpec {
    enum class Kind {
        random_gnp,
        tree_random,
        cycle,
        complete,
        path,
        chordal_random,
        star,
        petersen,
    };

    Kind kind = Kind::random_gnp;
    int n = 1;
    double p = 0.5;           // random_gnp only
    std::uint64_t seed = 0;   // random_gnp, tree_random, chordal_random
};

GeneratorSpec::Kind generator_kind_from_string(const std::string& name);
std::string to_string(GeneratorSpec::Kind kind);

// Same spec always yields the identical graph.
Graph generate(const GeneratorSpec& spec);

// ---------------------------------------------------------------------------
// Exhaustive small-graph enumeration (labeled).

// Number of labeled-graph edge masks on n vertices: 2^C(n,2).
std::uint64_t graph_mask_space(int n);

Graph graph_from_mask(int n, std::uint64_t mask);

// Stream every connected labeled graph on n vertices (1 <= n <= 8) exactly
// once; visit returns false to stop early. Returns the number visited. With
// dedup_canonical (n <= 6) only lexicographically-least representatives per
// isomorphism class are yielded.
long long enumerate_connected_graphs(int n, const std::function<bool(const Graph&)>& visit,
                                     bool dedup_canonical = false);

// Mask-range sweep used by the suite runner's worker pool; connected_only
// filters to connected graphs.
long long enumerate_graph_masks(int n, std::uint64_t lo, std::uint64_t hi, bool connected_only,
                                const std::function<bool(const Graph&)>& visit);

// ---------------------------------------------------------------------------
// Brute-force oracles. These are the references the fast paths are judged
// against; they share no search code with the implementations they check.

// All subsets of V \ {a,b} that separate a from b with no separating proper
// subset. Requires n <= 15.
std::vector<VertexSet> brute_force_minimal_separators(const Graph& g, int a, int b);

// Definitional minimality: S separates and every proper subset fails to.
bool brute_force_is_minimal_vertex_separator(const Graph& g, int a, int b, const VertexSet& s);

// All subsets of E that separate a from b with no separating proper subset.
// Requires |E| <= 20.
std::vector<EdgeSet> brute_force_minimal_edge_separators(const Graph& g, int a, int b);

// Smallest set whose removal disconnects the graph or leaves one vertex.
int brute_force_vertex_connectivity(const Graph& g);

// Definition-based recognition: some edge deletion leaves a spanning cycle.
bool definitional_is_one_chord_graph(const Graph& h);

// Subset-scan optima (sizes only). Require n <= 24.
std::optional<int> brute_force_max_one_chord_size(const Graph& g);
std::optional<int> brute_force_max_induced_cycle_size(const Graph& g);

// ---------------------------------------------------------------------------
// Suite runner.

struct Failure {
    std::string graph;   // edge-list text
    std::string detail;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    long long instances_checked = 0;
    std::vector<Failure> failures;  // sorted by graph text, capped
    std::map<std::string, double> timings_ms;

    bool pass() const { return failures.empty(); }
};

struct SuiteConfig {
    int n_max = 6;
    std::uint64_t seed = 1;
    int jobs = 1;       // worker threads for exhaustive sweeps
    bool fail_fast = false;  // sequential scan, stop at first counterexample
    int failure_cap = 100;
    int random_instances = 200;        // reduction / oracle_agreement random phases
    std::vector<int> k_values = {3, 4};        // reduction, exhaustive phase
    std::vector<int> k_values_random = {3, 4, 5};
};

const std::vector<std::string>& suite_names();

// suite in {theorem2, theorem4, lemma3, lemma4, dirac, reduction,
// oracle_agreement}; unknown names raise domain_error.
Report run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace sepkit
