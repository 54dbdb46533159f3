#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/bitset.hpp"
#include "sepkit/errors.hpp"

namespace sepkit {

// Sorted, duplicate-free vertex id list.
using VertexSet = std::vector<int>;

// Unordered edge stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

// Sorted, duplicate-free edge list.
using EdgeSet = std::vector<Edge>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable undirected simple graph over vertex ids 0..n-1.
// Neighbor lists are sorted; for graphs up to kAdjacencyBitsMaxVertices a
// bitset adjacency row per vertex is kept for O(1) membership and for the
// exact searches.
class Graph {
public:
    static constexpr int kAdjacencyBitsMaxVertices = 4096;

    Graph() = default;

    // Validates ids, rejects self-loops, deduplicates repeated edges.
    Graph(int n, const EdgeSet& edges);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }

    bool has_edge(int u, int v) const;

    bool has_adjacency_bits() const { return !bits_.empty(); }
    const Bitset& neighbor_bits(int v) const { return bits_[v]; }

    // Single-word adjacency row; only valid when vertex_count() <= 64.
    std::uint64_t neighbor_word(int v) const { return bits_[v].word(0); }

    EdgeSet edges() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw range_error("vertex id " + std::to_string(v) + " out of range");
    }

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> bits_;
};

// ---------------------------------------------------------------------------
// Edge-list text format: first payload line "n <count>", then "e <u> <v>"
// lines; '#' starts a comment, blank lines are skipped.

Graph parse_graph(const std::string& text);

// Canonical writer: edges with u < v, in lexicographic order.
std::string format_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Structural predicates and subroutines.

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // new id -> original id, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Partition of V(G) into components, ordered by smallest contained id.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Component of v in G minus `removed`; v must not be removed.
Bitset component_of(const Graph& g, int v, const Bitset& removed);

struct SetClassification {
    bool is_stable;
    bool is_clique;
};

// Both flags are true precisely when |S| <= 1.
SetClassification classify_set(const Graph& g, const VertexSet& s);

// True iff no two edges of f share an endpoint. Every member must be an edge of g.
bool is_matching(const Graph& g, const EdgeSet& f);

struct StructuralProfile {
    bool is_connected;
    bool is_tree;
    bool is_complete;
    bool has_triangle;
    int vertex_connectivity;
    std::vector<int> degree_sequence;  // descending
};

StructuralProfile structural_profile(const Graph& g);

// kappa(G): 0 for disconnected or single-vertex graphs, n-1 for complete
// graphs, otherwise the Menger minimum over internally vertex-disjoint path
// counts between non-adjacent pairs.
int vertex_connectivity(const Graph& g);

// Maximum number of internally vertex-disjoint s-t paths; s and t must be
// distinct and non-adjacent. Stops counting at stop_at when given.
int menger_disjoint_paths(const Graph& g, int s, int t, int stop_at = -1);

// Cut vertices, ascending.
std::vector<int> articulation_points(const Graph& g);

bool has_triangle(const Graph& g);

// Contract edge {u,v}: v merges into u, ids above v shift down by one.
Graph contract_edge(const Graph& g, int u, int v);

// Throws range_error unless s is a valid sorted vertex set of g; returns the
// membership bitset (only for graphs with adjacency bits).
Bitset vertex_set_bits(const Graph& g, const VertexSet& s);

}  // namespace sepkit
