#pragma once

#include <map>
#include <optional>

#include "sepkit/graph.hpp"

namespace sepkit {

struct VertexSeparatorRecord {
    int a = -1;
    int b = -1;
    VertexSet separator;
    bool is_minimal = false;
    bool is_stable = false;
    bool is_clique = false;
    VertexSet side_a;  // component of a in G minus separator
    VertexSet side_b;
};

struct EdgeSeparatorRecord {
    int a = -1;
    int b = -1;
    EdgeSet cut;
    bool is_minimal = false;
    bool is_matching = false;
    VertexSet side_a;
    VertexSet side_b;
};

struct ContractibilityReport {
    int k = 0;  // kappa(G)
    EdgeSet contractible;
    EdgeSet non_contractible;
    // one minimum separator containing both endpoints, per blocked edge
    std::map<Edge, VertexSet> blocking_separators;
};

// True iff a and b land in different components of G minus S. Requires
// a != b and neither endpoint inside S.
bool is_vertex_separator(const Graph& g, int a, int b, const VertexSet& s);

// Minimality via the neighbor-in-both-sides characterization: every v in S
// has a neighbor in the component of a and one in the component of b. S must
// already separate a from b.
bool is_minimal_vertex_separator(const Graph& g, int a, int b, const VertexSet& s);

struct SeparatorEnumeration {
    std::vector<VertexSeparatorRecord> records;  // by size, then lexicographic
    bool truncated = false;
};

// Exactly the minimal (a,b) vertex separators. Candidates are neighborhoods
// N(C) of connected sets C containing a with b outside N[C]; the
// neighbor-in-both-sides test filters them. Requires {a,b} not an edge.
SeparatorEnumeration enumerate_minimal_ab_separators(const Graph& g, int a, int b,
                                                     std::optional<int> cap = std::nullopt);

struct AllSeparatorsResult {
    std::vector<VertexSeparatorRecord> records;  // dedup by separator set
    bool all_stable = true;
    std::optional<VertexSeparatorRecord> witness;  // a non-stable record, when any
    bool truncated = false;
};

// Union over all non-adjacent pairs, deduplicated by separator set; each set
// keeps the first witnessing pair in (a,b) lexicographic order.
AllSeparatorsResult all_minimal_separators(const Graph& g,
                                           std::optional<int> cap = std::nullopt);

// Saito classification: edge {u,v} is contractible iff no minimum vertex
// separator contains both u and v. G must be connected and not complete.
ContractibilityReport contractible_edges(const Graph& g);

// All minimum vertex separators (size kappa(G)) of a connected non-complete
// graph, sorted lexicographically.
std::vector<VertexSet> minimum_separators(const Graph& g);

bool is_edge_separator(const Graph& g, int a, int b, const EdgeSet& cut);

// True iff no proper subset of cut separates a from b; equivalently cut is
// the full edge boundary between the components of a and of b in G minus cut
// and those two components cover the rest of each crossing edge.
bool is_minimal_edge_separator(const Graph& g, int a, int b, const EdgeSet& cut);

struct EdgeSeparatorEnumeration {
    std::vector<EdgeSeparatorRecord> records;  // by size, then lexicographic
    bool truncated = false;
};

// Exactly the minimal (a,b) edge separators: boundaries of bipartitions
// V = A ∪ B with a in A, b in B, both sides connected. Requires G connected.
EdgeSeparatorEnumeration enumerate_minimal_ab_edge_separators(
    const Graph& g, int a, int b, std::optional<int> cap = std::nullopt);

struct MatchingSeparatorResult {
    bool holds = true;
    std::optional<EdgeSeparatorRecord> witness;  // first non-matching cut
};

// Does every minimal (a,b) edge separator, over all pairs, induce a matching?
MatchingSeparatorResult matching_edge_separator_property(const Graph& g);

}  // namespace sepkit
