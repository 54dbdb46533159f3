#pragma once

#include <optional>

#include "sepkit/budget.hpp"
#include "sepkit/graph.hpp"
#include "sepkit/separators.hpp"

namespace sepkit {

// An induced cycle of length >= 4 plus exactly one chord. The cycle is stored
// in canonical order: smallest id first, the orientation with the smaller
// second element; the chord has its smaller endpoint first.
struct OneChordWitness {
    std::vector<int> cycle;
    Edge chord{-1, -1};

    int size() const { return int(cycle.size()); }
};

// An induced cycle of length >= 3, canonical order as above.
struct InducedCycleWitness {
    std::vector<int> cycle;

    int size() const { return int(cycle.size()); }
};

struct CharacterizationReport {
    bool one_chord_free = false;
    bool all_separators_stable = false;
    bool theorem2_consistent = false;
    bool lemma3_applicable = false;
    bool lemma3_holds = false;
    bool lemma4_holds = false;
    std::optional<OneChordWitness> one_chord_witness;
    std::optional<VertexSeparatorRecord> non_stable_witness;
};

// Rotate/orient a cyclic vertex sequence into canonical form.
std::vector<int> canonicalize_cycle(std::vector<int> cycle);

// Membership certificate: connected, degree sequence (3,3,2,...,2) with the
// two degree-3 vertices adjacent, and removing the edge between them leaves a
// single spanning cycle. Runs in O(|V|+|E|).
bool is_one_chord_graph(const Graph& h);

// Witness (ids in g) iff g[S] is a one-chord graph.
std::optional<OneChordWitness> induces_one_chord(const Graph& g, const VertexSet& s);

// Exact existence search: chord-anchored backtracking over pairs of induced
// paths between the chord endpoints.
std::optional<OneChordWitness> find_induced_one_chord(const Graph& g,
                                                      const SearchBudget& budget = {});

// Exact maximum (or any witness of size >= at_least, with early exit).
// Ties break to the lexicographically least vertex set.
std::optional<OneChordWitness> max_one_chord_subgraph(const Graph& g,
                                                      std::optional<int> at_least = std::nullopt,
                                                      const SearchBudget& budget = {});

// Exact maximum induced cycle, length >= 3; same search discipline.
std::optional<InducedCycleWitness> max_induced_cycle(const Graph& g,
                                                     std::optional<int> at_least = std::nullopt,
                                                     const SearchBudget& budget = {});

// Witness validity, re-checked from scratch against g.
bool is_valid_one_chord_witness(const Graph& g, const OneChordWitness& w);
bool is_valid_induced_cycle_witness(const Graph& g, const InducedCycleWitness& w);

// One-chord-freeness versus stable separators, plus the two cut-structure
// lemmas, all evaluated on a connected graph by independent code paths.
CharacterizationReport verify_characterizations(const Graph& g,
                                                const SearchBudget& budget = {});

}  // namespace sepkit
