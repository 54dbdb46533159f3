#pragma once

#include <vector>

#include "sepkit/one_chord.hpp"

namespace sepkit {

// Gadget construction turning a maximum-induced-cycle instance (G, k) into a
// maximum-1-chord-subgraph instance (G', 2k): every source edge {vi,vj} gains
// a parallel path of k fresh vertices attached at vi and vj.
struct ReductionOutput {
    Graph source;
    int k = 0;
    Graph target;
    // per source edge, the gadget path ids ordered from the vi side to the vj
    // side (edges in lexicographic order)
    std::vector<std::pair<Edge, std::vector<int>>> gadgets;
    int original_count = 0;  // source ids occupy 0..original_count-1 in target

    const std::vector<int>& gadget_path(Edge e) const;
};

// Requires k >= 3 and at least one source edge. |V'| = |V| + k|E| and
// |E'| = (k+2)|E| are asserted on every construction.
ReductionOutput build_reduction(const Graph& g, int k);

// Lift an induced source cycle to a target one-chord witness: the cycle's
// lexicographically least edge becomes the chord and its gadget path closes
// the larger cycle. Witness size = cycle size + k.
OneChordWitness forward_witness(const ReductionOutput& r, const InducedCycleWitness& cycle);

// Pull a target one-chord witness of size >= 2k back to a source induced
// cycle of size >= k. Each gadget must meet the witness fully or not at all;
// a violation raises invariant_violation.
InducedCycleWitness extract_cycle_from_one_chord(const ReductionOutput& r,
                                                 const OneChordWitness& w);

struct ReductionCheck {
    int k = 0;
    bool lhs = false;  // source has an induced cycle of size >= k
    bool rhs = false;  // target has a one-chord subgraph of size >= 2k
    bool consistent = false;
};

// Both sides decided by exact search; never returns a wrong verdict (budget
// overruns raise resource_error instead).
ReductionCheck verify_reduction(const Graph& g, int k, const SearchBudget& budget = {});

}  // namespace sepkit
