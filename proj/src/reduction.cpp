#include "sepkit/reduction.hpp"

#include <algorithm>
#include <cassert>

namespace sepkit {

const std::vector<int>& ReductionOutput::gadget_path(Edge e) const {
    for (const auto& [edge, path] : gadgets)
        if (edge == e) return path;
    throw domain_error("no gadget for edge {" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + "}");
}

ReductionOutput build_reduction(const Graph& g, int k) {
    if (k < 3) throw domain_error("reduction requires k >= 3");
    if (g.edge_count() == 0) throw domain_error("reduction requires at least one edge");
    ReductionOutput r;
    r.source = g;
    r.k = k;
    r.original_count = g.vertex_count();
    EdgeSet target_edges = g.edges();  // source edges preserved
    int next = g.vertex_count();
    for (auto e : g.edges()) {
        std::vector<int> path(k);
        for (int p = 0; p < k; ++p) path[p] = next++;
        target_edges.push_back(make_edge(e.first, path.front()));
        for (int p = 0; p + 1 < k; ++p) target_edges.push_back(make_edge(path[p], path[p + 1]));
        target_edges.push_back(make_edge(path.back(), e.second));
        r.gadgets.emplace_back(e, std::move(path));
    }
    r.target = Graph(next, target_edges);
    // size formulas hold on every instance
    if (r.target.vertex_count() !=
            g.vertex_count() + k * int(g.edge_count()) ||
        r.target.edge_count() != std::int64_t(k + 2) * g.edge_count())
        throw invariant_violation("reduction size formulas violated");
    return r;
}

OneChordWitness forward_witness(const ReductionOutput& r, const InducedCycleWitness& cycle) {
    if (!is_valid_induced_cycle_witness(r.source, cycle))
        throw domain_error("not a valid induced cycle in the source graph");
    // pick the lexicographically least cycle edge as the chord
    const int len = cycle.size();
    int chord_pos = -1;
    Edge chord{-1, -1};
    for (int i = 0; i < len; ++i) {
        Edge e = make_edge(cycle.cycle[i], cycle.cycle[(i + 1) % len]);
        if (chord_pos < 0 || e < chord) {
            chord = e;
            chord_pos = i;
        }
    }
    // walk the cycle so it starts with the chord edge, then splice the
    // chord's gadget path in place of the direct edge
    std::vector<int> order;
    int from = cycle.cycle[chord_pos];
    int to = cycle.cycle[(chord_pos + 1) % len];
    order.push_back(from);
    const auto& path = r.gadget_path(chord);
    if (chord.first == from)
        order.insert(order.end(), path.begin(), path.end());
    else
        order.insert(order.end(), path.rbegin(), path.rend());
    order.push_back(to);
    for (int i = 2; i < len; ++i) order.push_back(cycle.cycle[(chord_pos + i) % len]);
    OneChordWitness w;
    w.cycle = canonicalize_cycle(std::move(order));
    w.chord = chord;
    if (!is_valid_one_chord_witness(r.target, w))
        throw invariant_violation("forward witness failed revalidation");
    return w;
}

InducedCycleWitness extract_cycle_from_one_chord(const ReductionOutput& r,
                                                 const OneChordWitness& w) {
    if (!is_valid_one_chord_witness(r.target, w))
        throw domain_error("not a valid one-chord witness in the target graph");
    if (w.size() < 2 * r.k)
        throw domain_error("witness smaller than 2k");
    // gadget dichotomy: each gadget path is fully inside or fully outside
    std::vector<bool> member(r.target.vertex_count(), false);
    for (int x : w.cycle) member[x] = true;
    for (const auto& [edge, path] : r.gadgets) {
        int inside = 0;
        for (int x : path) inside += member[x];
        if (inside != 0 && inside != int(path.size()))
            throw invariant_violation("gadget partially covered by one-chord witness");
    }
    // split the chorded cycle into its two induced cycles
    const int n = w.size();
    int pu = -1, pv = -1;
    for (int i = 0; i < n; ++i) {
        if (w.cycle[i] == w.chord.first) pu = i;
        if (w.cycle[i] == w.chord.second) pv = i;
    }
    assert(pu >= 0 && pv >= 0);
    if (pu > pv) std::swap(pu, pv);
    std::vector<std::vector<int>> halves(2);
    for (int i = pu; i <= pv; ++i) halves[0].push_back(w.cycle[i]);
    for (int i = pv; i != pu; i = (i + 1) % n) halves[1].push_back(w.cycle[i]);
    halves[1].push_back(w.cycle[pu]);

    // contract full gadget runs back to source edges; gadget vertices are the
    // ids at original_count and above
    std::optional<InducedCycleWitness> best;
    for (const auto& half : halves) {
        std::vector<int> contracted;
        for (int x : half)
            if (x < r.original_count) contracted.push_back(x);
        if (int(contracted.size()) < 3) continue;  // the chord-gadget cycle degenerates
        InducedCycleWitness cand;
        cand.cycle = canonicalize_cycle(std::move(contracted));
        if (!is_valid_induced_cycle_witness(r.source, cand))
            throw invariant_violation("contracted half is not an induced source cycle");
        if (!best || cand.size() > best->size()) best = std::move(cand);
    }
    if (!best || best->size() < r.k)
        throw invariant_violation("no source cycle of size k recoverable from witness");
    return *best;
}

ReductionCheck verify_reduction(const Graph& g, int k, const SearchBudget& budget) {
    if (k < 3) throw domain_error("reduction requires k >= 3");
    ReductionCheck check;
    check.k = k;
    check.lhs = max_induced_cycle(g, k, budget).has_value();
    if (g.edge_count() == 0) {
        // no edges: no target instance, and no induced cycle either
        check.rhs = false;
        check.consistent = (check.lhs == check.rhs);
        return check;
    }
    auto r = build_reduction(g, k);
    check.rhs = max_one_chord_subgraph(r.target, 2 * k, budget).has_value();
    check.consistent = (check.lhs == check.rhs);
    return check;
}

}  // namespace sepkit
