#include "sepkit/one_chord.hpp"

#include <algorithm>
#include <cassert>

namespace sepkit {

std::vector<int> canonicalize_cycle(std::vector<int> cycle) {
    const int k = int(cycle.size());
    if (k == 0) return cycle;
    int pos = int(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::vector<int> fwd(k), bwd(k);
    for (int i = 0; i < k; ++i) {
        fwd[i] = cycle[(pos + i) % k];
        bwd[i] = cycle[(pos - i + k) % k];
    }
    return (k > 1 && bwd[1] < fwd[1]) ? bwd : fwd;
}

// ---------------------------------------------------------------------------

bool is_one_chord_graph(const Graph& h) {
    const int n = h.vertex_count();
    if (n < 4 || h.edge_count() != std::int64_t(n) + 1) return false;
    int deg3[2] = {-1, -1};
    int found3 = 0;
    for (int v = 0; v < n; ++v) {
        int d = h.degree(v);
        if (d == 3) {
            if (found3 == 2) return false;
            deg3[found3++] = v;
        } else if (d != 2) {
            return false;
        }
    }
    if (found3 != 2 || !h.has_edge(deg3[0], deg3[1])) return false;
    // Removing the degree-3/degree-3 edge leaves every degree at 2, so a walk
    // that skips that edge is forced after the first step; it must return to
    // the start after exactly n steps.
    std::vector<bool> visited(n, false);
    int cur = deg3[0], prev = -1, steps = 0;
    do {
        if (visited[cur]) return false;
        visited[cur] = true;
        int next = -1;
        for (int w : h.neighbors(cur)) {
            if (w == prev) continue;
            if ((cur == deg3[0] && w == deg3[1]) || (cur == deg3[1] && w == deg3[0])) continue;
            next = w;
            break;
        }
        if (next < 0) return false;
        prev = cur;
        cur = next;
        ++steps;
    } while (cur != deg3[0] && steps <= n);
    return steps == n;
}

std::optional<OneChordWitness> induces_one_chord(const Graph& g, const VertexSet& s) {
    auto sub = induced_subgraph(g, s);
    const Graph& h = sub.graph;
    if (!is_one_chord_graph(h)) return std::nullopt;
    const int n = h.vertex_count();
    int deg3[2] = {-1, -1};
    int found3 = 0;
    for (int v = 0; v < n; ++v)
        if (h.degree(v) == 3) deg3[found3++] = v;
    OneChordWitness w;
    w.chord = make_edge(sub.vertex_map[deg3[0]], sub.vertex_map[deg3[1]]);
    std::vector<int> order;
    int cur = deg3[0], prev = -1;
    do {
        order.push_back(sub.vertex_map[cur]);
        int next = -1;
        for (int x : h.neighbors(cur)) {
            if (x == prev) continue;
            if ((cur == deg3[0] && x == deg3[1]) || (cur == deg3[1] && x == deg3[0])) continue;
            next = x;
            break;
        }
        prev = cur;
        cur = next;
    } while (cur != deg3[0]);
    w.cycle = canonicalize_cycle(std::move(order));
    return w;
}

// ---------------------------------------------------------------------------
// Chord-anchored exact search. A witness with chord {u,v} is two induced u-v
// paths with nonempty interiors, no edges between the interiors, and no
// stray adjacencies into u or v. Paths grow one interior vertex at a time;
// `avail` drops the closed neighborhood of each committed vertex, so every
// partial structure stays induced. The admissible bound is
// |partial| + |avail|.

namespace {

struct ChordSearch {
    const Graph& g;
    std::optional<int> at_least;  // early-exit threshold
    bool existence_only;
    BudgetClock clock;

    int u = -1, v = -1;
    std::vector<int> ia, ib;

    bool done = false;
    bool have_best = false;
    int best_size = 0;
    std::vector<int> best_sorted;
    OneChordWitness best;

    ChordSearch(const Graph& g_, std::optional<int> at_least_, bool existence_,
                const SearchBudget& budget)
        : g(g_), at_least(at_least_), existence_only(existence_), clock(budget) {}

    int prune_below() const {
        if (existence_only) return 4;
        if (at_least) return std::max(4, *at_least);
        return std::max(4, best_size);  // keep ties: lexicographic tie-break
    }

    void complete() {
        int size = 2 + int(ia.size() + ib.size());
        if (size < 4) return;
        std::vector<int> cyc;
        cyc.push_back(u);
        cyc.insert(cyc.end(), ia.begin(), ia.end());
        cyc.push_back(v);
        cyc.insert(cyc.end(), ib.rbegin(), ib.rend());
        if (existence_only || at_least) {
            if (at_least && size < *at_least) return;
            best.cycle = canonicalize_cycle(std::move(cyc));
            best.chord = make_edge(u, v);
            have_best = true;
            done = true;
            return;
        }
        std::vector<int> sorted = cyc;
        std::sort(sorted.begin(), sorted.end());
        if (size < best_size || (size == best_size && !(sorted < best_sorted))) return;
        best_size = size;
        best_sorted = std::move(sorted);
        best.cycle = canonicalize_cycle(std::move(cyc));
        best.chord = make_edge(u, v);
        have_best = true;
    }

    void grow_b(int x, const Bitset& avail) {
        clock.tick();
        if (2 + int(ia.size() + ib.size()) + avail.count() < prune_below()) return;
        Bitset cand = g.neighbor_bits(x) & avail;
        Bitset next_avail = avail;
        next_avail.subtract(g.neighbor_bits(x));
        next_avail.reset(x);
        const Bitset& nu = g.neighbor_bits(u);
        const Bitset& nv = g.neighbor_bits(v);
        for (int w = cand.find_first(); w >= 0 && !done; w = cand.find_next(w + 1)) {
            if (nu.test(w)) continue;  // only the first interior touches u
            ib.push_back(w);
            if (nv.test(w))
                complete();
            else
                grow_b(w, next_avail);
            ib.pop_back();
        }
    }

    void start_b(const Bitset& avail) {
        clock.tick();
        if (2 + int(ia.size()) + avail.count() < prune_below()) return;
        Bitset cand = g.neighbor_bits(u) & avail;
        const Bitset& nv = g.neighbor_bits(v);
        for (int w = cand.find_first(); w >= 0 && !done; w = cand.find_next(w + 1)) {
            ib.push_back(w);
            if (nv.test(w)) {
                complete();
            } else {
                Bitset next_avail = avail;
                next_avail.reset(w);
                grow_b(w, next_avail);
            }
            ib.pop_back();
        }
    }

    void grow_a(int x, const Bitset& avail) {
        clock.tick();
        if (2 + int(ia.size()) + avail.count() < prune_below()) return;
        Bitset cand = g.neighbor_bits(x) & avail;
        Bitset next_avail = avail;
        next_avail.subtract(g.neighbor_bits(x));
        next_avail.reset(x);
        const Bitset& nu = g.neighbor_bits(u);
        const Bitset& nv = g.neighbor_bits(v);
        for (int w = cand.find_first(); w >= 0 && !done; w = cand.find_next(w + 1)) {
            if (nu.test(w)) continue;
            ia.push_back(w);
            if (nv.test(w)) {
                Bitset b_avail = next_avail;
                b_avail.subtract(g.neighbor_bits(w));
                b_avail.reset(w);
                start_b(b_avail);
            } else {
                grow_a(w, next_avail);
            }
            ia.pop_back();
        }
    }

    void run_chord(int cu, int cv) {
        u = cu;
        v = cv;
        const int n = g.vertex_count();
        Bitset scope(n);
        for (int i = 0; i < n; ++i) scope.set(i);
        scope.reset(u);
        scope.reset(v);
        Bitset cand = g.neighbor_bits(u) & scope;
        const Bitset& nv = g.neighbor_bits(v);
        for (int w = cand.find_first(); w >= 0 && !done; w = cand.find_next(w + 1)) {
            ia.push_back(w);
            Bitset avail = scope;
            avail.reset(w);
            if (nv.test(w)) {
                Bitset b_avail = avail;
                b_avail.subtract(g.neighbor_bits(w));
                start_b(b_avail);
            } else {
                grow_a(w, avail);
            }
            ia.pop_back();
        }
    }

    void run() {
        for (auto [a, b] : g.edges()) {
            if (done) return;
            if (g.degree(a) < 3 || g.degree(b) < 3) continue;  // chord ends have degree 3
            run_chord(a, b);
        }
    }
};

void require_search_bits(const Graph& g) {
    if (g.vertex_count() > 0 && !g.has_adjacency_bits())
        throw resource_error("graph too large for exact subgraph search");
}

}  // namespace

std::optional<OneChordWitness> find_induced_one_chord(const Graph& g, const SearchBudget& budget) {
    require_search_bits(g);
    ChordSearch s(g, std::nullopt, true, budget);
    s.run();
    if (!s.have_best) return std::nullopt;
    return s.best;
}

std::optional<OneChordWitness> max_one_chord_subgraph(const Graph& g, std::optional<int> at_least,
                                                      const SearchBudget& budget) {
    require_search_bits(g);
    if (at_least && *at_least < 4)
        at_least = 4;  // witnesses never have fewer than 4 vertices
    ChordSearch s(g, at_least, false, budget);
    s.run();
    if (!s.have_best) return std::nullopt;
    return s.best;
}

// ---------------------------------------------------------------------------
// Induced cycle search: the same growth discipline with both path endpoints
// anchored at s, where s is the least cycle vertex.

namespace {

struct CycleSearch {
    const Graph& g;
    std::optional<int> at_least;
    BudgetClock clock;

    int s = -1;
    std::vector<int> interior;

    bool done = false;
    bool have_best = false;
    int best_size = 0;
    std::vector<int> best_sorted;
    InducedCycleWitness best;

    CycleSearch(const Graph& g_, std::optional<int> at_least_, const SearchBudget& budget)
        : g(g_), at_least(at_least_), clock(budget) {}

    int prune_below() const {
        if (at_least) return std::max(3, *at_least);
        return std::max(3, best_size);
    }

    void complete(int terminal) {
        int size = 1 + int(interior.size());
        std::vector<int> cyc;
        cyc.push_back(s);
        cyc.insert(cyc.end(), interior.begin(), interior.end());
        if (at_least) {
            if (size < *at_least) return;
            best.cycle = canonicalize_cycle(std::move(cyc));
            have_best = true;
            done = true;
            return;
        }
        (void)terminal;
        std::vector<int> sorted = cyc;
        std::sort(sorted.begin(), sorted.end());
        if (size < best_size || (size == best_size && !(sorted < best_sorted))) return;
        best_size = size;
        best_sorted = std::move(sorted);
        best.cycle = canonicalize_cycle(std::move(cyc));
        have_best = true;
    }

    void grow(int x, const Bitset& avail) {
        clock.tick();
        if (1 + int(interior.size()) + avail.count() < prune_below()) return;
        Bitset cand = g.neighbor_bits(x) & avail;
        Bitset next_avail = avail;
        next_avail.subtract(g.neighbor_bits(x));
        next_avail.reset(x);
        const Bitset& ns = g.neighbor_bits(s);
        for (int w = cand.find_first(); w >= 0 && !done; w = cand.find_next(w + 1)) {
            if (ns.test(w)) {
                // terminal: close the cycle; skip the mirrored orientation
                if (interior.size() >= 1 && w > interior.front()) {
                    interior.push_back(w);
                    complete(w);
                    interior.pop_back();
                }
            } else {
                interior.push_back(w);
                grow(w, next_avail);
                interior.pop_back();
            }
        }
    }

    void run() {
        const int n = g.vertex_count();
        for (s = 0; s < n && !done; ++s) {
            if (g.degree(s) < 2) continue;
            Bitset scope(n);
            for (int i = s + 1; i < n; ++i) scope.set(i);
            Bitset firsts = g.neighbor_bits(s) & scope;
            for (int w = firsts.find_first(); w >= 0 && !done; w = firsts.find_next(w + 1)) {
                interior.push_back(w);
                Bitset avail = scope;
                avail.reset(w);
                grow(w, avail);
                interior.pop_back();
            }
        }
    }
};

}  // namespace

std::optional<InducedCycleWitness> max_induced_cycle(const Graph& g, std::optional<int> at_least,
                                                     const SearchBudget& budget) {
    require_search_bits(g);
    if (at_least && *at_least < 3) at_least = 3;
    CycleSearch s(g, at_least, budget);
    s.run();
    if (!s.have_best) return std::nullopt;
    return s.best;
}

// ---------------------------------------------------------------------------

bool is_valid_induced_cycle_witness(const Graph& g, const InducedCycleWitness& w) {
    const int k = w.size();
    if (k < 3) return false;
    std::vector<int> sorted = w.cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int x : w.cycle)
        if (x < 0 || x >= g.vertex_count()) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(w.cycle[i], w.cycle[j]) != consecutive) return false;
        }
    return true;
}

bool is_valid_one_chord_witness(const Graph& g, const OneChordWitness& w) {
    const int k = w.size();
    if (k < 4) return false;
    std::vector<int> sorted = w.cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int x : w.cycle)
        if (x < 0 || x >= g.vertex_count()) return false;
    // exactly the cycle edges plus the chord, which joins non-consecutive
    // cycle positions
    int chord_hits = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            bool edge = g.has_edge(w.cycle[i], w.cycle[j]);
            if (consecutive && !edge) return false;
            if (!consecutive && edge) {
                if (make_edge(w.cycle[i], w.cycle[j]) != w.chord) return false;
                ++chord_hits;
            }
        }
    if (chord_hits != 1) return false;
    // degree profile of the induced subgraph: (3,3,2,...,2)
    auto sub = induced_subgraph(g, sorted);
    int threes = 0;
    for (int v = 0; v < sub.graph.vertex_count(); ++v) {
        int d = sub.graph.degree(v);
        if (d == 3)
            ++threes;
        else if (d != 2)
            return false;
    }
    return threes == 2 && sub.graph.edge_count() == std::int64_t(k) + 1;
}

CharacterizationReport verify_characterizations(const Graph& g, const SearchBudget& budget) {
    if (!is_connected(g)) throw domain_error("graph must be connected");
    CharacterizationReport rep;
    auto witness = find_induced_one_chord(g, budget);
    rep.one_chord_free = !witness.has_value();
    rep.one_chord_witness = witness;
    auto seps = all_minimal_separators(g);
    rep.all_separators_stable = seps.all_stable;
    rep.non_stable_witness = seps.witness;
    rep.theorem2_consistent = (rep.one_chord_free == rep.all_separators_stable);

    const int n = g.vertex_count();
    bool complete = g.edge_count() == std::int64_t(n) * (n - 1) / 2;
    rep.lemma3_applicable = !complete && vertex_connectivity(g) >= 2;
    rep.lemma3_holds = !rep.lemma3_applicable || !rep.one_chord_free || !has_triangle(g);

    rep.lemma4_holds = true;
    if (rep.one_chord_free) {
        for (int v : articulation_points(g)) {
            Bitset removed(n);
            removed.set(v);
            Bitset left(n);
            for (int x = 0; x < n && rep.lemma4_holds; ++x) {
                if (x == v || left.test(x)) continue;
                Bitset comp = component_of(g, x, removed);
                left |= comp;
                VertexSet part = comp.to_vector();
                part.push_back(v);
                std::sort(part.begin(), part.end());
                auto sub = induced_subgraph(g, part);
                auto sz = std::int64_t(part.size());
                bool part_complete = sub.graph.edge_count() == sz * (sz - 1) / 2;
                if (!part_complete && find_induced_one_chord(sub.graph, budget))
                    rep.lemma4_holds = false;
            }
            if (!rep.lemma4_holds) break;
        }
    }
    return rep;
}

}  // namespace sepkit
