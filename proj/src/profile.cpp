#include <algorithm>
#include <queue>

#include "sepkit/graph.hpp"

namespace sepkit {

namespace {

// Unit-capacity max flow on the vertex-split digraph: vertex v becomes
// v_in = 2v and v_out = 2v+1 joined by a capacity-1 arc; each undirected edge
// {x,y} becomes x_out->y_in and y_out->x_in. Flow from s_out to t_in then
// counts internally vertex-disjoint s-t paths.
struct SplitFlow {
    struct Arc {
        int to;
        int cap;
        int rev;
    };

    std::vector<std::vector<Arc>> arcs;

    explicit SplitFlow(const Graph& g) : arcs(2 * g.vertex_count()) {
        const int n = g.vertex_count();
        for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, 1);
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                if (v > u) {
                    add(2 * u + 1, 2 * v, 1);
                    add(2 * v + 1, 2 * u, 1);
                }
    }

    void add(int a, int b, int cap) {
        arcs[a].push_back({b, cap, int(arcs[b].size())});
        arcs[b].push_back({a, 0, int(arcs[a].size()) - 1});
    }

    // One augmenting path via BFS; returns false when none remains.
    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
        std::queue<int> q;
        q.push(s);
        pred[s] = {s, 0};
        while (!q.empty() && pred[t].first < 0) {
            int v = q.front();
            q.pop();
            for (std::size_t i = 0; i < arcs[v].size(); ++i) {
                const Arc& a = arcs[v][i];
                if (a.cap > 0 && pred[a.to].first < 0) {
                    pred[a.to] = {v, int(i)};
                    q.push(a.to);
                }
            }
        }
        if (pred[t].first < 0) return false;
        for (int v = t; v != s;) {
            auto [pv, pi] = pred[v];
            Arc& a = arcs[pv][pi];
            a.cap -= 1;
            arcs[a.to][a.rev].cap += 1;
            v = pv;
        }
        return true;
    }
};

}  // namespace

int menger_disjoint_paths(const Graph& g, int s, int t, int stop_at) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw domain_error("endpoints must be distinct");
    if (g.has_edge(s, t)) throw domain_error("endpoints must be non-adjacent");
    SplitFlow f(g);
    // lift the in->out bottleneck on the endpoints themselves
    f.arcs[2 * s][0].cap = g.vertex_count();
    f.arcs[2 * t][0].cap = g.vertex_count();
    int flow = 0;
    while ((stop_at < 0 || flow < stop_at) && f.augment(2 * s + 1, 2 * t)) ++flow;
    return flow;
}

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    if (g.edge_count() == std::int64_t(n) * (n - 1) / 2) return n - 1;
    if (!articulation_points(g).empty()) return 1;

    // Anchor at a minimum-degree vertex s. The minimum over flows from s to
    // every non-neighbor and between every non-adjacent pair of neighbors of
    // s equals the minimum over all non-adjacent pairs: any minimum separator
    // either misses s (then it cuts s from some non-neighbor) or contains s
    // (then s has neighbors in two components, a non-adjacent pair it cuts).
    int s = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(s)) s = v;
    int best = g.degree(s);
    Bitset nbs(n);
    for (int w : g.neighbors(s)) nbs.set(w);
    for (int t = 0; t < n; ++t) {
        if (t == s || nbs.test(t)) continue;
        best = std::min(best, menger_disjoint_paths(g, s, t, best));
        if (best <= 2) break;  // kappa >= 2 already certified above
    }
    const auto& nb = g.neighbors(s);
    for (std::size_t i = 0; i < nb.size() && best > 2; ++i)
        for (std::size_t j = i + 1; j < nb.size() && best > 2; ++j)
            if (!g.has_edge(nb[i], nb[j]))
                best = std::min(best, menger_disjoint_paths(g, nb[i], nb[j], best));
    return best;
}

StructuralProfile structural_profile(const Graph& g) {
    const int n = g.vertex_count();
    StructuralProfile p;
    p.is_connected = is_connected(g);
    p.is_tree = p.is_connected && g.edge_count() == std::int64_t(n) - 1 && n >= 1;
    p.is_complete = n >= 1 && g.edge_count() == std::int64_t(n) * (n - 1) / 2;
    p.has_triangle = has_triangle(g);
    p.vertex_connectivity = vertex_connectivity(g);
    p.degree_sequence.reserve(n);
    for (int v = 0; v < n; ++v) p.degree_sequence.push_back(g.degree(v));
    std::sort(p.degree_sequence.rbegin(), p.degree_sequence.rend());
    return p;
}

}  // namespace sepkit
