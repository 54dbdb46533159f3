#include "sepkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sepkit {

Graph::Graph(int n, const EdgeSet& edges) : n_(n) {
    if (n < 0) throw domain_error("vertex count must be nonnegative");
    adj_.resize(n_);
    EdgeSet norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw range_error("edge endpoint out of range");
        if (u == v) throw domain_error("self-loop on vertex " + std::to_string(u));
        norm.push_back(make_edge(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    for (auto [u, v] : norm) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    m_ = std::int64_t(norm.size());
    if (n_ > 0 && n_ <= kAdjacencyBitsMaxVertices) {
        bits_.assign(n_, Bitset(n_));
        for (auto [u, v] : norm) {
            bits_[u].set(v);
            bits_[v].set(u);
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (!bits_.empty()) return bits_[u].test(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(std::size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (v > u) out.emplace_back(u, v);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool parse_int(const std::string& tok, int& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_n = false;
    int n = 0;
    EdgeSet edges;
    while (std::getline(in, line)) {
        ++lineno;
        // strip trailing CR from files with Windows line endings
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank
        if (tag[0] == '#') continue;
        if (tag == "n") {
            if (have_n) throw parse_error(lineno, "duplicate vertex-count line");
            std::string tok, extra;
            if (!(ls >> tok) || ls >> extra)
                throw parse_error(lineno, "expected 'n <count>'");
            if (!parse_int(tok, n) || n <= 0)
                throw parse_error(lineno, "vertex count must be a positive integer");
            have_n = true;
        } else if (tag == "e") {
            if (!have_n) throw parse_error(lineno, "edge before vertex-count line");
            std::string ts, tt, extra;
            if (!(ls >> ts >> tt) || ls >> extra)
                throw parse_error(lineno, "expected 'e <u> <v>'");
            int u, v;
            if (!parse_int(ts, u) || !parse_int(tt, v))
                throw parse_error(lineno, "edge endpoints must be integers");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw parse_error(lineno, "vertex id out of range 0.." + std::to_string(n - 1));
            if (u == v) throw parse_error(lineno, "self-loop on vertex " + std::to_string(u));
            edges.push_back(make_edge(u, v));
        } else {
            throw parse_error(lineno, "unknown directive '" + tag + "'");
        }
    }
    if (!have_n) throw parse_error(lineno, "missing vertex-count line");
    return Graph(n, edges);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------

Bitset vertex_set_bits(const Graph& g, const VertexSet& s) {
    Bitset b(g.vertex_count());
    for (int v : s) {
        g.check_vertex(v);
        b.set(v);
    }
    return b;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> map;
    map.reserve(s.size());
    std::vector<int> rank(g.vertex_count(), -1);
    for (int v : s) {
        g.check_vertex(v);
        if (rank[v] >= 0) continue;  // tolerate duplicates
        rank[v] = 0;
        map.push_back(v);
    }
    std::sort(map.begin(), map.end());
    for (std::size_t i = 0; i < map.size(); ++i) rank[map[i]] = int(i);
    EdgeSet edges;
    for (std::size_t i = 0; i < map.size(); ++i)
        for (int w : g.neighbors(map[i]))
            if (w > map[i] && rank[w] >= 0) edges.emplace_back(int(i), rank[w]);
    return InducedSubgraph{Graph(int(map.size()), edges), std::move(map)};
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<VertexSet> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        int id = int(comps.size());
        comps.emplace_back();
        label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps[id].push_back(v);
            for (int w : g.neighbors(v))
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(comps[id].begin(), comps[id].end());
    }
    return comps;  // discovery from ascending start ids ⇒ ordered by min id
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == n;
}

Bitset component_of(const Graph& g, int v, const Bitset& removed) {
    g.check_vertex(v);
    Bitset comp(g.vertex_count());
    comp.set(v);
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(x))
            if (!removed.test(w) && !comp.test(w)) {
                comp.set(w);
                stack.push_back(w);
            }
    }
    return comp;
}

SetClassification classify_set(const Graph& g, const VertexSet& s) {
    for (int v : s) g.check_vertex(v);
    bool stable = true, clique = true;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j]) continue;
            if (g.has_edge(s[i], s[j]))
                stable = false;
            else
                clique = false;
        }
    return {stable, clique};
}

bool is_matching(const Graph& g, const EdgeSet& f) {
    std::vector<int> used;
    for (auto [u, v] : f) {
        if (!g.has_edge(u, v))
            throw domain_error("pair {" + std::to_string(u) + "," + std::to_string(v) +
                               "} is not an edge of the graph");
        used.push_back(u);
        used.push_back(v);
    }
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            // common neighbor of u and v
            const auto &a = g.neighbors(u), &b = g.neighbors(v);
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) return true;
                if (a[i] < b[j])
                    ++i;
                else
                    ++j;
            }
        }
    return false;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw domain_error("cannot contract a non-edge");
    int keep = std::min(u, v), drop = std::max(u, v);
    auto relabel = [&](int x) { return x > drop ? x - 1 : x; };
    EdgeSet edges;
    for (auto [a, b] : g.edges()) {
        if (a == drop) a = keep;
        if (b == drop) b = keep;
        if (a == b) continue;
        edges.push_back(make_edge(relabel(a), relabel(b)));
    }
    return Graph(g.vertex_count() - 1, edges);
}

std::vector<int> articulation_points(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<bool> cut(n, false);
    int timer = 0;
    // iterative DFS; state = (vertex, index into neighbor list)
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        stack.emplace_back(root, 0);
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < g.neighbors(v).size()) {
                int w = g.neighbors(v)[idx++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    ++child_count[v];
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, 0);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p]) cut[p] = true;
                }
            }
        }
        if (child_count[root] > 1) cut[root] = true;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

}  // namespace sepkit
