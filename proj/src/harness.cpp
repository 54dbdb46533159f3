#include "sepkit/harness.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace sepkit {

// ---------------------------------------------------------------------------
// Generators.

namespace {

// Engine output mapped to [0,1); std::uniform_real_distribution is not
// portable across standard libraries, raw engine words are.
double unit_real(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

GeneratorSpec::Kind generator_kind_from_string(const std::string& name) {
    if (name == "random_gnp" || name == "gnp") return GeneratorSpec::Kind::random_gnp;
    if (name == "tree_random" || name == "tree") return GeneratorSpec::Kind::tree_random;
    if (name == "cycle") return GeneratorSpec::Kind::cycle;
    if (name == "complete") return GeneratorSpec::Kind::complete;
    if (name == "path") return GeneratorSpec::Kind::path;
    if (name == "chordal_random" || name == "chordal") return GeneratorSpec::Kind::chordal_random;
    if (name == "star") return GeneratorSpec::Kind::star;
    if (name == "petersen") return GeneratorSpec::Kind::petersen;
    throw domain_error("unknown generator kind '" + name + "'");
}

std::string to_string(GeneratorSpec::Kind kind) {
    switch (kind) {
        case GeneratorSpec::Kind::random_gnp: return "random_gnp";
        case GeneratorSpec::Kind::tree_random: return "tree_random";
        case GeneratorSpec::Kind::cycle: return "cycle";
        case GeneratorSpec::Kind::complete: return "complete";
        case GeneratorSpec::Kind::path: return "path";
        case GeneratorSpec::Kind::chordal_random: return "chordal_random";
        case GeneratorSpec::Kind::star: return "star";
        case GeneratorSpec::Kind::petersen: return "petersen";
    }
    throw domain_error("unknown generator kind");
}

Graph generate(const GeneratorSpec& spec) {
    const int n = spec.n;
    if (n < 1) throw domain_error("generator needs n >= 1");
    EdgeSet edges;
    switch (spec.kind) {
        case GeneratorSpec::Kind::random_gnp: {
            if (spec.p < 0.0 || spec.p > 1.0) throw domain_error("edge probability must be in [0,1]");
            std::mt19937_64 rng(spec.seed);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (unit_real(rng) < spec.p) edges.emplace_back(i, j);
            break;
        }
        case GeneratorSpec::Kind::tree_random: {
            std::mt19937_64 rng(spec.seed);
            for (int v = 1; v < n; ++v) edges.push_back(make_edge(int(pick(rng, v)), v));
            break;
        }
        case GeneratorSpec::Kind::cycle: {
            if (n < 3) throw domain_error("cycle needs n >= 3");
            for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
            break;
        }
        case GeneratorSpec::Kind::complete: {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
        }
        case GeneratorSpec::Kind::path: {
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        }
        case GeneratorSpec::Kind::chordal_random: {
            // each new vertex attaches to a clique inside the neighborhood of
            // an existing vertex, so it is simplicial on arrival
            std::mt19937_64 rng(spec.seed);
            std::vector<std::vector<int>> adj(n);
            auto connect = [&](int a, int b) {
                edges.push_back(make_edge(a, b));
                adj[a].push_back(b);
                adj[b].push_back(a);
            };
            for (int v = 1; v < n; ++v) {
                int u = int(pick(rng, v));
                std::vector<int> clique{u};
                for (int w : adj[u]) {
                    if (w >= v) continue;
                    // keep w only if adjacent to every chosen member
                    bool joins = true;
                    for (int c : clique)
                        if (c != u && !std::binary_search(adj[c].begin(), adj[c].end(), w))
                            joins = false;
                    if (joins && (rng() & 1)) clique.push_back(w);
                }
                for (int c : clique) connect(c, v);
                for (auto& a : adj) std::sort(a.begin(), a.end());
            }
            break;
        }
        case GeneratorSpec::Kind::star: {
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        }
        case GeneratorSpec::Kind::petersen: {
            if (n != 10) throw domain_error("petersen requires n = 10");
            for (int i = 0; i < 5; ++i) {
                edges.push_back(make_edge(i, (i + 1) % 5));        // outer cycle
                edges.emplace_back(i, i + 5);                      // spokes
                edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
            }
            break;
        }
    }
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Labeled graph enumeration over edge masks.

std::uint64_t graph_mask_space(int n) {
    if (n < 1 || n > 8) throw domain_error("mask enumeration supports 1 <= n <= 8");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    EdgeSet edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

namespace {

// connectivity straight off the mask, no Graph construction
bool mask_connected(int n, std::uint64_t mask) {
    if (n <= 1) return true;
    std::uint64_t adj[8] = {};
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n;
}

// lexicographically least edge mask over all vertex relabelings
std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto bit_index = [n](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    };
    std::uint64_t best = mask;
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::uint64_t m = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (mask >> bit & 1) m |= std::uint64_t{1} << bit_index(perm[i], perm[j]);
        best = std::min(best, m);
    }
    return best;
}

}  // namespace

long long enumerate_graph_masks(int n, std::uint64_t lo, std::uint64_t hi, bool connected_only,
                                const std::function<bool(const Graph&)>& visit) {
    if (n < 1 || n > 8) throw domain_error("mask enumeration supports 1 <= n <= 8");
    long long count = 0;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (connected_only && !mask_connected(n, mask)) continue;
        ++count;
        if (!visit(graph_from_mask(n, mask))) break;
    }
    return count;
}

long long enumerate_connected_graphs(int n, const std::function<bool(const Graph&)>& visit,
                                     bool dedup_canonical) {
    if (n < 1 || n > 8) throw domain_error("enumeration supports 1 <= n <= 8");
    if (dedup_canonical && n > 6)
        throw domain_error("canonical dedup supported for n <= 6");
    if (!dedup_canonical) return enumerate_graph_masks(n, 0, graph_mask_space(n), true, visit);
    long long count = 0;
    for (std::uint64_t mask = 0; mask < graph_mask_space(n); ++mask) {
        if (!mask_connected(n, mask)) continue;
        if (canonical_mask(n, mask) != mask) continue;
        ++count;
        if (!visit(graph_from_mask(n, mask))) break;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Brute-force oracles.

namespace {

void check_oracle_pair(const Graph& g, int a, int b) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) throw domain_error("pair endpoints must be distinct");
}

// BFS over a vertex subset encoded as a word; returns component of start
std::uint64_t word_component(const std::vector<std::uint64_t>& adj, int start,
                             std::uint64_t allowed) {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[v] & allowed;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

std::vector<std::uint64_t> adjacency_words(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw resource_error("graph too large for the subset oracle");
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
    return adj;
}

bool word_separates(const std::vector<std::uint64_t>& adj, int a, int b, std::uint64_t removed,
                    int n) {
    std::uint64_t allowed = (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) & ~removed;
    return !(word_component(adj, a, allowed) >> b & 1);
}

}  // namespace

std::vector<VertexSet> brute_force_minimal_separators(const Graph& g, int a, int b) {
    check_oracle_pair(g, a, b);
    const int n = g.vertex_count();
    if (n > 15) throw resource_error("subset oracle supports n <= 15");
    auto adj = adjacency_words(g);
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != a && v != b) rest.push_back(v);
    std::vector<std::uint64_t> separating;
    const std::uint64_t total = std::uint64_t{1} << rest.size();
    for (std::uint64_t pickmask = 0; pickmask < total; ++pickmask) {
        std::uint64_t removed = 0;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (pickmask >> i & 1) removed |= std::uint64_t{1} << rest[i];
        if (word_separates(adj, a, b, removed, n)) separating.push_back(removed);
    }
    // subset-minimality by containment against every other separating set
    std::sort(separating.begin(), separating.end(),
              [](std::uint64_t x, std::uint64_t y) {
                  int px = std::popcount(x), py = std::popcount(y);
                  return px != py ? px < py : x < y;
              });
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < separating.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < i && minimal; ++j)
            if ((separating[j] & ~separating[i]) == 0 && separating[j] != separating[i])
                minimal = false;
        if (!minimal) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (separating[i] >> v & 1) s.push_back(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& x, const VertexSet& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

bool brute_force_is_minimal_vertex_separator(const Graph& g, int a, int b, const VertexSet& s) {
    check_oracle_pair(g, a, b);
    auto adj = adjacency_words(g);
    const int n = g.vertex_count();
    std::uint64_t smask = 0;
    for (int v : s) {
        g.check_vertex(v);
        smask |= std::uint64_t{1} << v;
    }
    if (!word_separates(adj, a, b, smask, n)) return false;
    if (smask == 0) return true;  // the empty set has no proper subset
    // every proper subset must fail to separate
    for (std::uint64_t sub = (smask - 1) & smask;; sub = (sub - 1) & smask) {
        if (word_separates(adj, a, b, sub, n)) return false;
        if (sub == 0) break;
    }
    return true;
}

std::vector<EdgeSet> brute_force_minimal_edge_separators(const Graph& g, int a, int b) {
    check_oracle_pair(g, a, b);
    EdgeSet all = g.edges();
    const int m = int(all.size());
    if (m > 20) throw resource_error("edge-subset oracle supports |E| <= 20");
    const int n = g.vertex_count();
    auto adj = adjacency_words(g);
    auto separated = [&](std::uint64_t cut) {
        // BFS skipping cut edges
        std::vector<std::uint64_t> local = adj;
        for (int i = 0; i < m; ++i)
            if (cut >> i & 1) {
                local[all[i].first] &= ~(std::uint64_t{1} << all[i].second);
                local[all[i].second] &= ~(std::uint64_t{1} << all[i].first);
            }
        std::uint64_t allowed = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return !(word_component(local, a, allowed) >> b & 1);
    };
    std::vector<std::uint64_t> separating;
    for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << m); ++cut)
        if (separated(cut)) separating.push_back(cut);
    std::sort(separating.begin(), separating.end(), [](std::uint64_t x, std::uint64_t y) {
        int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px < py : x < y;
    });
    std::vector<EdgeSet> out;
    for (std::size_t i = 0; i < separating.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < i && minimal; ++j)
            if ((separating[j] & ~separating[i]) == 0 && separating[j] != separating[i])
                minimal = false;
        if (!minimal) continue;
        EdgeSet cut;
        for (int e = 0; e < m; ++e)
            if (separating[i] >> e & 1) cut.push_back(all[e]);
        std::sort(cut.begin(), cut.end());
        out.push_back(std::move(cut));
    }
    std::sort(out.begin(), out.end(), [](const EdgeSet& x, const EdgeSet& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

int brute_force_vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    if (n > 20) throw resource_error("connectivity oracle supports n <= 20");
    auto adj = adjacency_words(g);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    // smallest removal set leaving a disconnected graph or a single vertex
    for (int size = 0; size < n; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        bool more = true;
        while (more) {
            std::uint64_t removed = 0;
            for (int v : pick) removed |= std::uint64_t{1} << v;
            std::uint64_t allowed = full & ~removed;
            if (std::popcount(allowed) == 1) return size;
            int start = std::countr_zero(allowed);
            if (word_component(adj, start, allowed) != allowed) return size;
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0)
                more = false;
            else {
                ++pick[i];
                for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    }
    return n - 1;
}

bool definitional_is_one_chord_graph(const Graph& h) {
    const int n = h.vertex_count();
    if (n < 4 || h.edge_count() != std::int64_t(n) + 1) return false;
    // a cycle plus one chord: some single edge deletion leaves a spanning cycle
    auto all = h.edges();
    for (std::size_t skip = 0; skip < all.size(); ++skip) {
        EdgeSet rest;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (i != skip) rest.push_back(all[i]);
        Graph without(n, rest);
        bool two_regular = true;
        for (int v = 0; v < n; ++v) two_regular = two_regular && without.degree(v) == 2;
        if (two_regular && is_connected(without)) return true;
    }
    return false;
}

namespace {

// edge count of the induced subgraph, straight from adjacency words
int induced_edge_count(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    int twice = 0;
    std::uint64_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        twice += std::popcount(adj[v] & mask);
    }
    return twice / 2;
}

}  // namespace

std::optional<int> brute_force_max_one_chord_size(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 24) throw resource_error("subset oracle supports n <= 24");
    auto adj = adjacency_words(g);
    std::optional<int> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int size = std::popcount(mask);
        if (size < 4 || (best && size <= *best)) continue;
        if (induced_edge_count(adj, mask) != size + 1) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        if (definitional_is_one_chord_graph(induced_subgraph(g, s).graph)) best = size;
    }
    return best;
}

std::optional<int> brute_force_max_induced_cycle_size(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 24) throw resource_error("subset oracle supports n <= 24");
    auto adj = adjacency_words(g);
    std::optional<int> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int size = std::popcount(mask);
        if (size < 3 || (best && size <= *best)) continue;
        // induced cycle = connected and 2-regular within the subset
        bool two_regular = true;
        std::uint64_t rest = mask;
        while (rest && two_regular) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            two_regular = std::popcount(adj[v] & mask) == 2;
        }
        if (!two_regular) continue;
        int start = std::countr_zero(mask);
        if (word_component(adj, start, mask) == mask) best = size;
    }
    return best;
}

}  // namespace sepkit
