#include "sepkit/separators.hpp"

#include <algorithm>
#include <set>

namespace sepkit {

namespace {

void check_pair(const Graph& g, int a, int b) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) throw domain_error("pair endpoints must be distinct");
}

bool separates(const Graph& g, int a, int b, const Bitset& removed) {
    return !component_of(g, a, removed).test(b);
}

}  // namespace

bool is_vertex_separator(const Graph& g, int a, int b, const VertexSet& s) {
    check_pair(g, a, b);
    Bitset removed = vertex_set_bits(g, s);
    if (removed.test(a) || removed.test(b))
        throw domain_error("separator may not contain the pair endpoints");
    return separates(g, a, b, removed);
}

bool is_minimal_vertex_separator(const Graph& g, int a, int b, const VertexSet& s) {
    if (!is_vertex_separator(g, a, b, s))
        throw domain_error("set is not an (a,b) vertex separator");
    Bitset removed = vertex_set_bits(g, s);
    Bitset side_a = component_of(g, a, removed);
    Bitset side_b = component_of(g, b, removed);
    for (int v : s) {
        bool touches_a = false, touches_b = false;
        for (int w : g.neighbors(v)) {
            touches_a = touches_a || side_a.test(w);
            touches_b = touches_b || side_b.test(w);
        }
        if (!touches_a || !touches_b) return false;
    }
    return true;
}

namespace {

struct VertexSepEnumerator {
    const Graph& g;
    int a, b;
    std::optional<int> cap;
    std::vector<VertexSeparatorRecord>* out;
    bool truncated = false;

    bool full() const { return cap && int(out->size()) >= *cap; }

    // Candidate separator N(C) for a connected C containing a with b outside
    // N[C]. side_a is C itself: C has no neighbors outside N(C).
    void emit(const Bitset& c, const Bitset& closed) {
        Bitset sep = closed;
        sep.subtract(c);
        Bitset side_b = component_of(g, b, sep);
        VertexSeparatorRecord rec;
        bool minimal = true;
        sep.for_each([&](int v) {
            bool touches_b = false;
            for (int w : g.neighbors(v)) touches_b = touches_b || side_b.test(w);
            minimal = minimal && touches_b;
            rec.separator.push_back(v);
        });
        if (!minimal) return;
        if (full()) {
            truncated = true;  // a genuine record fell past the cap
            return;
        }
        rec.a = a;
        rec.b = b;
        rec.is_minimal = true;
        auto cls = classify_set(g, rec.separator);
        rec.is_stable = cls.is_stable;
        rec.is_clique = cls.is_clique;
        rec.side_a = c.to_vector();
        rec.side_b = side_b.to_vector();
        out->push_back(std::move(rec));
    }

    // Binary set-enumeration over connected supersets of C: each candidate v
    // from the frontier is branched on once, with previously declined
    // candidates staying forbidden below.
    void extend(const Bitset& c, const Bitset& closed, Bitset forbidden) {
        if (truncated) return;
        Bitset frontier = closed;
        frontier.subtract(c);
        frontier.subtract(forbidden);
        for (int v = frontier.find_first(); v >= 0 && !truncated;
             v = frontier.find_next(v + 1)) {
            bool v_sees_b = false;
            for (int w : g.neighbors(v)) v_sees_b = v_sees_b || w == b;
            if (!v_sees_b) {
                Bitset c2 = c;
                c2.set(v);
                Bitset closed2 = closed;
                closed2.set(v);
                for (int w : g.neighbors(v)) closed2.set(w);
                emit(c2, closed2);
                extend(c2, closed2, forbidden);
            }
            forbidden.set(v);
        }
    }
};

}  // namespace

SeparatorEnumeration enumerate_minimal_ab_separators(const Graph& g, int a, int b,
                                                     std::optional<int> cap) {
    check_pair(g, a, b);
    if (g.has_edge(a, b)) throw domain_error("no (a,b) separator exists for an adjacent pair");
    const int n = g.vertex_count();
    SeparatorEnumeration result;
    VertexSepEnumerator en{g, a, b, cap, &result.records};
    Bitset c(n), closed(n), forbidden(n);
    c.set(a);
    closed.set(a);
    for (int w : g.neighbors(a)) closed.set(w);
    forbidden.set(b);
    en.emit(c, closed);
    en.extend(c, closed, forbidden);
    result.truncated = en.truncated;
    std::sort(result.records.begin(), result.records.end(), [](const auto& x, const auto& y) {
        return x.separator.size() != y.separator.size() ? x.separator.size() < y.separator.size()
                                                        : x.separator < y.separator;
    });
    return result;
}

AllSeparatorsResult all_minimal_separators(const Graph& g, std::optional<int> cap) {
    const int n = g.vertex_count();
    AllSeparatorsResult result;
    std::set<VertexSet> seen;
    for (int a = 0; a < n && !result.truncated; ++a) {
        for (int b = a + 1; b < n && !result.truncated; ++b) {
            if (g.has_edge(a, b)) continue;
            auto en = enumerate_minimal_ab_separators(g, a, b, cap);
            result.truncated = result.truncated || en.truncated;
            for (auto& rec : en.records) {
                if (!seen.insert(rec.separator).second) continue;
                result.records.push_back(std::move(rec));
                if (cap && int(result.records.size()) >= *cap) {
                    result.truncated = true;
                    break;
                }
            }
        }
    }
    std::sort(result.records.begin(), result.records.end(), [](const auto& x, const auto& y) {
        return x.separator.size() != y.separator.size() ? x.separator.size() < y.separator.size()
                                                        : x.separator < y.separator;
    });
    for (const auto& rec : result.records) {
        if (!rec.is_stable) {
            result.all_stable = false;
            if (!result.witness) result.witness = rec;
        }
    }
    return result;
}

namespace {

// scan assumes k = kappa(g) and g connected, non-complete
std::vector<VertexSet> minimum_separators_with_k(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<VertexSet> out;
    VertexSet pick;
    Bitset removed(n);
    // lexicographic k-subset scan; a subset qualifies when its removal leaves
    // more than one component
    auto rec = [&](auto&& self, int from) -> void {
        if (int(pick.size()) == k) {
            int rest = -1;
            for (int v = 0; v < n; ++v)
                if (!removed.test(v)) {
                    rest = v;
                    break;
                }
            if (rest >= 0 && component_of(g, rest, removed).count() < n - k)
                out.push_back(pick);
            return;
        }
        for (int v = from; v < n - (k - int(pick.size())) + 1; ++v) {
            pick.push_back(v);
            removed.set(v);
            self(self, v + 1);
            removed.reset(v);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

void check_separator_domain(const Graph& g) {
    if (!is_connected(g)) throw domain_error("graph must be connected");
    const int n = g.vertex_count();
    if (g.edge_count() == std::int64_t(n) * (n - 1) / 2)
        throw domain_error("complete graphs have no vertex separator");
}

}  // namespace

std::vector<VertexSet> minimum_separators(const Graph& g) {
    check_separator_domain(g);
    return minimum_separators_with_k(g, vertex_connectivity(g));
}

ContractibilityReport contractible_edges(const Graph& g) {
    check_separator_domain(g);
    ContractibilityReport report;
    report.k = vertex_connectivity(g);
    auto mins = minimum_separators_with_k(g, report.k);
    for (auto e : g.edges()) {
        const VertexSet* blocker = nullptr;
        for (const auto& s : mins) {
            if (std::binary_search(s.begin(), s.end(), e.first) &&
                std::binary_search(s.begin(), s.end(), e.second)) {
                blocker = &s;
                break;
            }
        }
        if (blocker) {
            report.non_contractible.push_back(e);
            report.blocking_separators[e] = *blocker;
        } else {
            report.contractible.push_back(e);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Edge separators.

namespace {

void check_cut_edges(const Graph& g, const EdgeSet& cut) {
    for (auto [u, v] : cut)
        if (!g.has_edge(u, v))
            throw domain_error("cut contains non-edge {" + std::to_string(u) + "," +
                               std::to_string(v) + "}");
}

// Component of v in G minus the cut edges.
VertexSet edge_cut_component(const Graph& g, int v, const std::set<Edge>& cut) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<int> stack{v};
    seen[v] = true;
    VertexSet comp{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(x)) {
            if (seen[w] || cut.count(make_edge(x, w))) continue;
            seen[w] = true;
            comp.push_back(w);
            stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

}  // namespace

bool is_edge_separator(const Graph& g, int a, int b, const EdgeSet& cut) {
    check_pair(g, a, b);
    check_cut_edges(g, cut);
    std::set<Edge> cs(cut.begin(), cut.end());
    auto comp = edge_cut_component(g, a, cs);
    return !std::binary_search(comp.begin(), comp.end(), b);
}

bool is_minimal_edge_separator(const Graph& g, int a, int b, const EdgeSet& cut) {
    if (!is_edge_separator(g, a, b, cut))
        throw domain_error("edge set does not separate the pair");
    std::set<Edge> cs(cut.begin(), cut.end());
    auto side_a = edge_cut_component(g, a, cs);
    auto side_b = edge_cut_component(g, b, cs);
    auto in_a = [&](int v) { return std::binary_search(side_a.begin(), side_a.end(), v); };
    auto in_b = [&](int v) { return std::binary_search(side_b.begin(), side_b.end(), v); };
    // every cut edge must cross between the two sides...
    for (auto [u, v] : cut)
        if (!((in_a(u) && in_b(v)) || (in_a(v) && in_b(u)))) return false;
    // ...and the cut must be the whole boundary
    for (int u : side_a)
        for (int w : g.neighbors(u))
            if (in_b(w) && !cs.count(make_edge(u, w))) return false;
    return true;
}

EdgeSeparatorEnumeration enumerate_minimal_ab_edge_separators(const Graph& g, int a, int b,
                                                              std::optional<int> cap) {
    check_pair(g, a, b);
    if (!is_connected(g)) throw domain_error("graph must be connected");
    const int n = g.vertex_count();
    if (n > 30) throw resource_error("graph too large for exact edge-cut enumeration");
    EdgeSeparatorEnumeration result;
    // bipartitions V = A ∪ B with a in A, b in B and both sides connected
    const std::uint64_t total = std::uint64_t{1} << n;
    auto connected_mask = [&](std::uint64_t mask) {
        if (mask == 0) return false;
        int start = std::countr_zero(mask);
        std::uint64_t seen = std::uint64_t{1} << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if ((mask >> w & 1) && !(seen >> w & 1)) {
                    seen |= std::uint64_t{1} << w;
                    stack.push_back(w);
                }
        }
        return seen == mask;
    };
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!(mask >> a & 1) || (mask >> b & 1)) continue;
        std::uint64_t other = ~mask & (total - 1);
        if (!connected_mask(mask) || !connected_mask(other)) continue;
        EdgeSeparatorRecord rec;
        rec.a = a;
        rec.b = b;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) != (mask >> v & 1)) rec.cut.push_back(make_edge(u, v));
        std::sort(rec.cut.begin(), rec.cut.end());
        rec.is_minimal = true;
        std::vector<int> ends;
        for (auto [u, v] : rec.cut) {
            ends.push_back(u);
            ends.push_back(v);
        }
        std::sort(ends.begin(), ends.end());
        rec.is_matching = std::adjacent_find(ends.begin(), ends.end()) == ends.end();
        for (int v = 0; v < n; ++v)
            ((mask >> v & 1) ? rec.side_a : rec.side_b).push_back(v);
        result.records.push_back(std::move(rec));
        if (cap && int(result.records.size()) >= *cap) {
            result.truncated = true;
            break;
        }
    }
    std::sort(result.records.begin(), result.records.end(), [](const auto& x, const auto& y) {
        return x.cut.size() != y.cut.size() ? x.cut.size() < y.cut.size() : x.cut < y.cut;
    });
    return result;
}

MatchingSeparatorResult matching_edge_separator_property(const Graph& g) {
    if (!is_connected(g)) throw domain_error("graph must be connected");
    MatchingSeparatorResult result;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto en = enumerate_minimal_ab_edge_separators(g, a, b);
            for (auto& rec : en.records)
                if (!rec.is_matching) {
                    result.holds = false;
                    result.witness = std::move(rec);
                    return result;
                }
        }
    return result;
}

}  // namespace sepkit
