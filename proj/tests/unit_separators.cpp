#include <doctest.h>

#include "sepkit/harness.hpp"
#include "sepkit/separators.hpp"
#include "test_graphs.hpp"

using namespace sepkit;
using namespace testgraphs;

namespace {

std::vector<VertexSet> separator_sets(const SeparatorEnumeration& en) {
    std::vector<VertexSet> out;
    for (const auto& rec : en.records) out.push_back(rec.separator);
    return out;
}

}  // namespace

TEST_CASE("is_vertex_separator") {
    Graph p3 = path(3);  // 0-1-2
    CHECK(is_vertex_separator(p3, 0, 2, {1}));
    Graph c4 = cycle(4);  // 0-1-2-3-0
    CHECK(!is_vertex_separator(c4, 0, 2, {1}));
    CHECK(is_vertex_separator(c4, 0, 2, {1, 3}));
    CHECK_THROWS_AS(is_vertex_separator(c4, 0, 2, {0, 1}), domain_error);
    CHECK_THROWS_AS(is_vertex_separator(c4, 0, 0, {1}), domain_error);
}

TEST_CASE("is_minimal_vertex_separator") {
    SUBCASE("C4 opposite pair: both cycle neighbors form a minimal separator") {
        CHECK(is_minimal_vertex_separator(cycle(4), 0, 2, {1, 3}));
    }
    SUBCASE("a pendant vertex in the separator breaks minimality") {
        // C4 plus pendant 4 attached to 1: {1,3,4} separates 0 from 2 but 4
        // has no neighbor on either side
        Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}});
        CHECK(is_vertex_separator(g, 0, 2, {1, 3, 4}));
        CHECK(!is_minimal_vertex_separator(g, 0, 2, {1, 3, 4}));
        // and {1,4} is not even a separator: the path through 3 survives
        CHECK(!is_vertex_separator(g, 0, 2, {1, 4}));
        CHECK_THROWS_AS(is_minimal_vertex_separator(g, 0, 2, {1, 4}), domain_error);
    }
    SUBCASE("diamond: the degree-3 pair is the only minimal separator") {
        // brute oracle over subsets of {1,2}: only {1,2} separates 0 from 3
        CHECK(brute_force_minimal_separators(diamond(), 0, 3) ==
              std::vector<VertexSet>{{1, 2}});
        CHECK(is_minimal_vertex_separator(diamond(), 0, 3, {1, 2}));
    }
}

TEST_CASE("enumerate_minimal_ab_separators on the named graphs") {
    SUBCASE("C4") {
        auto en = enumerate_minimal_ab_separators(cycle(4), 0, 2);
        CHECK(separator_sets(en) == std::vector<VertexSet>{{1, 3}});
        CHECK(en.records[0].is_stable);
        CHECK(en.records[0].side_a == VertexSet{0});
        CHECK(en.records[0].side_b == VertexSet{2});
    }
    SUBCASE("C5 gives exactly two minimal separators, both stable pairs") {
        auto en = enumerate_minimal_ab_separators(cycle(5), 0, 2);
        CHECK(separator_sets(en) == std::vector<VertexSet>{{1, 3}, {1, 4}});
        for (const auto& rec : en.records) {
            CHECK(rec.is_stable);
            CHECK(rec.separator.size() == 2);
        }
    }
    SUBCASE("diamond's only minimal separator is not stable") {
        auto en = enumerate_minimal_ab_separators(diamond(), 0, 3);
        REQUIRE(en.records.size() == 1);
        CHECK(en.records[0].separator == VertexSet{1, 2});
        CHECK(!en.records[0].is_stable);
        CHECK(en.records[0].is_clique);
    }
    SUBCASE("adjacent pairs are rejected") {
        CHECK_THROWS_AS(enumerate_minimal_ab_separators(cycle(4), 0, 1), domain_error);
    }
    SUBCASE("split pairs in a disconnected graph have the empty separator") {
        Graph g(4, {{0, 1}, {2, 3}});
        auto en = enumerate_minimal_ab_separators(g, 0, 2);
        REQUIRE(en.records.size() == 1);
        CHECK(en.records[0].separator.empty());
        CHECK(en.records[0].is_stable);
        CHECK(en.records[0].is_clique);
    }
    SUBCASE("cap truncates and reports it") {
        auto capped = enumerate_minimal_ab_separators(cycle(5), 0, 2, 1);
        CHECK(capped.records.size() == 1);
        CHECK(capped.truncated);
        auto exact = enumerate_minimal_ab_separators(cycle(5), 0, 2, 2);
        CHECK(exact.records.size() == 2);
        CHECK(!exact.truncated);
    }
}

TEST_CASE("enumeration equals the brute-force filter on every graph with n <= 6") {
    for (int n = 2; n <= 6; ++n)
        enumerate_graph_masks(n, 0, graph_mask_space(n), false, [&](const Graph& g) {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    if (g.has_edge(a, b)) continue;
                    auto fast = separator_sets(enumerate_minimal_ab_separators(g, a, b));
                    auto brute = brute_force_minimal_separators(g, a, b);
                    CHECK(fast == brute);
                }
            return true;
        });
}

TEST_CASE("all_minimal_separators") {
    SUBCASE("P4: the two internal vertices, all stable") {
        auto res = all_minimal_separators(path(4));
        REQUIRE(res.records.size() == 2);
        CHECK(res.records[0].separator == VertexSet{1});
        CHECK(res.records[1].separator == VertexSet{2});
        CHECK(res.all_stable);
        CHECK(!res.witness);
    }
    SUBCASE("K4 has no separators, vacuously stable") {
        auto res = all_minimal_separators(complete(4));
        CHECK(res.records.empty());
        CHECK(res.all_stable);
    }
    SUBCASE("diamond has the non-stable separator {1,2}") {
        auto res = all_minimal_separators(diamond());
        CHECK(!res.all_stable);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->separator == VertexSet{1, 2});
    }
    SUBCASE("separator sets are deduplicated across witnessing pairs") {
        // in P4 the separator {1} serves pairs (0,2) and (0,3); one record
        auto res = all_minimal_separators(path(4));
        CHECK(res.records.size() == 2);
        CHECK(res.records[0].a == 0);
        CHECK(res.records[0].b == 2);  // first witnessing pair in lex order
    }
    SUBCASE("cap truncates the union") {
        auto res = all_minimal_separators(cycle(6), 2);
        CHECK(res.records.size() == 2);
        CHECK(res.truncated);
        CHECK(!all_minimal_separators(cycle(6)).truncated);
    }
}

TEST_CASE("contractible_edges") {
    SUBCASE("every C4 edge is contractible") {
        auto rep = contractible_edges(cycle(4));
        CHECK(rep.k == 2);
        CHECK(rep.contractible.size() == 4);
        CHECK(rep.non_contractible.empty());
    }
    SUBCASE("every C5 edge is contractible") {
        auto rep = contractible_edges(cycle(5));
        CHECK(rep.contractible.size() == 5);
    }
    SUBCASE("the diamond chord is the only non-contractible edge") {
        auto rep = contractible_edges(diamond());
        CHECK(rep.k == 2);
        CHECK(rep.non_contractible == EdgeSet{{1, 2}});
        CHECK(rep.contractible.size() == 4);
        REQUIRE(rep.blocking_separators.count({1, 2}) == 1);
        CHECK(rep.blocking_separators.at({1, 2}) == VertexSet{1, 2});
    }
    SUBCASE("complete and disconnected graphs are rejected") {
        CHECK_THROWS_AS(contractible_edges(complete(4)), domain_error);
        CHECK_THROWS_AS(contractible_edges(Graph(3, {{0, 1}})), domain_error);
    }
    SUBCASE("contraction keeps kappa exactly for contractible edges, n <= 8") {
        std::mt19937_64 rng(7);
        int tested = 0;
        while (tested < 60) {
            int n = 4 + int(rng() % 5);
            Graph g = generate({GeneratorSpec::Kind::random_gnp, n,
                                0.3 + double(rng() % 50) / 100.0, rng()});
            if (!is_connected(g) || g.edge_count() == std::int64_t(n) * (n - 1) / 2) continue;
            ++tested;
            auto rep = contractible_edges(g);
            for (auto e : g.edges()) {
                bool contractible = std::binary_search(rep.contractible.begin(),
                                                       rep.contractible.end(), e);
                Graph after = contract_edge(g, e.first, e.second);
                CHECK(contractible == (vertex_connectivity(after) >= rep.k));
            }
        }
    }
}

TEST_CASE("is_edge_separator and minimality") {
    Graph p3 = path(3);
    CHECK(is_edge_separator(p3, 0, 2, {{0, 1}}));
    CHECK(is_minimal_edge_separator(p3, 0, 2, {{0, 1}}));
    Graph tri = complete(3);
    SUBCASE("triangle: two edges at one vertex are minimal but no matching") {
        EdgeSet cut{{0, 1}, {0, 2}};
        CHECK(is_minimal_edge_separator(tri, 0, 1, cut));
        CHECK(!is_matching(tri, cut));
    }
    SUBCASE("the whole triangle edge set is not minimal") {
        CHECK(!is_minimal_edge_separator(tri, 0, 1, {{0, 1}, {0, 2}, {1, 2}}));
    }
    SUBCASE("non-separating cuts are a domain error") {
        CHECK_THROWS_AS(is_minimal_edge_separator(tri, 0, 1, {{0, 1}}), domain_error);
        CHECK_THROWS_AS(is_edge_separator(tri, 0, 1, {{0, 3}}), range_error);
    }
}

TEST_CASE("enumerate_minimal_ab_edge_separators") {
    SUBCASE("P3 has the two path edges as cuts") {
        auto en = enumerate_minimal_ab_edge_separators(path(3), 0, 2);
        REQUIRE(en.records.size() == 2);
        CHECK(en.records[0].cut == EdgeSet{{0, 1}});
        CHECK(en.records[1].cut == EdgeSet{{1, 2}});
    }
    SUBCASE("triangle pair (0,1): the two connected bipartitions") {
        auto en = enumerate_minimal_ab_edge_separators(complete(3), 0, 1);
        REQUIRE(en.records.size() == 2);
        CHECK(en.records[0].cut == EdgeSet{{0, 1}, {0, 2}});
        CHECK(en.records[1].cut == EdgeSet{{0, 1}, {1, 2}});
    }
    SUBCASE("C4 opposite pair: four cuts of size two") {
        auto en = enumerate_minimal_ab_edge_separators(cycle(4), 0, 2);
        REQUIRE(en.records.size() == 4);
        for (const auto& rec : en.records) CHECK(rec.cut.size() == 2);
    }
    SUBCASE("disconnected graphs are rejected") {
        CHECK_THROWS_AS(enumerate_minimal_ab_edge_separators(Graph(3, {{0, 1}}), 0, 2),
                        domain_error);
    }
    SUBCASE("cap truncates and reports it") {
        auto capped = enumerate_minimal_ab_edge_separators(cycle(4), 0, 2, 2);
        CHECK(capped.records.size() == 2);
        CHECK(capped.truncated);
    }
}

TEST_CASE("edge-cut enumeration equals the subset oracle on every graph with n <= 5") {
    for (int n = 2; n <= 5; ++n)
        enumerate_graph_masks(n, 0, graph_mask_space(n), true, [&](const Graph& g) {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    auto fast = enumerate_minimal_ab_edge_separators(g, a, b);
                    auto brute = brute_force_minimal_edge_separators(g, a, b);
                    REQUIRE(fast.records.size() == brute.size());
                    for (std::size_t i = 0; i < brute.size(); ++i) {
                        CHECK(fast.records[i].cut == brute[i]);
                        CHECK(fast.records[i].cut.size() >= 1);
                        // the cut is the whole boundary between its two sides
                        CHECK(is_minimal_edge_separator(g, a, b, fast.records[i].cut));
                    }
                }
            return true;
        });
}

TEST_CASE("matching_edge_separator_property") {
    SUBCASE("trees hold, with single-edge cuts") {
        Graph t(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
        auto res = matching_edge_separator_property(t);
        CHECK(res.holds);
    }
    SUBCASE("triangle fails with a two-edges-at-a-vertex witness") {
        auto res = matching_edge_separator_property(complete(3));
        CHECK(!res.holds);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->cut == EdgeSet{{0, 1}, {0, 2}});
        CHECK(!res.witness->is_matching);
    }
    SUBCASE("C4 fails") {
        auto res = matching_edge_separator_property(cycle(4));
        CHECK(!res.holds);
        REQUIRE(res.witness.has_value());
        CHECK(res.witness->cut.size() == 2);
    }
    SUBCASE("disconnected graphs are rejected") {
        CHECK_THROWS_AS(matching_edge_separator_property(Graph(2, {})), domain_error);
    }
}
