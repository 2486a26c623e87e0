#include "doctest.h"
#include "support.hpp"

using namespace polyhg;

TEST_SUITE("hypergraph") {

TEST_CASE("build collapses labels into vertices") {
    const Hypergraph h = Hypergraph::build({{"e0", {"a", "b"}}, {"e1", {"b", "c", "b"}}});
    CHECK(h.num_vertices() == 3);
    CHECK(h.num_hyperedges() == 2);
    CHECK(h.card(1) == 2);
    CHECK(h.deg(1) == 2);
    CHECK(h.label(ElementId::vertex(2)) == "c");
    CHECK(h.check_transpose());
}

TEST_CASE("build rejects an empty member list") {
    CHECK_THROWS_AS((void)Hypergraph::build({{"x", {}}}), HypergraphError);
}

TEST_CASE("add_hyperedge rejects empty and unknown members") {
    Hypergraph h;
    h.add_vertex();
    CHECK_THROWS_AS(h.add_hyperedge("e", std::span<const Index>()), HypergraphError);
    CHECK_THROWS_AS(h.add_hyperedge("e", {0, 5}), HypergraphError);
}

TEST_CASE("queries on missing elements throw") {
    Hypergraph h = oracle::from_lists(2, {{0, 1}});
    CHECK_THROWS_AS((void)h.incident(ElementId::vertex(9)), HypergraphError);
    h.erase(ElementId::vertex(1));
    CHECK_FALSE(h.contains(ElementId::vertex(1)));
    CHECK_THROWS_AS((void)h.incident(ElementId::vertex(1)), HypergraphError);
    CHECK(h.card(0) == 1);
}

TEST_CASE("erase then revive restores the hypergraph exactly") {
    const Hypergraph h = oracle::from_lists(4, {{0, 1, 2}, {2, 3}, {1, 3}});
    Hypergraph g = h;
    const auto inc = h.incident(ElementId::vertex(2));
    const std::vector<Index> saved(inc.begin(), inc.end());
    g.erase(ElementId::vertex(2));
    CHECK(g.num_vertices() == 3);
    CHECK(g.id_bound(ElementKind::Vertex) == 4);
    g.revive(ElementId::vertex(2), saved);
    CHECK(g == h);
    CHECK_THROWS_AS(g.revive(ElementId::vertex(2), saved), HypergraphError);
}

TEST_CASE("dual swaps roles and is an involution") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const Hypergraph h = oracle::random_small(rng, 20);
        const Hypergraph d = h.dual();
        CHECK(d.num_vertices() == h.num_hyperedges());
        for (Index e : h.hyperedges()) {
            const auto a = h.hyperedge_vertices(e);
            const auto b = d.vertex_hyperedges(e);
            CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
        }
        CHECK(d.dual() == h);
    }
}

TEST_CASE("dual of a hypergraph with an isolated vertex throws") {
    Hypergraph h = oracle::from_lists(2, {{0}});
    CHECK_THROWS_AS((void)h.dual(), HypergraphError);
}

TEST_CASE("adjacency and neighborhood") {
    const Hypergraph h = oracle::from_lists(4, {{0, 1, 2}, {0, 1}, {2, 3}});
    CHECK(adjacency(h, ElementId::vertex(0), ElementId::vertex(1)) == 2);
    CHECK(adjacency(h, ElementId::vertex(0), ElementId::vertex(3)) == 0);
    CHECK(adjacency(h, ElementId::hyperedge(0), ElementId::hyperedge(1)) == 2);
    const auto adj = adjacent(h, ElementId::vertex(2));
    REQUIRE(adj.size() == 3);
    CHECK(adj[0] == std::pair<Index, std::size_t>{0, 1});
    const Footprint f = neighborhood(h, ElementId::vertex(3));
    CHECK(f.vertices == std::vector<Index>{2, 3});
    CHECK(f.hyperedges == std::vector<Index>{2});
    CHECK(f.contains(ElementId::hyperedge(2)));
    CHECK_FALSE(f.contains(ElementId::hyperedge(0)));
}

TEST_CASE("footprint merge keeps sorted union") {
    Footprint a{{1, 4}, {0}}, b{{2, 4}, {3}};
    a.merge(b);
    CHECK(a.vertices == std::vector<Index>{1, 2, 4});
    CHECK(a.hyperedges == std::vector<Index>{0, 3});
    CHECK(a.size() == 5);
}

TEST_CASE("connectivity and linearity") {
    CHECK(is_connected(Hypergraph{}));
    CHECK(is_connected(oracle::from_lists(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_connected(oracle::from_lists(4, {{0, 1}, {2, 3}})));
    CHECK(is_linear(oracle::from_lists(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_linear(oracle::three_adjacent_pair()));
}

TEST_CASE("konig graph layout and edge count") {
    const Hypergraph h = oracle::from_lists(3, {{0, 1}, {1, 2}});
    const KonigGraph k = konig(h);
    CHECK(k.size() == 5);
    CHECK(k.edge_count == 4);
    CHECK(k.nodes[3] == ElementId::hyperedge(0));
    CHECK(k.node_of[ElementId::hyperedge(1)] == 4);
}

TEST_CASE("induced and partial sub-hypergraphs keep ids") {
    const Hypergraph h = oracle::from_lists(4, {{0, 1, 2}, {2, 3}, {3}});
    const std::vector<Index> a{2, 3};
    const Hypergraph ha = induced_sub_hypergraph(h, a);
    CHECK(ha.vertices() == a);
    CHECK(ha.card(0) == 1);
    CHECK(ha.contains(ElementId::hyperedge(2)));
    const std::vector<Index> j{1};
    const Hypergraph hj = partial_hypergraph(h, j);
    CHECK(hj.hyperedges() == j);
    CHECK(hj.vertices() == a);
}

TEST_CASE("element id strings") {
    CHECK(to_string(ElementId::vertex(3)) == "v3");
    CHECK(to_string(ElementId::hyperedge(7)) == "e7");
    CHECK(ElementId::vertex(9) < ElementId::hyperedge(0));
    CHECK(ElementId::vertex(2).dual() == ElementId::hyperedge(2));
}

}
