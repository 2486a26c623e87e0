#include "doctest.h"
#include "support.hpp"

#include "polyhg/planarity.hpp"
#include "polyhg/simplify.hpp"

using namespace polyhg;

namespace {

std::size_t of_kind(const std::vector<ForbiddenInstance>& all, ForbiddenKind k) {
    return static_cast<std::size_t>(
        std::count_if(all.begin(), all.end(), [&](const auto& f) { return f.kind == k; }));
}

// Re-checks a witness against the defining predicate of its kind.
bool witness_holds(const Hypergraph& h, const ForbiddenInstance& f) {
    switch (f.kind) {
        case ForbiddenKind::ThreeAdjacentPair:
        case ForbiddenKind::TwoAdjacentTriple: {
            if (f.operands.size() != 2 || f.witness.size() < 3) return false;
            for (ElementId w : f.witness) {
                for (ElementId o : f.operands) {
                    if (!h.incident_to(o, w.index)) return false;
                }
            }
            return true;
        }
        case ForbiddenKind::StrangledVertex:
        case ForbiddenKind::StrangledHyperedge: {
            const ElementId c = f.operands.at(0);
            const std::size_t k = f.witness.size() / 2;
            if (k < 3 || k >= h.degree(c)) return false;
            std::set<ElementId> seen(f.witness.begin(), f.witness.end());
            if (seen.size() != f.witness.size()) return false;
            for (std::size_t i = 0; i < k; ++i) {
                const ElementId r = f.witness[2 * i], s = f.witness[2 * i + 1];
                const ElementId rn = f.witness[(2 * i + 2) % f.witness.size()];
                if (!h.incident_to(c, r.index) || s == c) return false;
                if (!h.incident_to(r, s.index) || !h.incident_to(rn, s.index)) return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_SUITE("planarity") {

TEST_CASE("three-adjacent pair fixture") {
    const Hypergraph h = oracle::three_adjacent_pair();
    const auto f = three_adjacent_pairs(h);
    REQUIRE(f.size() == 1);
    CHECK(f[0].operands == std::vector<ElementId>{ElementId::hyperedge(0), ElementId::hyperedge(1)});
    CHECK(f[0].witness.size() == 3);
    CHECK(two_adjacent_triples(h.dual()).size() == 1);
}

TEST_CASE("cluster detectors ignore smaller intersections") {
    CHECK(three_adjacent_pairs(oracle::from_lists(3, {{0, 1, 2}, {0, 1}, {1, 2}})).empty());
    CHECK(two_adjacent_triples(oracle::from_lists(3, {{0, 1}, {0, 1, 2}})).empty());
}

TEST_CASE("two-adjacent triple fixture") {
    const auto f = two_adjacent_triples(oracle::two_adjacent_triple());
    REQUIRE(f.size() == 1);
    CHECK(f[0].operands == std::vector<ElementId>{ElementId::vertex(0), ElementId::vertex(1)});
    CHECK(f[0].witness.size() == 3);
}

TEST_CASE("strangled vertex fixture and its dual") {
    const Hypergraph h = oracle::strangled_vertex();
    const auto sv = strangled_vertices(h);
    REQUIRE(sv.size() == 1);
    CHECK(sv[0].operands[0] == ElementId::vertex(0));
    CHECK(sv[0].witness.size() == 6);
    CHECK(witness_holds(h, sv[0]));
    CHECK(strangled_vertices(oracle::strangled_vertex_without_pendant()).empty());
    const auto sh = strangled_hyperedges(h.dual());
    REQUIRE(sh.size() == 1);
    CHECK(sh[0].operands[0] == ElementId::hyperedge(0));
}

TEST_CASE("tree-like link is not strangled") {
    const Hypergraph h = oracle::from_lists(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4, 5}});
    CHECK(strangled_vertices(h).empty());
    CHECK(strangled_hyperedges(oracle::from_lists(3, {{0, 1, 2}})).empty());
}

TEST_CASE("step cap surfaces as indeterminate") {
    CHECK_THROWS_AS((void)strangled_vertices(oracle::strangled_vertex(), 1), PlanarityIndeterminate);
}

TEST_CASE("forbidden count over disjoint fixtures adds up") {
    // Four fixtures side by side; ids offset per component.
    Hypergraph h;
    auto append = [&](const Hypergraph& part) {
        const Index base = static_cast<Index>(h.id_bound(ElementKind::Vertex));
        for (std::size_t k = 0; k < part.num_vertices(); ++k) h.add_vertex();
        for (Index e : part.hyperedges()) {
            std::vector<Index> m;
            for (Index v : part.hyperedge_vertices(e)) m.push_back(base + v);
            h.add_hyperedge("", std::span<const Index>(m));
        }
    };
    append(oracle::three_adjacent_pair());
    append(oracle::two_adjacent_triple());
    append(oracle::strangled_vertex());
    append(oracle::strangled_vertex().dual());
    CHECK(forbidden_count(h) == 4);
}

TEST_CASE("detectors match exhaustive enumeration") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        const Hypergraph h = oracle::random_small(rng, 10);
        const auto all = forbidden_instances(h);
        std::set<std::pair<Index, Index>> pairs, triples;
        std::set<Index> sv, sh;
        for (const auto& f : all) {
            CHECK(witness_holds(h, f));
            if (f.kind == ForbiddenKind::ThreeAdjacentPair) pairs.insert({f.operands[0].index, f.operands[1].index});
            if (f.kind == ForbiddenKind::TwoAdjacentTriple) triples.insert({f.operands[0].index, f.operands[1].index});
            if (f.kind == ForbiddenKind::StrangledVertex) sv.insert(f.operands[0].index);
            if (f.kind == ForbiddenKind::StrangledHyperedge) sh.insert(f.operands[0].index);
        }
        CHECK(pairs == oracle::cluster_pairs(h, ElementKind::Hyperedge));
        CHECK(triples == oracle::cluster_pairs(h, ElementKind::Vertex));
        CHECK(sv == oracle::strangled_set(h, ElementKind::Vertex));
        CHECK(sh == oracle::strangled_set(h, ElementKind::Hyperedge));
    }
}

TEST_CASE("detector counts mirror under duality") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        const Hypergraph h = oracle::random_small(rng, 16);
        const auto p = forbidden_instances(h), d = forbidden_instances(h.dual());
        CHECK(of_kind(p, ForbiddenKind::ThreeAdjacentPair) == of_kind(d, ForbiddenKind::TwoAdjacentTriple));
        CHECK(of_kind(p, ForbiddenKind::StrangledVertex) == of_kind(d, ForbiddenKind::StrangledHyperedge));
        CHECK(p.size() == d.size());
    }
}

TEST_CASE("zykov planarity against rotation-system enumeration") {
    CHECK(is_zykov_planar(oracle::from_lists(4, {{0, 1}, {1, 2}, {1, 3}})));
    CHECK_FALSE(is_zykov_planar(oracle::k33()));
    std::mt19937_64 rng(23);
    int decided = 0;
    for (int i = 0; i < 200; ++i) {
        const Hypergraph h = oracle::random_small(rng, 12, 8);
        const auto expected = oracle::planar_by_rotations(oracle::plain_konig(h), 20000);
        if (!expected) continue;
        ++decided;
        CHECK(is_zykov_planar(h) == *expected);
    }
    CHECK(decided >= 100);
}

TEST_CASE("convex polygon planarity") {
    std::mt19937_64 rng(24);
    CHECK(convex_polygon_planar(polygon_tree(8, rng)));
    CHECK_FALSE(convex_polygon_planar(oracle::three_adjacent_pair()));
    CHECK_FALSE(convex_polygon_planar(oracle::k33()));
    const PlanarityReport r = planarity_report(oracle::strangled_vertex());
    CHECK(r.zykov_planar);
    CHECK_FALSE(r.convex_polygon_planar);
    CHECK(r.forbidden_count == 1);
}

TEST_CASE("one designed operation clears each fixture") {
    auto after = [](Hypergraph h, OpKey key) {
        const auto [removed, retained] = merger_roles(h, key.first_id(), key.second_id());
        AtomicOperation op;
        op.kind = key.kind;
        op.removed = removed;
        op.retained = retained;
        (void)apply(h, op);
        return forbidden_count(h);
    };
    const Hypergraph a = oracle::three_adjacent_pair();
    CHECK(after(a, OpKey::merger(ElementId::hyperedge(0), ElementId::hyperedge(1))) == 0);
    CHECK(after(a.dual(), OpKey::merger(ElementId::vertex(0), ElementId::vertex(1))) == 0);
    const Hypergraph c = oracle::strangled_vertex();
    CHECK(after(c, OpKey::merger(ElementId::vertex(0), ElementId::vertex(1))) == 0);
    CHECK(after(c.dual(), OpKey::merger(ElementId::hyperedge(0), ElementId::hyperedge(1))) == 0);
}

}
