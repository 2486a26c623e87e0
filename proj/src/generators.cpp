#include "polyhg/generators.hpp"

#include <algorithm>
#include <map>
#include <numbers>

#include "polyhg/planarity.hpp"

namespace polyhg {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

Hypergraph from_members(std::size_t vertices, const std::vector<std::vector<Index>>& edges) {
    Hypergraph h;
    for (std::size_t v = 0; v < vertices; ++v) h.add_vertex("v" + std::to_string(v));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        h.add_hyperedge("e" + std::to_string(e), edges[e]);
    }
    return h;
}

}  // namespace

Hypergraph random_connected(std::size_t vertices, std::size_t hyperedges,
                            std::size_t max_cardinality, std::mt19937_64& rng) {
    if (vertices == 0 || hyperedges == 0 || max_cardinality == 0) {
        throw HypergraphError("random_connected needs at least one vertex and hyperedge");
    }
    std::vector<std::vector<Index>> edges(hyperedges);
    // Random spanning tree of the bipartite incidence graph.
    std::vector<ElementId> order;
    for (Index v = 1; v < vertices; ++v) order.push_back(ElementId::vertex(v));
    for (Index e = 1; e < hyperedges; ++e) order.push_back(ElementId::hyperedge(e));
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Index> placed_v{0}, placed_e{0};
    edges[0].push_back(0);
    for (ElementId id : order) {
        if (id.is_vertex()) {
            std::vector<Index> room;
            for (Index e : placed_e) {
                if (edges[e].size() < max_cardinality) room.push_back(e);
            }
            Index e = room.empty()
                          ? *std::min_element(placed_e.begin(), placed_e.end(),
                                              [&](Index a, Index b) {
                                                  return edges[a].size() < edges[b].size();
                                              })
                          : room[uniform(rng, 0, room.size() - 1)];
            edges[e].push_back(id.index);
            placed_v.push_back(id.index);
        } else {
            edges[id.index].push_back(placed_v[uniform(rng, 0, placed_v.size() - 1)]);
            placed_e.push_back(id.index);
        }
    }
    // Extra incidences up to a random target cardinality.
    for (auto& members : edges) {
        const std::size_t target = uniform(rng, 1, max_cardinality);
        while (members.size() < target && members.size() < vertices) {
            const auto v = static_cast<Index>(uniform(rng, 0, vertices - 1));
            if (std::find(members.begin(), members.end(), v) == members.end()) members.push_back(v);
        }
    }
    return from_members(vertices, edges);
}

Hypergraph polygon_tree(std::size_t count, std::mt19937_64& rng) {
    if (count == 0) throw HypergraphError("polygon_tree needs at least one polygon");
    const double budget = 1.5 * std::numbers::pi;
    auto corner = [](std::size_t n) { return std::numbers::pi - 2.0 * std::numbers::pi / double(n); };

    while (true) {
        std::vector<std::vector<Index>> polys;  // cyclic vertex order
        std::vector<double> angle;              // angle demand per vertex
        std::map<std::pair<Index, Index>, int> side_use;
        auto add = [&](std::vector<Index> cyc) {
            const std::size_t n = cyc.size();
            for (std::size_t k = 0; k < n; ++k) {
                const Index a = cyc[k], b = cyc[(k + 1) % n];
                if (a >= angle.size()) angle.resize(a + 1, 0.0);
                angle[a] += corner(n);
                ++side_use[{std::min(a, b), std::max(a, b)}];
            }
            polys.push_back(std::move(cyc));
        };
        auto fresh = [&](std::size_t k) {
            std::vector<Index> out;
            for (std::size_t i = 0; i < k; ++i) out.push_back(static_cast<Index>(angle.size() + i));
            return out;
        };

        std::vector<Index> first = fresh(uniform(rng, 3, 4));
        add(first);
        bool stuck = false;
        while (polys.size() < count && !stuck) {
            const std::size_t n = uniform(rng, 3, 4);
            const double need = corner(n);
            bool done = false;
            for (int attempt = 0; attempt < 50 && !done; ++attempt) {
                const auto& host = polys[uniform(rng, 0, polys.size() - 1)];
                const std::size_t k = uniform(rng, 0, host.size() - 1);
                const Index a = host[k];
                const Index b = host[(k + 1) % host.size()];
                if (rng() % 2 == 0) {
                    if (side_use[{std::min(a, b), std::max(a, b)}] != 1) continue;
                    if (angle[a] + need > budget || angle[b] + need > budget) continue;
                    std::vector<Index> cyc{b, a};
                    for (Index v : fresh(n - 2)) cyc.push_back(v);
                    add(cyc);
                } else {
                    if (angle[a] + need > budget) continue;
                    std::vector<Index> cyc{a};
                    for (Index v : fresh(n - 1)) cyc.push_back(v);
                    add(cyc);
                }
                done = true;
            }
            stuck = !done;
        }
        if (stuck) continue;
        Hypergraph h = from_members(angle.size(), polys);
        if (convex_polygon_planar(h)) return h;
    }
}

Hypergraph clustered(std::size_t vertices, std::size_t hyperedges, std::size_t clusters,
                     std::mt19937_64& rng) {
    if (vertices < 3 || hyperedges < 2 * clusters || hyperedges == 0) {
        throw HypergraphError("clustered: too few vertices or hyperedges");
    }
    std::vector<std::vector<Index>> edges;
    std::vector<Index> used;
    Index next = 0;
    auto take_new = [&](std::vector<Index>& m) {
        if (next < vertices) {
            m.push_back(next);
            used.push_back(next++);
        }
    };
    auto take_used = [&](std::vector<Index>& m) {
        if (used.empty()) return take_new(m);
        for (int attempt = 0; attempt < 8; ++attempt) {
            const Index v = used[uniform(rng, 0, used.size() - 1)];
            if (std::find(m.begin(), m.end(), v) == m.end()) {
                m.push_back(v);
                return;
            }
        }
    };

    for (std::size_t c = 0; c < clusters && edges.size() < hyperedges; ++c) {
        std::vector<Index> triple;
        take_used(triple);
        take_new(triple);
        take_new(triple);
        const std::size_t size = std::min<std::size_t>(uniform(rng, 2, 3), hyperedges - edges.size());
        for (std::size_t k = 0; k < size; ++k) {
            std::vector<Index> m = triple;
            const std::size_t extra = uniform(rng, 0, 2);
            for (std::size_t i = 0; i < extra; ++i) take_new(m);
            edges.push_back(std::move(m));
        }
    }
    while (edges.size() < hyperedges) {
        std::vector<Index> m;
        const std::size_t card = uniform(rng, 2, 5);
        take_used(m);
        if (rng() % 3 == 0) take_used(m);
        while (m.size() < card && next < vertices) take_new(m);
        while (m.size() < 2 && used.size() > m.size()) take_used(m);
        edges.push_back(std::move(m));
    }
    while (next < vertices) {
        auto& m = edges[uniform(rng, 0, edges.size() - 1)];
        take_new(m);
    }
    // Spread the triples through the list so cluster ids are not contiguous.
    std::shuffle(edges.begin(), edges.end(), rng);
    return from_members(vertices, edges);
}

}  // namespace polyhg
