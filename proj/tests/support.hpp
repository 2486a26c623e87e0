// Independent oracles and fixtures shared by the unit tests and the
// acceptance binary. Nothing here calls the routine it is checking.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "polyhg/energy.hpp"
#include "polyhg/generators.hpp"
#include "polyhg/hypergraph.hpp"
#include "polyhg/layout.hpp"

namespace oracle {

using namespace polyhg;

// ---------------------------------------------------------------- fixtures

inline Hypergraph from_lists(std::size_t vertices, const std::vector<std::vector<Index>>& edges) {
    Hypergraph h;
    for (std::size_t i = 0; i < vertices; ++i) h.add_vertex("v" + std::to_string(i));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        h.add_hyperedge("e" + std::to_string(i), std::span<const Index>(edges[i]));
    }
    return h;
}

// Two hyperedges sharing three vertices.
inline Hypergraph three_adjacent_pair() { return from_lists(4, {{0, 1, 2, 3}, {0, 1, 2}}); }

// Three hyperedges sharing the same two vertices.
inline Hypergraph two_adjacent_triple() { return from_lists(3, {{0, 1}, {0, 1}, {0, 1, 2}}); }

// Vertex 0 ringed by triangles e0..e2 through u1..u3 (vertices 1..3), plus
// a pendant digon e3 to vertex 4.
inline Hypergraph strangled_vertex() {
    return from_lists(5, {{0, 3, 1}, {0, 1, 2}, {0, 2, 3}, {0, 4}});
}

inline Hypergraph strangled_vertex_without_pendant() {
    return from_lists(4, {{0, 3, 1}, {0, 1, 2}, {0, 2, 3}});
}

// Three vertices, each in the same three hyperedges: the Konig graph is K3,3.
inline Hypergraph k33() { return from_lists(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}); }

// Two triangles on the common side (0,1), with the apex of the second
// folded inside the first.
inline Hypergraph folded_triangles() { return from_lists(4, {{0, 1, 2}, {0, 1, 3}}); }

inline std::vector<Vec2> folded_positions() {
    return {{0, 0}, {1, 0}, {0.5, 0.87}, {0.55, 0.7}};
}

// ------------------------------------------------------------------ corpus

inline Hypergraph random_small(std::mt19937_64& rng, std::size_t max_total, std::size_t min_total = 2) {
    std::uniform_int_distribution<std::size_t> total(min_total, max_total);
    const std::size_t n = total(rng);
    std::uniform_int_distribution<std::size_t> split(1, n - 1);
    const std::size_t v = split(rng);
    std::uniform_int_distribution<std::size_t> card(1, std::max<std::size_t>(1, std::min<std::size_t>(v, 4)));
    return random_connected(v, n - v, card(rng), rng);
}

// ------------------------------------------------------------- betweenness

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational& operator+=(Rational o) {
        const std::int64_t g = std::gcd(den, o.den);
        num = num * (o.den / g) + o.num * (den / g);
        den = den / g * o.den;
        const std::int64_t r = std::gcd(num < 0 ? -num : num, den);
        if (r > 1) {
            num /= r;
            den /= r;
        }
        return *this;
    }
};

// Konig graph as plain adjacency lists over all live elements.
struct PlainGraph {
    std::vector<ElementId> nodes;
    std::vector<std::vector<std::size_t>> adj;
};

inline PlainGraph plain_konig(const Hypergraph& h) {
    PlainGraph g;
    std::map<ElementId, std::size_t> at;
    for (Index v : h.vertices()) at[ElementId::vertex(v)] = 0;
    for (Index e : h.hyperedges()) at[ElementId::hyperedge(e)] = 0;
    for (auto& [id, i] : at) {
        i = g.nodes.size();
        g.nodes.push_back(id);
    }
    g.adj.resize(g.nodes.size());
    for (Index e : h.hyperedges()) {
        for (Index v : h.hyperedge_vertices(e)) {
            const std::size_t a = at[ElementId::hyperedge(e)];
            const std::size_t b = at[ElementId::vertex(v)];
            g.adj[a].push_back(b);
            g.adj[b].push_back(a);
        }
    }
    return g;
}

// Shortest-path counts from every source by breadth-first search.
inline void bfs_counts(const PlainGraph& g, std::size_t s, std::vector<int>& dist,
                       std::vector<std::int64_t>& sigma) {
    const std::size_t n = g.nodes.size();
    dist.assign(n, -1);
    sigma.assign(n, 0);
    dist[s] = 0;
    sigma[s] = 1;
    std::vector<std::size_t> frontier{s};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t u : frontier) {
            for (std::size_t w : g.adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    next.push_back(w);
                }
                if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
            }
        }
        frontier = std::move(next);
    }
}

// Betweenness by exhaustive pair enumeration: for every unordered pair
// {s,t} and every other node x on a shortest s-t path, sigma_sx*sigma_xt/sigma_st.
inline std::map<ElementId, Rational> betweenness_rational(const Hypergraph& h) {
    const PlainGraph g = plain_konig(h);
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<int>> dist(n);
    std::vector<std::vector<std::int64_t>> sigma(n);
    for (std::size_t s = 0; s < n; ++s) bfs_counts(g, s, dist[s], sigma[s]);
    std::map<ElementId, Rational> out;
    for (std::size_t x = 0; x < n; ++x) {
        Rational acc;
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t t = s + 1; t < n; ++t) {
                if (s == x || t == x || dist[s][t] < 0) continue;
                if (dist[s][x] + dist[x][t] != dist[s][t]) continue;
                acc += Rational{sigma[s][x] * sigma[x][t], sigma[s][t]};
            }
        }
        out[g.nodes[x]] = acc;
    }
    return out;
}

// ------------------------------------------------------- forbidden patterns

inline std::vector<Index> shared_of(const Hypergraph& h, ElementId x, ElementId y) {
    std::vector<Index> out;
    for (Index a : h.incident(x)) {
        for (Index b : h.incident(y)) {
            if (a == b) out.push_back(a);
        }
    }
    return out;
}

// Unordered same-kind pairs sharing at least three incident elements.
inline std::set<std::pair<Index, Index>> cluster_pairs(const Hypergraph& h, ElementKind kind) {
    std::set<std::pair<Index, Index>> out;
    const auto ids = h.ids(kind);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (shared_of(h, {kind, ids[i]}, {kind, ids[j]}).size() >= 3) out.insert({ids[i], ids[j]});
        }
    }
    return out;
}

// Is `center` strangled: some cyclic sequence r_1 s_1 r_2 s_2 ... r_k s_k
// with k >= 3 distinct incident elements r_i (not all of them) and
// distinct same-kind elements s_i != center with s_i incident to both
// r_i and r_{i+1}. Tried by brute force over every ordered choice.
inline bool strangled(const Hypergraph& h, ElementId center) {
    const auto inc = h.incident(center);
    const std::vector<Index> ring(inc.begin(), inc.end());
    const ElementKind rk = opposite(center.kind);
    const std::size_t n = ring.size();
    if (n < 4) return false;
    auto spokes_between = [&](Index a, Index b) {
        std::vector<Index> out;
        for (Index s : shared_of(h, {rk, a}, {rk, b})) {
            if (s != center.index) out.push_back(s);
        }
        return out;
    };
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
        if (k < 3 || k == n) continue;
        std::vector<Index> chosen;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) chosen.push_back(ring[i]);
        }
        std::sort(chosen.begin(), chosen.end());
        do {
            // Assign distinct spokes to consecutive ring pairs.
            std::vector<Index> used;
            std::function<bool(std::size_t)> assign = [&](std::size_t i) {
                if (i == k) return true;
                for (Index s : spokes_between(chosen[i], chosen[(i + 1) % k])) {
                    if (std::find(used.begin(), used.end(), s) != used.end()) continue;
                    used.push_back(s);
                    if (assign(i + 1)) return true;
                    used.pop_back();
                }
                return false;
            };
            if (assign(0)) return true;
        } while (std::next_permutation(chosen.begin() + 1, chosen.end()));
    }
    return false;
}

inline std::set<Index> strangled_set(const Hypergraph& h, ElementKind kind) {
    std::set<Index> out;
    for (Index x : h.ids(kind)) {
        if (strangled(h, {kind, x})) out.insert(x);
    }
    return out;
}

// ---------------------------------------------------------------- planarity

// Planarity by enumerating rotation systems: a connected graph is planar
// iff some rotation system traces V - E + F = 2 faces. Returns nullopt when
// the enumeration would exceed `budget` systems.
inline std::optional<bool> planar_by_rotations(const PlainGraph& g, std::size_t budget = 400000) {
    const std::size_t n = g.nodes.size();
    std::size_t edges = 0;
    for (const auto& a : g.adj) edges += a.size();
    edges /= 2;
    if (n < 5 || edges < 9) return true;
    if (edges > 3 * n - 6) return false;
    double systems = 1;
    for (const auto& a : g.adj) {
        for (std::size_t i = 2; i < a.size(); ++i) systems *= static_cast<double>(i);
    }
    if (systems > static_cast<double>(budget)) return std::nullopt;

    std::vector<std::vector<std::size_t>> rot = g.adj;
    for (auto& r : rot) std::sort(r.begin(), r.end());
    auto faces = [&]() {
        std::map<std::pair<std::size_t, std::size_t>, bool> seen;
        std::size_t count = 0;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v : rot[u]) {
                if (seen[{u, v}]) continue;
                ++count;
                std::size_t a = u, b = v;
                while (!seen[{a, b}]) {
                    seen[{a, b}] = true;
                    const auto& rb = rot[b];
                    const auto pos = static_cast<std::size_t>(std::find(rb.begin(), rb.end(), a) - rb.begin());
                    const std::size_t c = rb[(pos + 1) % rb.size()];
                    a = b;
                    b = c;
                }
            }
        }
        return count;
    };
    std::function<bool(std::size_t)> search = [&](std::size_t u) {
        if (u == n) return static_cast<std::size_t>(n) + faces() == edges + 2;
        auto& r = rot[u];
        if (r.size() <= 2) return search(u + 1);
        // Fix the first neighbour; permute the rest.
        std::sort(r.begin() + 1, r.end());
        do {
            if (search(u + 1)) return true;
        } while (std::next_permutation(r.begin() + 1, r.end()));
        return false;
    };
    return search(0);
}

// ------------------------------------------------------------- simplification

// Removal legality from its definition: after deleting `x`, every pair of
// its former incident elements is still adjacent and none is left empty.
inline bool removal_legal_by_definition(const Hypergraph& h, ElementId x) {
    Hypergraph g = h;
    const auto inc = h.incident(x);
    const std::vector<Index> before(inc.begin(), inc.end());
    g.erase(x);
    const ElementKind ok = opposite(x.kind);
    for (Index o : before) {
        if (g.degree({ok, o}) == 0) return false;
    }
    for (std::size_t i = 0; i < before.size(); ++i) {
        for (std::size_t j = i + 1; j < before.size(); ++j) {
            if (shared_of(g, {ok, before[i]}, {ok, before[j]}).empty()) return false;
        }
    }
    return true;
}

// ----------------------------------------------------------------- geometry

inline double monte_carlo_overlap(const std::vector<Vec2>& p, const std::vector<Vec2>& q,
                                  std::size_t samples, std::mt19937_64& rng) {
    auto inside = [](const std::vector<Vec2>& poly, Vec2 x) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Vec2 a = poly[i], b = poly[(i + 1) % poly.size()];
            if ((b.x - a.x) * (x.y - a.y) - (b.y - a.y) * (x.x - a.x) < 0) return false;
        }
        return true;
    };
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (Vec2 v : p) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
    std::size_t hit = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const Vec2 s{ux(rng), uy(rng)};
        if (inside(p, s) && inside(q, s)) ++hit;
    }
    return (x1 - x0) * (y1 - y0) * static_cast<double>(hit) / static_cast<double>(samples);
}

inline std::vector<Vec2> random_convex(std::mt19937_64& rng, Vec2 center, double radius) {
    std::uniform_real_distribution<double> ang(0, 2 * M_PI);
    std::uniform_int_distribution<int> count(3, 8);
    std::vector<double> a(static_cast<std::size_t>(count(rng)));
    for (double& x : a) x = ang(rng);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::vector<Vec2> out;
    for (double x : a) out.push_back({center.x + radius * std::cos(x), center.y + radius * std::sin(x)});
    return out;
}

// ------------------------------------------------------------------ energy

// Relative error of the analytic gradient against central differences,
// as ||g - fd|| / ||(g, fd)||. Negative when both vanish.
inline double gradient_error(const EnergyModel& m, const std::vector<Vec2>& p, Phase phase,
                             unsigned terms, double step = 1e-6) {
    std::vector<Vec2> g(p.size());
    (void)m.evaluate(p, phase, g, terms);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (int c = 0; c < 2; ++c) {
            auto q = p;
            (c ? q[i].y : q[i].x) += step;
            const double fp = m.evaluate(q, phase, {}, terms);
            q = p;
            (c ? q[i].y : q[i].x) -= step;
            const double fm = m.evaluate(q, phase, {}, terms);
            const double fd = (fp - fm) / (2 * step);
            const double an = c ? g[i].y : g[i].x;
            num += (fd - an) * (fd - an);
            den += an * an + fd * fd;
        }
    }
    if (den < 1e-20) return -1;
    return std::sqrt(num / den);
}

// Dual layer at the centroids of the hyperedges, in hyperedge-id order.
inline void attach_dual_centroids(const Hypergraph& h, Layout& l) {
    l.dual_positions.emplace(h.id_bound(ElementKind::Hyperedge),
                             Vec2{std::nan(""), std::nan("")});
    for (Index e : h.hyperedges()) {
        Vec2 c;
        for (Index v : h.hyperedge_vertices(e)) c += l.positions[v];
        (*l.dual_positions)[e] = (1.0 / static_cast<double>(h.card(e))) * c;
    }
}

}  // namespace oracle
