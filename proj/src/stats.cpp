#include "polyhg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polyhg {

namespace {

// Single-source dependency accumulation (Brandes 2001) over an unweighted graph.
void accumulate_from(const KonigGraph& g, std::uint32_t source, std::vector<double>& centrality,
                     std::vector<std::int64_t>& dist, std::vector<double>& sigma,
                     std::vector<double>& delta, std::vector<std::uint32_t>& order,
                     std::vector<std::uint32_t>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    queue.clear();

    dist[source] = 0;
    sigma[source] = 1.0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto v = queue[head];
        order.push_back(v);
        for (auto w : g.adjacency[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
    }
    // Predecessors of w are exactly the neighbours one level closer.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto w = *it;
        for (auto v : g.adjacency[w]) {
            if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
        if (w != source) centrality[w] += delta[w];
    }
}

}  // namespace

ElementMap<double> betweenness_all(const Hypergraph& h) {
    if (!is_connected(h)) throw HypergraphError("betweenness requires a connected hypergraph");
    const KonigGraph g = konig(h);
    const std::size_t n = g.size();
    std::vector<double> centrality(n, 0.0);
    std::vector<std::int64_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::uint32_t> order, queue;
    order.reserve(n);
    queue.reserve(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        accumulate_from(g, s, centrality, dist, sigma, delta, order, queue);
    }
    ElementMap<double> out(h.id_bound(ElementKind::Vertex), h.id_bound(ElementKind::Hyperedge),
                           0.0);
    for (std::size_t i = 0; i < n; ++i) out[g.nodes[i]] = centrality[i] / 2.0;
    return out;
}

double adjacency_factor(const Hypergraph& h, ElementId x, double t) {
    if (!(t >= 0.0)) throw HypergraphError("adjacency exponent t must be non-negative");
    double sum = 0.0;
    for (const auto& [y, a] : adjacent(h, x)) sum += std::pow(static_cast<double>(a), t);
    return sum;
}

ElementMap<double> adjacency_factors(const Hypergraph& h, double t) {
    ElementMap<double> out(h.id_bound(ElementKind::Vertex), h.id_bound(ElementKind::Hyperedge),
                           0.0);
    for (ElementId x : h.elements()) out[x] = adjacency_factor(h, x, t);
    return out;
}

StatTable StatTable::compute(const Hypergraph& h0, double t) {
    StatTable s;
    s.t = t;
    s.betweenness = betweenness_all(h0);
    s.adjacency_factor = adjacency_factors(h0, t);
    return s;
}

void StatTable::refresh(const Hypergraph& h, const Footprint& where) {
    for (ElementKind k : {ElementKind::Vertex, ElementKind::Hyperedge}) {
        for (Index i : where.of(k)) {
            const ElementId x{k, i};
            if (h.contains(x)) adjacency_factor[x] = polyhg::adjacency_factor(h, x, t);
        }
    }
}

namespace {

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void add(const Range& r) {
        lo = std::min(lo, r.lo);
        hi = std::max(hi, r.hi);
    }
    [[nodiscard]] double low() const { return std::isfinite(lo) ? lo : 0.0; }
    [[nodiscard]] double high() const { return std::isfinite(hi) ? hi : 0.0; }
};

Normalizers collect(const Hypergraph& h, const ElementMap<double>& adj,
                    const ElementMap<double>& btw, AdjacencyRange range) {
    Range d, b;
    std::array<Range, 2> a;
    for (ElementId x : h.elements()) {
        d.add(static_cast<double>(h.degree(x)));
        a[slot(x.kind)].add(adj[x]);
        b.add(btw[x]);
    }
    Normalizers n;
    n.d_min = d.low();
    n.d_max = d.high();
    n.b_min = b.low();
    n.b_max = b.high();
    if (range == AdjacencyRange::Joint) {
        Range joint = a[0];
        joint.add(a[1]);
        a = {joint, joint};
    }
    for (std::size_t k = 0; k < 2; ++k) {
        n.a_min[k] = a[k].low();
        n.a_max[k] = a[k].high();
    }
    return n;
}

}  // namespace

Normalizers extrema(const Hypergraph& h0, const Hypergraph& h0_dual, double t,
                    AdjacencyRange range) {
    // Every element of the dual mirrors one of H0, so the union of both
    // element sets spans the same values; both are visited regardless.
    Normalizers primal = collect(h0, adjacency_factors(h0, t), betweenness_all(h0), range);
    Normalizers mirrored = collect(h0_dual, adjacency_factors(h0_dual, t),
                                   betweenness_all(h0_dual), range);
    Normalizers n = primal;
    n.d_min = std::min(primal.d_min, mirrored.d_min);
    n.d_max = std::max(primal.d_max, mirrored.d_max);
    n.b_min = std::min(primal.b_min, mirrored.b_min);
    n.b_max = std::max(primal.b_max, mirrored.b_max);
    for (std::size_t k = 0; k < 2; ++k) {
        // kinds swap in the dual
        n.a_min[k] = std::min(primal.a_min[k], mirrored.a_min[1 - k]);
        n.a_max[k] = std::max(primal.a_max[k], mirrored.a_max[1 - k]);
    }
    return n;
}

Normalizers extrema(const Hypergraph& h0, const StatTable& stats, AdjacencyRange range) {
    return collect(h0, stats.adjacency_factor, stats.betweenness, range);
}

}  // namespace polyhg
