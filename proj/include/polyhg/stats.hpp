#pragma once

#include <array>

#include "polyhg/hypergraph.hpp"

namespace polyhg {

/// Betweenness centrality of every vertex and hyperedge, computed with
/// Brandes' accumulation on the König graph. Unordered source/target pairs,
/// endpoints excluded. Throws HypergraphError if `h` is disconnected.
[[nodiscard]] ElementMap<double> betweenness_all(const Hypergraph& h);

/// Sum over adjacent same-kind elements y of adjacency(x, y)^t.
[[nodiscard]] double adjacency_factor(const Hypergraph& h, ElementId x, double t);
[[nodiscard]] ElementMap<double> adjacency_factors(const Hypergraph& h, double t);

/// How the adjacency-factor normalizing range is shared between kinds.
enum class AdjacencyRange { Joint, PerKind };

/// Global extrema of H0 used to normalize the priority terms.
struct Normalizers {
    double d_min = 0, d_max = 0;
    std::array<double, 2> a_min{}, a_max{};  // indexed by slot(kind)
    double b_min = 0, b_max = 0;

    bool operator==(const Normalizers&) const = default;
};

/// Per-element statistics. Betweenness is frozen at H0; adjacency factors
/// are refreshed after every applied operation.
struct StatTable {
    ElementMap<double> betweenness;
    ElementMap<double> adjacency_factor;
    double t = 2.0;

    static StatTable compute(const Hypergraph& h0, double t);
    /// Recomputes adjacency factors of the live elements listed in `where`.
    void refresh(const Hypergraph& h, const Footprint& where);
};

[[nodiscard]] Normalizers extrema(const Hypergraph& h0, const Hypergraph& h0_dual, double t,
                                  AdjacencyRange range = AdjacencyRange::Joint);
/// Same, reusing already computed statistics of H0.
[[nodiscard]] Normalizers extrema(const Hypergraph& h0, const StatTable& stats,
                                  AdjacencyRange range = AdjacencyRange::Joint);

}  // namespace polyhg
