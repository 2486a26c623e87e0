#pragma once

#include <cstdint>
#include <random>

#include "polyhg/hypergraph.hpp"

namespace polyhg {

/// Connected random hypergraph with `vertices` vertices and `hyperedges`
/// hyperedges of cardinality 1..max_cardinality.
[[nodiscard]] Hypergraph random_connected(std::size_t vertices, std::size_t hyperedges,
                                          std::size_t max_cardinality, std::mt19937_64& rng);

/// Tree-like arrangement of `count` triangles and quadrilaterals glued at
/// single vertices or single sides, with bounded angle demand per vertex.
/// The result is convex-polygon planar.
[[nodiscard]] Hypergraph polygon_tree(std::size_t count, std::mt19937_64& rng);

/// Sparse random hypergraph of about `vertices` vertices and `hyperedges`
/// hyperedges, with `clusters` groups of hyperedges sharing three vertices.
[[nodiscard]] Hypergraph clustered(std::size_t vertices, std::size_t hyperedges,
                                   std::size_t clusters, std::mt19937_64& rng);

}  // namespace polyhg
