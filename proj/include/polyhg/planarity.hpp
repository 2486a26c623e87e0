#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyhg/hypergraph.hpp"

namespace polyhg {

/// The four sub-hypergraphs that rule out a convex polygon drawing of a
/// Zykov-planar hypergraph.
enum class ForbiddenKind {
    ThreeAdjacentPair,   // two hyperedges sharing >= 3 vertices
    TwoAdjacentTriple,   // >= 3 hyperedges sharing the same 2 vertices
    StrangledVertex,
    StrangledHyperedge,
};

[[nodiscard]] const char* to_string(ForbiddenKind k);

/// One detected pattern.
///
/// Clusters: `operands` is the same-kind pair, `witness` the elements they
/// share. Strangled elements: `operands` is the center, `witness` one
/// cycle of its link structure as an alternating element sequence.
struct ForbiddenInstance {
    ForbiddenKind kind{};
    std::vector<ElementId> operands;
    std::vector<ElementId> witness;
    /// Strangled only: the cycle also leaves out at least one adjacent
    /// element of the center (the stricter reading of the definition).
    bool strict = false;

    bool operator==(const ForbiddenInstance&) const = default;
};

/// Thrown when the strangled-element cycle search exceeds its step budget.
class PlanarityIndeterminate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCycleStepCap = 1'000'000;

[[nodiscard]] std::vector<ForbiddenInstance> three_adjacent_pairs(const Hypergraph& h);
[[nodiscard]] std::vector<ForbiddenInstance> two_adjacent_triples(const Hypergraph& h);
[[nodiscard]] std::vector<ForbiddenInstance> strangled_vertices(
    const Hypergraph& h, std::size_t step_cap = kDefaultCycleStepCap);
[[nodiscard]] std::vector<ForbiddenInstance> strangled_hyperedges(
    const Hypergraph& h, std::size_t step_cap = kDefaultCycleStepCap);

/// Strangled check for a single center element; empty if not strangled.
[[nodiscard]] std::vector<ForbiddenInstance> strangled_at(const Hypergraph& h, ElementId center,
                                                          std::size_t step_cap = kDefaultCycleStepCap);

/// All instances of all four kinds, in kind order then id order.
[[nodiscard]] std::vector<ForbiddenInstance> forbidden_instances(
    const Hypergraph& h, std::size_t step_cap = kDefaultCycleStepCap);

/// One per cluster pair and one per strangled center.
[[nodiscard]] std::size_t forbidden_count(const Hypergraph& h,
                                          std::size_t step_cap = kDefaultCycleStepCap);

/// Planarity of the König graph (Boyer-Myrvold edge addition).
[[nodiscard]] bool is_zykov_planar(const Hypergraph& h);

/// Zykov planar and free of forbidden sub-hypergraphs.
[[nodiscard]] bool convex_polygon_planar(const Hypergraph& h);

struct PlanarityReport {
    bool zykov_planar = false;
    bool convex_polygon_planar = false;
    std::vector<ForbiddenInstance> instances;
    std::size_t forbidden_count = 0;
};

[[nodiscard]] PlanarityReport planarity_report(const Hypergraph& h,
                                               std::size_t step_cap = kDefaultCycleStepCap);

}  // namespace polyhg
