#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "polyhg/geometry.hpp"
#include "polyhg/hypergraph.hpp"

namespace polyhg {

class LayoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnergyWeights {
    double separation = 1.0;
    double regularity = 1.0;
    double area = 1.0;
    double intersection = 1.0;
    double primal_dual = 1.0;

    bool operator==(const EnergyWeights&) const = default;
};

struct EnergyConfig {
    double side_length = 1.0;  // L0
    double buffer = 0.25;      // d_b
    EnergyWeights weights;
    std::size_t separation_iterations = 500;
    std::size_t regularity_iterations = 500;
    std::size_t local_iterations = 100;
    double gradient_tolerance = 1e-6;
    std::size_t memory = 10;
    double softplus_sharpness = 10.0;
    /// Also separate polygons that share one or two vertices, using the
    /// clearance their centroids need when both are regular.
    bool separate_shared = true;
    /// Extra clearance for polygons sharing a side.
    double shared_buffer = 0.5;
    /// Seeded starts tried for the coarsest layout; the lowest energy wins.
    std::size_t restarts = 5;
    /// Run a local separation pass before each local regularity pass.
    bool local_separation = true;
    std::uint64_t seed = 1;

    void validate() const;
    bool operator==(const EnergyConfig&) const = default;
};

enum class Phase { Separation, Regularity };

enum Term : unsigned {
    kSeparation = 1u,
    kRegularity = 2u,
    kArea = 4u,
    kIntersection = 8u,
    kPrimalDual = 16u,
    kAllTerms = 31u,
};

[[nodiscard]] constexpr unsigned phase_terms(Phase p) noexcept {
    return p == Phase::Separation ? (kSeparation | kPrimalDual) : kAllTerms;
}

/// Circumradius of the regular n-gon with side L0 (n=2: L0/2, n=1: L0/4).
[[nodiscard]] double regular_radius(std::size_t n, double L0);
/// Target area: regular n-gon, half disk of radius rho_2, or disk of radius rho_1.
[[nodiscard]] double regular_area(std::size_t n, double L0);

/// Largest pairwise distance.
[[nodiscard]] double diameter(std::span<const Vec2> pts);

/// Centroid clearance for two polygons without common vertices.
/// Separation phase: half the sum of current diameters plus the buffer.
/// Regularity phase: sum of regular circumradii at the original sizes plus the buffer.
[[nodiscard]] double separation_d0(std::span<const Vec2> p, std::size_t p_original,
                                   std::span<const Vec2> q, std::size_t q_original, Phase phase,
                                   const EnergyConfig& cfg);

/// Degree of every vertex and cardinality of every hyperedge, by id.
[[nodiscard]] ElementMap<std::size_t> element_sizes(const Hypergraph& h);

struct TermValues {
    double separation = 0;
    double regularity = 0;
    double area = 0;
    double intersection = 0;
    double primal_dual = 0;

    [[nodiscard]] double total() const {
        return separation + regularity + area + intersection + primal_dual;
    }
};

/// A polygon of the primal layer (one per hyperedge) or of the dual layer
/// (one per vertex), referring to point indices.
struct PolygonRef {
    ElementId owner;
    std::vector<std::size_t> points;
    std::size_t original = 0;
};

/// Energy of one scale. Points are the live vertices in id order, followed
/// by the live hyperedges (dual points) when the dual layer is present.
class EnergyModel {
public:
    /// `original` holds the H0 size of every element: cardinality for
    /// hyperedges, degree for vertices.
    EnergyModel(const Hypergraph& h, const ElementMap<std::size_t>& original, bool with_dual,
                EnergyConfig cfg);

    [[nodiscard]] std::size_t point_count() const noexcept { return point_ids_.size(); }
    [[nodiscard]] const std::vector<ElementId>& point_ids() const noexcept { return point_ids_; }
    /// Point index of a vertex (primal) or hyperedge (dual point); -1 if absent.
    [[nodiscard]] std::int64_t point_of(ElementId id) const;
    [[nodiscard]] const std::vector<PolygonRef>& polygons() const noexcept { return polygons_; }
    [[nodiscard]] bool with_dual() const noexcept { return with_dual_; }
    [[nodiscard]] const EnergyConfig& config() const noexcept { return cfg_; }

    /// Restricts evaluation to terms touching at least one active point.
    void set_active(const std::vector<char>& active);
    void clear_active();

    /// Weighted energy of the selected terms; accumulates the gradient into
    /// `grad` (size point_count, overwritten) when non-empty.
    double evaluate(std::span<const Vec2> pts, Phase phase, std::span<Vec2> grad,
                    unsigned terms = kAllTerms, TermValues* parts = nullptr) const;

private:
    struct Pair {
        std::size_t a, b;
        std::size_t shared;
        std::size_t u = 0, v = 0;  // shared points when shared == 2
    };

    EnergyConfig cfg_;
    bool with_dual_;
    std::vector<ElementId> point_ids_;
    ElementMap<std::int64_t> point_of_;
    std::vector<PolygonRef> polygons_;
    std::vector<Pair> pairs_;
    std::vector<std::size_t> sel_polygons_, sel_pairs_;
    bool restricted_ = false;
};

}  // namespace polyhg
