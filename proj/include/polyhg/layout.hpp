#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyhg/energy.hpp"
#include "polyhg/lbfgs.hpp"
#include "polyhg/simplify.hpp"

namespace polyhg {

/// Positions by id. Slots of absent elements hold NaN.
struct Layout {
    std::size_t scale_index = 0;
    std::vector<Vec2> positions;                       // by vertex id
    std::optional<std::vector<Vec2>> dual_positions;   // by hyperedge id

    [[nodiscard]] bool has(Index v) const;
    [[nodiscard]] Vec2 at(Index v) const;
    [[nodiscard]] Vec2 dual_at(Index e) const;
    /// Every live vertex (and hyperedge, with a dual layer) has a finite position.
    [[nodiscard]] bool covers(const Hypergraph& h) const;

    bool operator==(const Layout&) const;
};

/// Seeded positions, uniform in a disk of radius L0*sqrt(|V|+|E|).
[[nodiscard]] Layout initialize(const Hypergraph& h, std::uint64_t seed, const EnergyConfig& cfg,
                                bool with_dual);

[[nodiscard]] std::vector<Vec2> gather(const EnergyModel& model, const Layout& layout);
void scatter(const EnergyModel& model, std::span<const Vec2> pts, Layout& layout);

/// Minimizes one phase over the points flagged in `active` (all when empty).
[[nodiscard]] MinimizeResult minimize_phase(const EnergyModel& model, std::vector<Vec2>& pts,
                                            Phase phase, std::size_t max_iterations,
                                            const std::vector<char>& active = {});

struct PhaseReport {
    Phase phase = Phase::Separation;
    MinimizeStatus status = MinimizeStatus::Converged;
    std::size_t iterations = 0;
    double initial_energy = 0;
    double final_energy = 0;
};

struct OptimizeOptions {
    EnergyConfig energy;
    bool separation_phase = true;  // false runs the regularity phase alone
};

/// Separation phase, then regularity phase with H0 sizes in `original`.
[[nodiscard]] Layout optimize_coarsest(const Hypergraph& hn, Layout layout,
                                       const ElementMap<std::size_t>& original,
                                       const OptimizeOptions& opt,
                                       std::vector<PhaseReport>* report = nullptr);

/// Runs optimize_coarsest from `opt.energy.restarts` seeded initial layouts
/// and keeps the one with the lowest final energy. `report` gets the
/// winner's phases.
[[nodiscard]] Layout optimize_restarts(const Hypergraph& hn, const ElementMap<std::size_t>& original,
                                       const OptimizeOptions& opt, bool with_dual,
                                       std::vector<PhaseReport>* report = nullptr);

/// A failure while inverting the operation that produced scale
/// `scale_index + 1` (stack position `scale_index`).
class RefineError : public LayoutError {
public:
    RefineError(std::size_t scale, const std::string& what) : LayoutError(what), scale_index(scale) {}
    std::size_t scale_index;
};

struct RefineStep {
    std::size_t scale_index = 0;  // the scale produced by this inversion
    std::vector<Index> placed;    // vertices (or dual points) that received new positions
    double energy_before = 0;     // local regularity energy before its pass
    double energy_after = 0;
    MinimizeStatus status = MinimizeStatus::Converged;
    std::size_t iterations = 0;
};

/// Inverts `stack` from the back, placing restored elements and refining
/// their footprint with everything else fixed. Returns one layout per
/// scale, index 0 first; the last entry is `coarsest`. When `hypergraphs`
/// is given it receives H_0..H_n.
[[nodiscard]] std::vector<Layout> reverse_and_refine(
    Hypergraph hn, const Layout& coarsest, std::span<const AppliedRecord> stack,
    const ElementMap<std::size_t>& original, const EnergyConfig& cfg,
    std::vector<RefineStep>* log = nullptr, std::vector<Hypergraph>* hypergraphs = nullptr);

/// Uniform double in [0, 1) from a 64-bit generator output.
[[nodiscard]] inline double unit_interval(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace polyhg
