#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyhg/io.hpp"
#include "polyhg/layout.hpp"
#include "polyhg/metrics.hpp"
#include "polyhg/simplify.hpp"

namespace polyhg {

/// Which scales get a layout file, an SVG and an overlap report.
struct EmitScales {
    enum class Mode { All, Ends, List };
    Mode mode = Mode::Ends;          // Ends: the original and the coarsest scale
    std::vector<std::size_t> list;   // Mode::List only

    [[nodiscard]] bool selects(std::size_t index, std::size_t coarsest) const;
    bool operator==(const EmitScales&) const = default;
};

struct PipelineConfig {
    SimplifyOptions simplify;
    EnergyConfig energy;
    EmitScales emit;
    bool render = true;
    bool labels = false;
    double pixels_per_unit = 60.0;
    ShapeConvention shapes = ShapeConvention::Capped;  // digon/monogon regions in overlap reports

    /// Defaults with the forbidden-free stop criterion and dual tracking on.
    [[nodiscard]] static PipelineConfig defaults();
    void validate() const;
    bool operator==(const PipelineConfig&) const = default;
};

[[nodiscard]] Json to_json(const PipelineConfig& c);
/// Missing keys keep the values of `base`; unknown keys are rejected.
[[nodiscard]] PipelineConfig pipeline_config_from_json(const Json& j,
                                                       PipelineConfig base = PipelineConfig::defaults());

struct PipelineResult {
    bool ok = true;
    Json manifest;
    SimplifyResult simplified;
    std::vector<Hypergraph> hypergraphs;  // H_0..H_n; only the coarsest on early failure
    std::vector<Layout> layouts;          // by scale, same extent as `hypergraphs`
    std::vector<std::optional<OverlapReport>> overlaps;  // by scale, emitted ones only
};

/// Simplifies, lays out the coarsest scale, refines back to H0 and measures
/// the emitted scales. With a non-empty `out_dir`, writes manifest.json,
/// layouts/scale_NNNN.json and svg/scale_NNNN.svg there. The manifest is
/// written even when a stage fails; its "runtime" member holds every
/// wall-clock field.
PipelineResult run_pipeline(const PipelineConfig& config, const Hypergraph& h0,
                            const std::string& out_dir = {});

/// Same energy configuration run once on H0 directly and once through the
/// multi-scale pipeline; both overlap reports side by side.
[[nodiscard]] Json run_bench(const PipelineConfig& config, const Hypergraph& h0);

/// `manifest` without its "runtime" member.
[[nodiscard]] Json without_runtime(Json manifest);

}  // namespace polyhg
