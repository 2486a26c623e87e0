#include "polyhg/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "polyhg/log.hpp"
#include "polyhg/svg.hpp"

namespace polyhg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string scale_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "scale_%04zu", i);
    return buf;
}

Json phase_json(const PhaseReport& p) {
    return {{"phase", p.phase == Phase::Separation ? "separation" : "regularity"},
            {"status", to_string(p.status)},
            {"iterations", p.iterations},
            {"initial_energy", p.initial_energy},
            {"final_energy", p.final_energy}};
}

Json error_json(const std::string& stage, std::optional<std::size_t> scale, const std::string& msg) {
    Json j = {{"stage", stage}};
    j["scale"] = scale ? Json(*scale) : Json(nullptr);
    // Stack position of the operation whose inversion produced `scale`.
    j["operation"] = scale ? Json(*scale) : Json(nullptr);
    j["message"] = msg;
    return j;
}

}  // namespace

bool EmitScales::selects(std::size_t index, std::size_t coarsest) const {
    switch (mode) {
        case Mode::All: return true;
        case Mode::Ends: return index == 0 || index == coarsest;
        case Mode::List: return std::find(list.begin(), list.end(), index) != list.end();
    }
    return false;
}

PipelineConfig PipelineConfig::defaults() {
    PipelineConfig c;
    c.simplify.criteria.until_forbidden_free = true;
    c.simplify.dual_tracking = true;
    return c;
}

void PipelineConfig::validate() const {
    simplify.weights.validate();
    simplify.criteria.validate();
    if (!std::isfinite(simplify.t) || simplify.t <= 0) throw LayoutError("t must be positive");
    energy.validate();
    if (emit.mode == EmitScales::Mode::List && emit.list.empty()) {
        throw LayoutError("emit list is empty");
    }
    if (!std::isfinite(pixels_per_unit) || pixels_per_unit <= 0) {
        throw LayoutError("pixels_per_unit must be positive");
    }
}

Json to_json(const PipelineConfig& c) {
    Json emit;
    switch (c.emit.mode) {
        case EmitScales::Mode::All: emit = "all"; break;
        case EmitScales::Mode::Ends: emit = "ends"; break;
        case EmitScales::Mode::List: emit = c.emit.list; break;
    }
    return {{"simplify", to_json(c.simplify)},
            {"energy", to_json(c.energy)},
            {"emit_scales", emit},
            {"render", c.render},
            {"labels", c.labels},
            {"pixels_per_unit", c.pixels_per_unit},
            {"shapes", to_string(c.shapes)}};
}

PipelineConfig pipeline_config_from_json(const Json& j, PipelineConfig c) {
    if (!j.is_object()) throw IoError("config: expected an object");
    for (const auto& [k, v] : j.items()) {
        if (k == "simplify") {
            c.simplify = simplify_options_from_json(v, c.simplify);
        } else if (k == "energy") {
            c.energy = energy_config_from_json(v, c.energy);
        } else if (k == "seed") {
            if (!v.is_number_unsigned()) throw IoError("config: seed must be a non-negative integer");
            c.energy.seed = v.get<std::uint64_t>();
        } else if (k == "emit_scales") {
            if (v == "all") {
                c.emit = {EmitScales::Mode::All, {}};
            } else if (v == "ends") {
                c.emit = {EmitScales::Mode::Ends, {}};
            } else if (v.is_array()) {
                try {
                    c.emit = {EmitScales::Mode::List, v.get<std::vector<std::size_t>>()};
                } catch (const nlohmann::json::exception&) {
                    throw IoError("config: emit_scales list must hold scale indices");
                }
            } else {
                throw IoError("config: emit_scales must be \"all\", \"ends\" or a list");
            }
        } else if (k == "render" || k == "labels") {
            if (!v.is_boolean()) throw IoError("config: " + k + " must be a boolean");
            (k == "render" ? c.render : c.labels) = v.get<bool>();
        } else if (k == "pixels_per_unit") {
            if (!v.is_number()) throw IoError("config: pixels_per_unit must be a number");
            c.pixels_per_unit = v.get<double>();
        } else if (k == "shapes") {
            if (!v.is_string()) throw IoError("config: shapes must be a string");
            try {
                c.shapes = shape_convention_from_string(v.get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw IoError(std::string("config: ") + e.what());
            }
        } else {
            throw IoError("config: unknown key \"" + k + "\"");
        }
    }
    return c;
}

Json without_runtime(Json manifest) {
    manifest.erase("runtime");
    return manifest;
}

PipelineResult run_pipeline(const PipelineConfig& config, const Hypergraph& h0,
                            const std::string& out_dir) {
    const auto t_start = Clock::now();
    PipelineResult res;
    Json& m = res.manifest;
    m["format"] = "polyhg-manifest/1";
    m["status"] = "ok";
    m["error"] = nullptr;
    m["config"] = to_json(config);
    m["input"] = {{"vertices", h0.num_vertices()}, {"hyperedges", h0.num_hyperedges()}};
    Json runtime = Json::object();

    auto fail = [&](const std::string& stage, std::optional<std::size_t> scale, const std::string& msg) {
        res.ok = false;
        m["status"] = "failed";
        m["error"] = error_json(stage, scale, msg);
        log(LogLevel::Error, stage + ": " + msg);
    };

    const bool write = !out_dir.empty();
    auto finish = [&]() {
        runtime["total_seconds"] = seconds_since(t_start);
        m["runtime"] = runtime;
        if (write) {
            std::filesystem::create_directories(out_dir);
            write_file((std::filesystem::path(out_dir) / "manifest.json").string(), m.dump(2) + "\n");
        }
        return std::move(res);
    };

    try {
        config.validate();
        if (h0.empty() || !is_connected(h0)) throw HypergraphError("input hypergraph must be non-empty and connected");
    } catch (const std::exception& e) {
        fail("validate", std::nullopt, e.what());
        return finish();
    }

    // Simplification.
    auto t0 = Clock::now();
    try {
        res.simplified = simplify(h0, config.simplify);
    } catch (const std::exception& e) {
        fail("simplify", std::nullopt, e.what());
        return finish();
    }
    runtime["simplify_seconds"] = seconds_since(t0);
    const SimplifyResult& sr = res.simplified;
    const std::size_t n = sr.stack.size();
    m["simplify"] = {{"status", to_string(sr.status)}, {"operation_count", n}};
    log(LogLevel::Info, "simplified to " + std::to_string(sr.coarsest.num_vertices()) + " vertices, " +
                            std::to_string(sr.coarsest.num_hyperedges()) + " hyperedges in " +
                            std::to_string(n) + " operations");

    // Coarsest layout and refinement.
    const ElementMap<std::size_t> original = element_sizes(h0);
    const bool with_dual = config.simplify.dual_tracking;
    t0 = Clock::now();
    Layout coarsest;
    try {
        std::vector<PhaseReport> phases;
        coarsest = optimize_restarts(sr.coarsest, original, {config.energy, true}, with_dual, &phases);
        coarsest.scale_index = n;
        Json pj = Json::array();
        for (const auto& p : phases) pj.push_back(phase_json(p));
        m["coarsest_phases"] = pj;
    } catch (const std::exception& e) {
        fail("layout", n, e.what());
        return finish();
    }
    runtime["layout_seconds"] = seconds_since(t0);

    t0 = Clock::now();
    try {
        res.layouts = reverse_and_refine(sr.coarsest, coarsest, sr.stack, original, config.energy,
                                         nullptr, &res.hypergraphs);
    } catch (const RefineError& e) {
        fail("refine", e.scale_index, e.what());
    } catch (const std::exception& e) {
        fail("refine", std::nullopt, e.what());
    }
    runtime["refine_seconds"] = seconds_since(t0);
    // On failure only the coarsest scale has a layout.
    std::size_t first_scale = 0;
    if (!res.ok) {
        res.hypergraphs.assign(1, sr.coarsest);
        res.layouts.assign(1, coarsest);
        first_scale = n;
    }

    // Per-scale artifacts.
    t0 = Clock::now();
    const std::filesystem::path dir(out_dir);
    if (write) {
        std::filesystem::create_directories(dir / "layouts");
        if (config.render) std::filesystem::create_directories(dir / "svg");
    }
    res.overlaps.assign(n + 1, std::nullopt);
    Json scales = Json::array();
    for (std::size_t i = 0; i <= n; ++i) {
        Json s = {{"index", i},
                  {"vertices", sr.scales.at(i).vertices},
                  {"hyperedges", sr.scales.at(i).hyperedges}};
        s["operation"] = i == 0 ? Json(nullptr) : to_json(sr.stack.at(i - 1));
        const bool have = i >= first_scale;
        const bool emit = have && config.emit.selects(i, n);
        s["emitted"] = emit;
        s["layout"] = nullptr;
        s["svg"] = nullptr;
        s["overlap"] = nullptr;
        if (emit) {
            const Hypergraph& hi = res.hypergraphs.at(i - first_scale);
            const Layout& li = res.layouts.at(i - first_scale);
            try {
                OverlapReport r = overlap_report(hi, li.positions, config.energy.side_length, -1.0, config.shapes);
                runtime["overlap_seconds"][scale_name(i)] = r.runtime_seconds;
                s["overlap"] = to_json(r);
                res.overlaps[i] = std::move(r);
                if (write) {
                    const std::string rel = "layouts/" + scale_name(i) + ".json";
                    write_file((dir / rel).string(), to_json(li).dump(2) + "\n");
                    s["layout"] = rel;
                    if (config.render) {
                        SvgStyle style;
                        style.side_length = config.energy.side_length;
                        style.pixels_per_unit = config.pixels_per_unit;
                        style.labels = config.labels;
                        const std::string svg_rel = "svg/" + scale_name(i) + ".svg";
                        write_file((dir / svg_rel).string(), render_svg(hi, li, style));
                        s["svg"] = svg_rel;
                    }
                }
            } catch (const std::exception& e) {
                if (res.ok) fail("metrics", i, e.what());
            }
        }
        scales.push_back(std::move(s));
    }
    m["scales"] = scales;
    runtime["metrics_seconds"] = seconds_since(t0);
    return finish();
}

Json run_bench(const PipelineConfig& config, const Hypergraph& h0) {
    config.validate();
    const bool with_dual = config.simplify.dual_tracking;
    const ElementMap<std::size_t> original = element_sizes(h0);

    auto t0 = Clock::now();
    const Layout single = optimize_restarts(h0, original, {config.energy, true}, with_dual);
    const OverlapReport rs = overlap_report(h0, single.positions, config.energy.side_length, -1.0, config.shapes);
    const double single_seconds = seconds_since(t0);

    t0 = Clock::now();
    PipelineConfig multi_cfg = config;
    multi_cfg.emit = {EmitScales::Mode::List, {0}};
    multi_cfg.render = false;
    PipelineResult pr = run_pipeline(multi_cfg, h0);
    const double multi_seconds = seconds_since(t0);

    Json j;
    j["config"] = to_json(config);
    j["input"] = {{"vertices", h0.num_vertices()}, {"hyperedges", h0.num_hyperedges()}};
    j["single_scale"] = to_json(rs);
    j["multi_scale"] = pr.ok && pr.overlaps.at(0) ? to_json(*pr.overlaps[0]) : Json(nullptr);
    j["multi_scale_status"] = pr.manifest["status"];
    j["operation_count"] = pr.simplified.stack.size();
    j["runtime"] = {{"single_scale_seconds", single_seconds}, {"multi_scale_seconds", multi_seconds}};
    return j;
}

}  // namespace polyhg
