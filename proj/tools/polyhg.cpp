// polyhg command line: statistics, planarity, simplification, layout,
// metrics, rendering and the full multi-scale pipeline.

#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "polyhg/generators.hpp"
#include "polyhg/io.hpp"
#include "polyhg/log.hpp"
#include "polyhg/pipeline.hpp"
#include "polyhg/svg.hpp"

using namespace polyhg;

namespace {

struct InputArgs {
    std::string path;
    std::string format;  // empty: by extension

    void add(CLI::App* app) {
        app->add_option("-i,--input", path, "Hypergraph file (JSON or hmetis-like)")->required()->check(CLI::ExistingFile);
        app->add_option("--format", format, "Input format: json or hmetis (default: by extension)")
            ->check(CLI::IsMember({"json", "hmetis"}));
    }
    [[nodiscard]] Hypergraph load() const {
        std::optional<InputFormat> f;
        if (!format.empty()) f = input_format_from_string(format);
        return read_hypergraph(path, f);
    }
};

// Flags override the config file; only flags actually given are applied.
struct ConfigArgs {
    std::string config_path;
    std::optional<double> alpha, beta, gamma, t;
    std::optional<std::size_t> target_vertices, target_hyperedges;
    bool until_linear = false, until_forbidden_free = false;
    std::optional<bool> dual;
    std::optional<std::uint64_t> seed;
    std::optional<double> side_length, buffer, shared_buffer;
    std::optional<std::size_t> restarts, separation_iterations, regularity_iterations, local_iterations;
    std::optional<std::string> emit;
    bool labels = false, no_render = false;
    std::optional<std::string> shapes;

    void add_simplify(CLI::App* app) {
        app->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
        app->add_option("--alpha", alpha, "Priority weight of the degree term");
        app->add_option("--beta", beta, "Priority weight of the adjacency-factor term");
        app->add_option("--gamma", gamma, "Priority weight of the betweenness term");
        app->add_option("--t", t, "Adjacency-factor exponent");
        app->add_option("--target-vertices", target_vertices, "Stop at this many vertices");
        app->add_option("--target-hyperedges", target_hyperedges, "Stop at this many hyperedges");
        app->add_flag("--until-linear", until_linear, "Stop once the hypergraph is linear");
        app->add_flag("--until-forbidden-free", until_forbidden_free,
                      "Stop once no forbidden sub-hypergraph remains");
        app->add_flag("--dual,!--no-dual", dual, "Track the dual hypergraph");
    }
    void add_energy(CLI::App* app) {
        app->add_option("--seed", seed, "Random seed");
        app->add_option("--side-length", side_length, "Target polygon side length");
        app->add_option("--buffer", buffer, "Separation buffer distance");
        app->add_option("--shared-buffer", shared_buffer, "Extra clearance for polygons sharing a side");
        app->add_option("--restarts", restarts, "Seeded starts for the coarsest layout");
        app->add_option("--separation-iterations", separation_iterations, "Iteration cap, separation phase");
        app->add_option("--regularity-iterations", regularity_iterations, "Iteration cap, regularity phase");
        app->add_option("--local-iterations", local_iterations, "Iteration cap per refinement step");
        app->add_option("--shapes", shapes, "Digon/monogon regions for overlap: capped or drawn")
            ->check(CLI::IsMember({"capped", "drawn"}));
    }
    void add_output(CLI::App* app) {
        app->add_option("--emit", emit, "Scales to emit: all, ends, or a comma list of indices");
        app->add_flag("--labels", labels, "Draw vertex labels");
        app->add_flag("--no-render", no_render, "Skip SVG output");
    }

    [[nodiscard]] PipelineConfig resolve() const {
        PipelineConfig c = PipelineConfig::defaults();
        if (!config_path.empty()) c = pipeline_config_from_json(Json::parse(read_file(config_path)), c);
        auto& s = c.simplify;
        if (alpha) s.weights.alpha = *alpha;
        if (beta) s.weights.beta = *beta;
        if (gamma) s.weights.gamma = *gamma;
        if (t) s.t = *t;
        if (target_vertices || target_hyperedges || until_linear || until_forbidden_free) {
            s.criteria = {};
            s.criteria.target_vertices = target_vertices;
            s.criteria.target_hyperedges = target_hyperedges;
            s.criteria.until_linear = until_linear;
            s.criteria.until_forbidden_free = until_forbidden_free;
        }
        if (dual) s.dual_tracking = *dual;
        auto& e = c.energy;
        if (seed) e.seed = *seed;
        if (side_length) e.side_length = *side_length;
        if (buffer) e.buffer = *buffer;
        if (shared_buffer) e.shared_buffer = *shared_buffer;
        if (restarts) e.restarts = *restarts;
        if (separation_iterations) e.separation_iterations = *separation_iterations;
        if (regularity_iterations) e.regularity_iterations = *regularity_iterations;
        if (local_iterations) e.local_iterations = *local_iterations;
        if (emit) {
            if (*emit == "all") {
                c.emit = {EmitScales::Mode::All, {}};
            } else if (*emit == "ends") {
                c.emit = {EmitScales::Mode::Ends, {}};
            } else {
                c.emit = {EmitScales::Mode::List, {}};
                std::stringstream ss(*emit);
                std::string tok;
                while (std::getline(ss, tok, ',')) c.emit.list.push_back(std::stoul(tok));
            }
        }
        if (shapes) c.shapes = shape_convention_from_string(*shapes);
        if (labels) c.labels = true;
        if (no_render) c.render = false;
        c.validate();
        return c;
    }
};

void emit_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

std::string tsv_stats(const Json& table) {
    std::string out = "id\tlabel\tkind\tsize\tbetweenness\tadjacency_factor\n";
    for (const Json& row : table["elements"]) {
        std::ostringstream ss;
        ss.precision(12);
        ss << row["id"].get<std::string>() << '\t' << row["label"].get<std::string>() << '\t'
           << row["kind"].get<std::string>() << '\t' << row["size"].get<std::size_t>() << '\t'
           << row["betweenness"].get<double>() << '\t' << row["adjacency_factor"].get<double>()
           << '\n';
        out += ss.str();
    }
    return out;
}

std::string scale_file(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "scale_%04zu.json", i);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-scale polygon layouts of hypergraphs"};
    app.require_subcommand(1);
    std::string output;

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "Per-element degree, betweenness and adjacency factor");
    InputArgs stats_in;
    stats_in.add(stats_cmd);
    double stats_t = 2.0;
    bool stats_json = false;
    stats_cmd->add_option("--t", stats_t, "Adjacency-factor exponent");
    stats_cmd->add_flag("--json", stats_json, "JSON instead of a tab-separated table");
    stats_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    // planarity
    auto* plan_cmd = app.add_subcommand("planarity", "Zykov planarity and forbidden sub-hypergraphs");
    InputArgs plan_in;
    plan_in.add(plan_cmd);
    std::size_t step_cap = kDefaultCycleStepCap;
    plan_cmd->add_option("--step-cap", step_cap, "Step budget of the strangled-cycle search");
    plan_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    // simplify
    auto* simp_cmd = app.add_subcommand("simplify", "Prioritized simplification; writes a scales manifest");
    InputArgs simp_in;
    simp_in.add(simp_cmd);
    ConfigArgs simp_cfg;
    simp_cfg.add_simplify(simp_cmd);
    simp_cmd->add_option("-o,--output", output, "Manifest file (default stdout)");

    // layout
    auto* lay_cmd = app.add_subcommand("layout", "Layouts of every scale of a simplification manifest");
    std::string lay_manifest, lay_out_dir;
    ConfigArgs lay_cfg;
    lay_cmd->add_option("-m,--manifest", lay_manifest, "Manifest written by `simplify`")->required()->check(CLI::ExistingFile);
    lay_cmd->add_option("--config", lay_cfg.config_path, "JSON config file")->check(CLI::ExistingFile);
    lay_cfg.add_energy(lay_cmd);
    lay_cmd->add_option("-d,--out-dir", lay_out_dir, "Directory for scale_NNNN.json files")->required();

    // metrics
    auto* met_cmd = app.add_subcommand("metrics", "Pairwise overlap report of a layout");
    InputArgs met_in;
    met_in.add(met_cmd);
    std::string met_layout;
    double met_side = 1.0;
    std::string met_shapes = "capped";
    met_cmd->add_option("-l,--layout", met_layout, "Layout JSON")->required()->check(CLI::ExistingFile);
    met_cmd->add_option("--side-length", met_side, "Side length the layout was made with");
    met_cmd->add_option("--shapes", met_shapes, "Digon/monogon regions: capped or drawn")
        ->check(CLI::IsMember({"capped", "drawn"}));
    met_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    // render
    auto* ren_cmd = app.add_subcommand("render", "SVG drawing of a layout");
    InputArgs ren_in;
    ren_in.add(ren_cmd);
    std::string ren_layout;
    SvgStyle style;
    bool ren_no_dual = false;
    ren_cmd->add_option("-l,--layout", ren_layout, "Layout JSON")->required()->check(CLI::ExistingFile);
    ren_cmd->add_option("--side-length", style.side_length, "Side length the layout was made with");
    ren_cmd->add_option("--pixels-per-unit", style.pixels_per_unit, "Scale of the drawing");
    ren_cmd->add_flag("--labels", style.labels, "Draw vertex labels");
    ren_cmd->add_flag("--no-dual", ren_no_dual, "Leave out the dual panel");
    ren_cmd->add_option("-o,--output", output, "SVG file (default stdout)");

    // pipeline
    auto* pipe_cmd = app.add_subcommand("pipeline", "Simplify, lay out, refine, measure and render");
    InputArgs pipe_in;
    pipe_in.add(pipe_cmd);
    ConfigArgs pipe_cfg;
    pipe_cfg.add_simplify(pipe_cmd);
    pipe_cfg.add_energy(pipe_cmd);
    pipe_cfg.add_output(pipe_cmd);
    std::string pipe_out_dir;
    pipe_cmd->add_option("-d,--out-dir", pipe_out_dir, "Output directory")->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Single-scale against multi-scale overlap");
    InputArgs bench_in;
    bench_in.add(bench_cmd);
    ConfigArgs bench_cfg;
    bench_cfg.add_simplify(bench_cmd);
    bench_cfg.add_energy(bench_cmd);
    bench_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Seeded synthetic hypergraph as JSON");
    std::string gen_kind = "random";
    std::size_t gen_vertices = 20, gen_hyperedges = 10, gen_max_card = 4, gen_count = 8, gen_clusters = 4;
    std::uint64_t gen_seed = 1;
    gen_cmd->add_option("--kind", gen_kind, "random, tree or clustered")
        ->check(CLI::IsMember({"random", "tree", "clustered"}));
    gen_cmd->add_option("--vertices", gen_vertices, "Vertex count (random, clustered)");
    gen_cmd->add_option("--hyperedges", gen_hyperedges, "Hyperedge count (random, clustered)");
    gen_cmd->add_option("--max-cardinality", gen_max_card, "Largest hyperedge (random)");
    gen_cmd->add_option("--polygons", gen_count, "Polygon count (tree)");
    gen_cmd->add_option("--clusters", gen_clusters, "Three-vertex clusters (clustered)");
    gen_cmd->add_option("--seed", gen_seed, "Random seed");
    gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*stats_cmd) {
            const Json table = stats_table(stats_in.load(), stats_t);
            emit_text(output, stats_json ? table.dump(2) + "\n" : tsv_stats(table));
        } else if (*plan_cmd) {
            emit_text(output, to_json(planarity_report(plan_in.load(), step_cap)).dump(2) + "\n");
        } else if (*simp_cmd) {
            const Hypergraph h = simp_in.load();
            const PipelineConfig c = simp_cfg.resolve();
            const SimplifyResult r = simplify(h, c.simplify);
            log(LogLevel::Info, std::to_string(r.stack.size()) + " operations, stop: " + to_string(r.status));
            emit_text(output, simplify_manifest(h, c.simplify, r).dump(2) + "\n");
        } else if (*lay_cmd) {
            const LoadedSimplification s = load_simplify_manifest(Json::parse(read_file(lay_manifest)));
            const EnergyConfig e = lay_cfg.resolve().energy;
            const ElementMap<std::size_t> original = element_sizes(s.original);
            const bool with_dual = s.options.dual_tracking;
            Layout coarsest = optimize_restarts(s.coarsest, original, {e, true}, with_dual);
            coarsest.scale_index = s.stack.size();
            const auto layouts = reverse_and_refine(s.coarsest, coarsest, s.stack, original, e);
            std::filesystem::create_directories(lay_out_dir);
            for (const Layout& l : layouts) {
                write_file((std::filesystem::path(lay_out_dir) / scale_file(l.scale_index)).string(),
                           to_json(l).dump(2) + "\n");
            }
        } else if (*met_cmd) {
            const Hypergraph h = met_in.load();
            const Layout l = layout_from_json(Json::parse(read_file(met_layout)));
            if (!l.covers(h)) throw IoError(met_layout + ": layout does not cover the hypergraph");
            emit_text(output, to_json(overlap_report(h, l.positions, met_side, -1.0, shape_convention_from_string(met_shapes))).dump(2) + "\n");
        } else if (*ren_cmd) {
            const Hypergraph h = ren_in.load();
            const Layout l = layout_from_json(Json::parse(read_file(ren_layout)));
            style.dual = !ren_no_dual;
            emit_text(output, render_svg(h, l, style));
        } else if (*pipe_cmd) {
            const Hypergraph h = pipe_in.load();
            const PipelineResult r = run_pipeline(pipe_cfg.resolve(), h, pipe_out_dir);
            const Json& m = r.manifest;
            std::cout << "status: " << m["status"].get<std::string>() << "\n";
            if (m.contains("simplify")) {
                std::cout << "operations: " << m["simplify"]["operation_count"] << "\n";
            }
            if (m.contains("scales")) {
                for (const Json& s : m["scales"]) {
                    if (!s["emitted"].get<bool>()) continue;
                    std::cout << "scale " << s["index"] << ": " << s["vertices"] << " vertices, "
                              << s["hyperedges"] << " hyperedges, overlapping pairs "
                              << s["overlap"]["pair_count"] << "\n";
                }
            }
            if (!r.ok) {
                std::cerr << "error: " << m["error"]["message"].get<std::string>() << "\n";
                return 1;
            }
        } else if (*bench_cmd) {
            const Hypergraph h = bench_in.load();
            emit_text(output, run_bench(bench_cfg.resolve(), h).dump(2) + "\n");
        } else if (*gen_cmd) {
            std::mt19937_64 rng(gen_seed);
            Hypergraph h;
            if (gen_kind == "random") h = random_connected(gen_vertices, gen_hyperedges, gen_max_card, rng);
            else if (gen_kind == "tree") h = polygon_tree(gen_count, rng);
            else h = clustered(gen_vertices, gen_hyperedges, gen_clusters, rng);
            emit_text(output, serialize(h));
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
