// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>

#include "support.hpp"

#include "polyhg/io.hpp"
#include "polyhg/metrics.hpp"
#include "polyhg/pipeline.hpp"
#include "polyhg/planarity.hpp"
#include "polyhg/simplify.hpp"
#include "polyhg/stats.hpp"

using namespace polyhg;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// 200 random connected hypergraphs with |V|+|E| <= 40 and the criterion
// used for each of them.
struct CorpusItem {
    Hypergraph h;
    SimplifyOptions options;
};

std::vector<CorpusItem> corpus() {
    std::mt19937_64 rng(2024);
    std::vector<CorpusItem> out;
    for (int i = 0; i < 200; ++i) {
        CorpusItem c;
        c.h = oracle::random_small(rng, 40, 4);
        switch (i % 4) {
            case 0: c.options.criteria.target_vertices = std::max<std::size_t>(1, c.h.num_vertices() / 3); break;
            case 1: c.options.criteria.target_hyperedges = 1; break;
            case 2: c.options.criteria.until_linear = true; break;
            default: c.options.criteria.until_forbidden_free = true; break;
        }
        out.push_back(std::move(c));
    }
    return out;
}

Outcome round_trip(const std::vector<CorpusItem>& items) {
    const auto t0 = Clock::now();
    std::size_t same = 0;
    for (const auto& c : items) {
        const SimplifyResult r = simplify(c.h, c.options);
        Hypergraph g = r.coarsest;
        for (auto it = r.stack.rbegin(); it != r.stack.rend(); ++it) invert(g, *it);
        same += serialize(g) == serialize(c.h);
    }
    const double dt = since(t0);
    return {same == items.size() && dt < 10.0,
            fmt("%zu/%zu identical after full inversion; %.2f s (limit 10 s)", same, items.size(), dt)};
}

Outcome monotone_connected(const std::vector<CorpusItem>& items) {
    std::size_t ops = 0, bad = 0;
    for (const auto& c : items) {
        Simplifier s(c.h, c.options);
        std::size_t size = c.h.size();
        while (!satisfied_criterion(s.current(), c.options.criteria) && s.step()) {
            ++ops;
            if (s.current().size() >= size || !is_connected(s.current())) ++bad;
            size = s.current().size();
        }
    }
    return {bad == 0, fmt("%zu operations, %zu violations (exact)", ops, bad)};
}

Outcome duality(const std::vector<CorpusItem>& items) {
    std::size_t scales = 0, mismatched = 0;
    double worst = 0;
    auto compare = [&](const Hypergraph& h, const Hypergraph& d) {
        ++scales;
        if (!(h.dual() == d)) ++mismatched;
        const auto bh = betweenness_all(h), bd = betweenness_all(d);
        const auto ah = adjacency_factors(h, 2.0), ad = adjacency_factors(d, 2.0);
        for (ElementId x : h.elements()) {
            if (h.degree(x) != d.degree(x.dual())) ++mismatched;
            worst = std::max({worst, std::abs(bh[x] - bd[x.dual()]), std::abs(ah[x] - ad[x.dual()])});
        }
    };
    for (const auto& c : items) {
        SimplifyOptions o = c.options;
        o.dual_tracking = true;
        Simplifier s(c.h, o);
        compare(s.current(), *s.tracked_dual());
        while (!satisfied_criterion(s.current(), o.criteria) && s.step()) {
            compare(s.current(), *s.tracked_dual());
        }
    }
    return {mismatched == 0 && worst <= 1e-10,
            fmt("%zu scales, %zu structural mismatches, max stat difference %.1e (limit 1e-10)", scales,
                mismatched, worst)};
}

Outcome betweenness() {
    std::mt19937_64 rng(4);
    std::size_t instances = 0, wrong = 0;
    while (instances < 100) {
        const Hypergraph h = oracle::random_small(rng, 12, 3);
        ++instances;
        const auto b = betweenness_all(h);
        for (const auto& [id, r] : oracle::betweenness_rational(h)) {
            // b*den must recover the integer numerator.
            if (std::abs(b[id] * static_cast<double>(r.den) - static_cast<double>(r.num)) > 1e-6) ++wrong;
        }
    }
    return {wrong == 0, fmt("%zu instances, %zu values differ from rational path counts (exact)", instances, wrong)};
}

Outcome forbidden() {
    std::mt19937_64 rng(5);
    std::size_t mism = 0;
    for (int i = 0; i < 100; ++i) {
        const Hypergraph h = oracle::random_small(rng, 10, 3);
        std::set<std::pair<Index, Index>> pairs, triples;
        std::set<Index> sv, sh;
        for (const auto& f : forbidden_instances(h)) {
            const auto a = f.operands[0].index;
            if (f.kind == ForbiddenKind::ThreeAdjacentPair) pairs.insert({a, f.operands[1].index});
            if (f.kind == ForbiddenKind::TwoAdjacentTriple) triples.insert({a, f.operands[1].index});
            if (f.kind == ForbiddenKind::StrangledVertex) sv.insert(a);
            if (f.kind == ForbiddenKind::StrangledHyperedge) sh.insert(a);
        }
        mism += pairs != oracle::cluster_pairs(h, ElementKind::Hyperedge);
        mism += triples != oracle::cluster_pairs(h, ElementKind::Vertex);
        mism += sv != oracle::strangled_set(h, ElementKind::Vertex);
        mism += sh != oracle::strangled_set(h, ElementKind::Hyperedge);
    }
    struct Fixture {
        Hypergraph h;
        ForbiddenKind kind;
        OpKey fix;
    };
    const std::vector<Fixture> fixtures{
        {oracle::three_adjacent_pair(), ForbiddenKind::ThreeAdjacentPair,
         OpKey::merger(ElementId::hyperedge(0), ElementId::hyperedge(1))},
        {oracle::three_adjacent_pair().dual(), ForbiddenKind::TwoAdjacentTriple,
         OpKey::merger(ElementId::vertex(0), ElementId::vertex(1))},
        {oracle::strangled_vertex(), ForbiddenKind::StrangledVertex,
         OpKey::merger(ElementId::vertex(0), ElementId::vertex(1))},
        {oracle::strangled_vertex().dual(), ForbiddenKind::StrangledHyperedge,
         OpKey::merger(ElementId::hyperedge(0), ElementId::hyperedge(1))},
    };
    std::size_t fixtures_ok = 0;
    for (const auto& f : fixtures) {
        const auto all = forbidden_instances(f.h);
        const bool one = all.size() == 1 && all[0].kind == f.kind;
        Hypergraph g = f.h;
        const auto [removed, retained] = merger_roles(g, f.fix.first_id(), f.fix.second_id());
        (void)apply(g, AtomicOperation{f.fix.kind, removed, retained, 0, true, 0});
        fixtures_ok += one && forbidden_count(g) == 0;
    }
    return {mism == 0 && fixtures_ok == 4,
            fmt("100 random hypergraphs: %zu detector mismatches; fixtures %zu/4 with one instance, "
                "zero after one operation (exact)",
                mism, fixtures_ok)};
}

Outcome gradients() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(6);
    std::string detail;
    bool pass = true;
    const std::pair<unsigned, const char*> terms[] = {{kSeparation, "separation"},
                                                      {kRegularity, "regularity"},
                                                      {kArea, "area"},
                                                      {kIntersection, "intersection"},
                                                      {kPrimalDual, "primal-dual"}};
    for (const auto& [term, name] : terms) {
        std::size_t tested = 0, failed = 0;
        double worst = 0;
        for (int attempt = 0; tested < 100 && attempt < 2000; ++attempt) {
            const Hypergraph h = attempt % 2 ? random_connected(6, 4, 4, rng)
                                             : oracle::from_lists(5, {{0, 1, 2}, {0, 1, 3}, {3, 4}, {4}});
            EnergyModel m(h, element_sizes(h), true, EnergyConfig{});
            const auto p = gather(m, initialize(h, rng(), EnergyConfig{}, true));
            const double e = oracle::gradient_error(m, p, Phase::Regularity, term);
            if (e < 0) continue;
            ++tested;
            worst = std::max(worst, e);
            failed += e >= 1e-4;
        }
        pass = pass && tested == 100 && failed == 0;
        detail += fmt("%s %zu/%zu max %.1e; ", name, tested - failed, tested, worst);
    }
    const double dt = since(t0);
    pass = pass && dt < 30.0;
    return {pass, detail + fmt("rel. err limit 1e-4; %.2f s (limit 30 s)", dt)};
}

Outcome planar_trees() {
    std::size_t clean = 0;
    double slowest = 0;
    for (int s = 0; s < 20; ++s) {
        std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(s));
        const Hypergraph h = polygon_tree(5 + static_cast<std::size_t>(s) % 11, rng);
        PipelineConfig c = PipelineConfig::defaults();
        c.energy.seed = static_cast<std::uint64_t>(s);
        c.render = false;
        const auto t0 = Clock::now();
        const PipelineResult r = run_pipeline(c, h);
        slowest = std::max(slowest, since(t0));
        clean += r.ok && r.overlaps.at(0) && r.overlaps[0]->pair_count == 0;
    }
    return {clean >= 18 && slowest < 10.0,
            fmt("%zu/20 overlap-free (need 18); slowest run %.2f s (limit 10 s)", clean, slowest)};
}

Outcome untwisting() {
    const Hypergraph h = oracle::folded_triangles();
    std::size_t untwisted = 0, stalled = 0;
    for (int s = 0; s < 20; ++s) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(s));
        Layout l;
        l.positions = oracle::folded_positions();
        for (Vec2& q : l.positions) {
            q.x += 0.05 * (unit_interval(rng()) - 0.5);
            q.y += 0.05 * (unit_interval(rng()) - 0.5);
        }
        oracle::attach_dual_centroids(h, l);
        const Layout two = optimize_coarsest(h, l, element_sizes(h), {EnergyConfig{}, true});
        const Layout control = optimize_coarsest(h, l, element_sizes(h), {EnergyConfig{}, false});
        untwisted += overlap_report(h, two.positions).pair_count == 0;
        stalled += overlap_report(h, control.positions).pair_count >= 1;
    }
    return {untwisted >= 18 && stalled >= 10,
            fmt("two-phase %zu/20 overlap-free (need 18); regularity-only control stalls %zu/20 (need 10)",
                untwisted, stalled)};
}

Outcome multiscale_benefit() {
    const auto t0 = Clock::now();
    std::vector<double> bc, ba, mc, ma, bu, mu;
    // Area of pairs sharing three or more vertices, which no layout can avoid.
    auto forced = [](const Json& r) {
        double a = 0;
        for (const Json& p : r["pairs"]) {
            if (p["unavoidable"].get<bool>()) a += p["area"].get<double>();
        }
        return a;
    };
    for (int s = 0; s < 10; ++s) {
        std::mt19937_64 rng(5000 + static_cast<std::uint64_t>(s));
        const Hypergraph h = clustered(100, 40, 4, rng);
        PipelineConfig c = PipelineConfig::defaults();
        c.energy.seed = static_cast<std::uint64_t>(s);
        const Json j = run_bench(c, h);
        if (j["multi_scale"].is_null()) return {false, fmt("seed %d: multi-scale run failed", s)};
        bc.push_back(j["single_scale"]["pair_count"].get<double>());
        ba.push_back(j["single_scale"]["total_area"].get<double>());
        mc.push_back(j["multi_scale"]["pair_count"].get<double>());
        ma.push_back(j["multi_scale"]["total_area"].get<double>());
        bu.push_back(forced(j["single_scale"]));
        mu.push_back(forced(j["multi_scale"]));
    }
    const double dt = since(t0);
    const double ratio = median(ma) / median(ba);
    return {median(mc) <= median(bc) && ratio <= 0.75 && dt < 300.0,
            fmt("median count multi %.1f vs single %.1f (need <=); median area ratio %.3f (need <= 0.75); "
                "median unavoidable area multi %.2f, single %.2f; %.1f s (limit 300 s)",
                median(mc), median(bc), ratio, median(mu), median(bu), dt)};
}

Outcome unavoidable_floor() {
    const Hypergraph h = oracle::three_adjacent_pair();
    std::mt19937_64 rng(10);
    std::size_t layouts = 0, below = 0;
    double worst = 1e300;
    auto check = [&](const std::vector<Vec2>& p) {
        ++layouts;
        const double tri = 0.5 * std::abs(cross(p[1] - p[0], p[2] - p[0]));
        const double slack = overlap_report(h, p).total_area - tri;
        worst = std::min(worst, slack);
        below += slack < -1e-6;
    };
    for (int i = 0; i < 2000; ++i) check(initialize(h, rng(), EnergyConfig{}, false).positions);
    for (int s = 0; s < 10; ++s) {
        EnergyConfig c;
        c.seed = static_cast<std::uint64_t>(s);
        c.restarts = 1;
        check(optimize_restarts(h, element_sizes(h), {c}, true).positions);
    }
    return {below == 0, fmt("%zu layouts, %zu below the shared-triangle area; min slack %.2e (tolerance 1e-6)",
                            layouts, below, worst)};
}

Outcome determinism() {
    std::mt19937_64 rng(11);
    const Hypergraph h = clustered(40, 16, 2, rng);
    PipelineConfig c = PipelineConfig::defaults();
    c.emit = {EmitScales::Mode::All, {}};
    const auto base = std::filesystem::temp_directory_path() / "polyhg_acceptance";
    std::filesystem::remove_all(base);
    const PipelineResult a = run_pipeline(c, h, (base / "a").string());
    const PipelineResult b = run_pipeline(c, h, (base / "b").string());
    std::size_t files = 0, differ = 0;
    if (without_runtime(a.manifest) != without_runtime(b.manifest)) ++differ;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(base / "a")) {
        if (!entry.is_regular_file()) continue;
        const auto rel = std::filesystem::relative(entry.path(), base / "a");
        if (rel == "manifest.json") continue;
        ++files;
        if (read_file(entry.path().string()) != read_file((base / "b" / rel).string())) ++differ;
    }
    std::filesystem::remove_all(base);
    return {a.ok && b.ok && differ == 0 && files > 0,
            fmt("manifest plus %zu layout/SVG files compared, %zu differ (byte-exact, runtime excluded)", files,
                differ)};
}

}  // namespace

int main() {
    const auto items = corpus();
    struct Row {
        const char* name;
        Outcome (*run)(const std::vector<CorpusItem>&);
    };
    const Row rows[] = {
        {"1 round-trip exactness", round_trip},
        {"2 scale monotonicity and connectivity", monotone_connected},
        {"3 duality mirror", duality},
        {"4 betweenness oracle", [](const std::vector<CorpusItem>&) { return betweenness(); }},
        {"5 forbidden-detector completeness", [](const std::vector<CorpusItem>&) { return forbidden(); }},
        {"6 gradient checks", [](const std::vector<CorpusItem>&) { return gradients(); }},
        {"7 overlap-free planar fixtures", [](const std::vector<CorpusItem>&) { return planar_trees(); }},
        {"8 untwisting", [](const std::vector<CorpusItem>&) { return untwisting(); }},
        {"9 multi-scale benefit", [](const std::vector<CorpusItem>&) { return multiscale_benefit(); }},
        {"10 unavoidable-overlap floor", [](const std::vector<CorpusItem>&) { return unavoidable_floor(); }},
        {"11 determinism", [](const std::vector<CorpusItem>&) { return determinism(); }},
    };
    int failed = 0;
    for (const auto& row : rows) {
        Outcome o;
        try {
            o = row.run(items);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s  criterion %s: %s\n", o.pass ? "PASS" : "FAIL", row.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 11 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
