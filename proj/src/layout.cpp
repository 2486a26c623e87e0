#include "polyhg/layout.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace polyhg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool same(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool fa = a[i].finite();
        if (fa != b[i].finite() || (fa && !(a[i] == b[i]))) return false;
    }
    return true;
}

Vec2 disk_sample(std::mt19937_64& rng, double radius) {
    const double r = radius * std::sqrt(unit_interval(rng()));
    const double th = 2.0 * std::numbers::pi * unit_interval(rng());
    return {r * std::cos(th), r * std::sin(th)};
}

std::mt19937_64 step_rng(std::uint64_t seed, std::size_t scale) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(scale), 0x5ca1eu};
    return std::mt19937_64(seq);
}

Vec2 centroid_of(std::span<const Index> ids, const std::vector<Vec2>& pos) {
    Vec2 c;
    for (Index i : ids) c += pos.at(i);
    return ids.empty() ? c : (1.0 / static_cast<double>(ids.size())) * c;
}

}  // namespace

bool Layout::has(Index v) const { return v < positions.size() && positions[v].finite(); }

Vec2 Layout::at(Index v) const {
    if (!has(v)) throw LayoutError("no position for v" + std::to_string(v));
    return positions[v];
}

Vec2 Layout::dual_at(Index e) const {
    if (!dual_positions || e >= dual_positions->size() || !(*dual_positions)[e].finite()) {
        throw LayoutError("no dual position for e" + std::to_string(e));
    }
    return (*dual_positions)[e];
}

bool Layout::covers(const Hypergraph& h) const {
    for (Index v : h.vertices()) {
        if (!has(v)) return false;
    }
    if (dual_positions) {
        for (Index e : h.hyperedges()) {
            if (e >= dual_positions->size() || !(*dual_positions)[e].finite()) return false;
        }
    }
    return true;
}

bool Layout::operator==(const Layout& o) const {
    if (scale_index != o.scale_index || !same(positions, o.positions)) return false;
    if (dual_positions.has_value() != o.dual_positions.has_value()) return false;
    return !dual_positions || same(*dual_positions, *o.dual_positions);
}

Layout initialize(const Hypergraph& h, std::uint64_t seed, const EnergyConfig& cfg,
                  bool with_dual) {
    std::mt19937_64 rng(seed);
    const double radius = cfg.side_length * std::sqrt(static_cast<double>(h.size()));
    Layout l;
    l.positions.assign(h.id_bound(ElementKind::Vertex), Vec2{kNaN, kNaN});
    for (Index v : h.vertices()) l.positions[v] = disk_sample(rng, radius);
    if (with_dual) {
        l.dual_positions.emplace(h.id_bound(ElementKind::Hyperedge), Vec2{kNaN, kNaN});
        for (Index e : h.hyperedges()) (*l.dual_positions)[e] = disk_sample(rng, radius);
    }
    return l;
}

std::vector<Vec2> gather(const EnergyModel& model, const Layout& layout) {
    std::vector<Vec2> pts;
    pts.reserve(model.point_count());
    for (ElementId id : model.point_ids()) {
        pts.push_back(id.is_vertex() ? layout.at(id.index) : layout.dual_at(id.index));
    }
    return pts;
}

void scatter(const EnergyModel& model, std::span<const Vec2> pts, Layout& layout) {
    const auto& ids = model.point_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto& target = ids[i].is_vertex() ? layout.positions : *layout.dual_positions;
        target.at(ids[i].index) = pts[i];
    }
}

MinimizeResult minimize_phase(const EnergyModel& model, std::vector<Vec2>& pts, Phase phase,
                              std::size_t max_iterations, const std::vector<char>& active) {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (active.empty() || active[i]) free.push_back(i);
    }
    const EnergyConfig& cfg = model.config();
    MinimizeOptions opt;
    opt.max_iterations = max_iterations;
    opt.gradient_tolerance = cfg.gradient_tolerance;
    opt.memory = cfg.memory;

    std::vector<Vec2> work = pts;
    std::vector<Vec2> grad(pts.size());
    Objective f = [&](std::span<const double> x, std::span<double> g) {
        for (std::size_t k = 0; k < free.size(); ++k) work[free[k]] = {x[2 * k], x[2 * k + 1]};
        const double e = model.evaluate(work, phase, grad);
        for (std::size_t k = 0; k < free.size(); ++k) {
            g[2 * k] = grad[free[k]].x;
            g[2 * k + 1] = grad[free[k]].y;
        }
        return e;
    };
    std::vector<double> x0(2 * free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        x0[2 * k] = pts[free[k]].x;
        x0[2 * k + 1] = pts[free[k]].y;
    }
    MinimizeResult r = minimize(f, std::move(x0), opt);
    for (std::size_t k = 0; k < free.size(); ++k) pts[free[k]] = {r.x[2 * k], r.x[2 * k + 1]};
    return r;
}

Layout optimize_coarsest(const Hypergraph& hn, Layout layout,
                         const ElementMap<std::size_t>& original, const OptimizeOptions& opt,
                         std::vector<PhaseReport>* report) {
    if (!layout.covers(hn)) throw LayoutError("layout does not cover the hypergraph");
    const EnergyModel model(hn, original, layout.dual_positions.has_value(), opt.energy);
    std::vector<Vec2> pts = gather(model, layout);
    auto run = [&](Phase phase, std::size_t cap) {
        const MinimizeResult r = minimize_phase(model, pts, phase, cap);
        if (report) {
            report->push_back({phase, r.status, r.iterations, r.history.front(), r.value});
        }
    };
    if (opt.separation_phase) run(Phase::Separation, opt.energy.separation_iterations);
    run(Phase::Regularity, opt.energy.regularity_iterations);
    scatter(model, pts, layout);
    return layout;
}

Layout optimize_restarts(const Hypergraph& hn, const ElementMap<std::size_t>& original,
                         const OptimizeOptions& opt, bool with_dual,
                         std::vector<PhaseReport>* report) {
    opt.energy.validate();
    const std::size_t restarts = opt.energy.restarts;
    Layout best;
    double best_energy = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < restarts; ++r) {
        std::seed_seq seq{opt.energy.seed, static_cast<std::uint64_t>(r)};
        std::mt19937_64 rng(seq);
        std::vector<PhaseReport> phases;
        Layout l = optimize_coarsest(hn, initialize(hn, rng(), opt.energy, with_dual), original,
                                     opt, &phases);
        // Strict comparison keeps the earliest restart on ties.
        if (phases.back().final_energy < best_energy || r == 0) {
            best_energy = phases.back().final_energy;
            best = std::move(l);
            if (report) *report = std::move(phases);
        }
    }
    return best;
}

std::vector<Layout> reverse_and_refine(Hypergraph h, const Layout& coarsest,
                                       std::span<const AppliedRecord> stack,
                                       const ElementMap<std::size_t>& original,
                                       const EnergyConfig& cfg, std::vector<RefineStep>* log,
                                       std::vector<Hypergraph>* hypergraphs) {
    if (!coarsest.covers(h)) throw LayoutError("coarsest layout does not cover the hypergraph");
    const bool with_dual = coarsest.dual_positions.has_value();
    const std::size_t n = stack.size();
    std::vector<Layout> out(n + 1);
    out[n] = coarsest;
    out[n].scale_index = n;
    if (hypergraphs) {
        hypergraphs->assign(n + 1, Hypergraph{});
        (*hypergraphs)[n] = h;
    }

    Layout cur = out[n];
    for (std::size_t i = n; i-- > 0;) {
        const AppliedRecord& rec = stack[i];
        try {
            invert(h, rec);
            cur.positions.resize(h.id_bound(ElementKind::Vertex), Vec2{kNaN, kNaN});
            if (with_dual) {
                cur.dual_positions->resize(h.id_bound(ElementKind::Hyperedge), Vec2{kNaN, kNaN});
            }

            RefineStep step;
            step.scale_index = i;
            std::mt19937_64 rng = step_rng(cfg.seed, i);
            const double jitter = 0.01 * cfg.side_length;
            const Index r = rec.removed.index;
            if (rec.removed.is_vertex()) {
                Vec2 p;
                if (with_dual) {
                    p = centroid_of(h.vertex_hyperedges(r), *cur.dual_positions);
                } else {
                    std::vector<Vec2> cs;
                    for (Index e : h.vertex_hyperedges(r)) {
                        Vec2 c;
                        std::size_t k = 0;
                        for (Index v : h.hyperedge_vertices(e)) {
                            if (v == r) continue;
                            c += cur.at(v);
                            ++k;
                        }
                        if (k > 0) cs.push_back((1.0 / static_cast<double>(k)) * c);
                    }
                    p = mean(cs);
                }
                cur.positions[r] = p + disk_sample(rng, jitter);
                step.placed.push_back(r);
            } else if (with_dual) {
                (*cur.dual_positions)[r] =
                    centroid_of(h.hyperedge_vertices(r), cur.positions) + disk_sample(rng, jitter);
                step.placed.push_back(r);
            }

            OpKey key = rec.retained ? OpKey::merger(rec.removed, *rec.retained)
                                     : OpKey::removal(rec.removed);
            const Footprint fp = footprint(h, key);
            EnergyModel model(h, original, with_dual, cfg);
            std::vector<char> active(model.point_count(), 0);
            for (Index v : fp.vertices) active[static_cast<std::size_t>(model.point_of(ElementId::vertex(v)))] = 1;
            if (with_dual) {
                for (Index e : fp.hyperedges) {
                    active[static_cast<std::size_t>(model.point_of(ElementId::hyperedge(e)))] = 1;
                }
            }
            model.set_active(active);
            std::vector<Vec2> pts = gather(model, cur);
            if (cfg.local_separation) {
                (void)minimize_phase(model, pts, Phase::Separation, cfg.local_iterations, active);
            }
            const MinimizeResult res =
                minimize_phase(model, pts, Phase::Regularity, cfg.local_iterations, active);
            scatter(model, pts, cur);
            step.energy_before = res.history.front();
            step.energy_after = res.value;
            step.status = res.status;
            step.iterations = res.iterations;

            cur.scale_index = i;
            out[i] = cur;
            if (hypergraphs) (*hypergraphs)[i] = h;
            if (log) log->push_back(std::move(step));
        } catch (const RefineError&) {
            throw;
        } catch (const std::exception& e) {
            throw RefineError(i, "scale " + std::to_string(i) + ", operation " + std::to_string(i) +
                                     " (" + to_string(rec.kind) + " " + to_string(rec.removed) +
                                     "): " + e.what());
        }
    }
    return out;
}

}  // namespace polyhg
