#include "polyhg/energy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace polyhg {

namespace {

constexpr double kPi = std::numbers::pi;

// Half the interior angle of a regular n-gon; zero for monogons and digons.
double half_interior(std::size_t n) {
    return n < 3 ? 0.0 : 0.5 * kPi - kPi / static_cast<double>(n);
}

double apothem_ratio(std::size_t n) {
    return n < 3 ? 0.0 : std::cos(kPi / static_cast<double>(n));
}

struct Diameter {
    double value = 0;
    std::size_t a = 0, b = 0;  // local indices of the extreme pair
};

Diameter diameter_of(std::span<const Vec2> pts) {
    Diameter d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double r = (pts[i] - pts[j]).norm();
            if (r > d.value) d = {r, i, j};
        }
    }
    return d;
}

double softplus(double z, double k) {
    const double kz = k * z;
    return (kz > 30 ? kz : std::log1p(std::exp(kz))) / k;
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

void EnergyConfig::validate() const {
    if (!(side_length > 0) || !std::isfinite(side_length)) {
        throw LayoutError("side length must be positive");
    }
    if (!(buffer >= 0) || !std::isfinite(buffer)) throw LayoutError("buffer must be non-negative");
    if (restarts == 0) throw LayoutError("restarts must be positive");
    if (!(shared_buffer >= 0) || !std::isfinite(shared_buffer)) {
        throw LayoutError("shared_buffer must be non-negative");
    }
    for (double w : {weights.separation, weights.regularity, weights.area, weights.intersection,
                     weights.primal_dual}) {
        if (!(w >= 0) || !std::isfinite(w)) throw LayoutError("energy weights must be non-negative");
    }
    if (!(gradient_tolerance > 0)) throw LayoutError("gradient tolerance must be positive");
    if (memory == 0) throw LayoutError("solver memory must be at least 1");
    if (!(softplus_sharpness > 0)) throw LayoutError("softplus sharpness must be positive");
}

double regular_radius(std::size_t n, double L0) {
    if (n == 0) throw LayoutError("regular_radius needs n >= 1");
    if (n == 1) return 0.25 * L0;
    if (n == 2) return 0.5 * L0;
    return L0 / (2.0 * std::sin(kPi / static_cast<double>(n)));
}

double regular_area(std::size_t n, double L0) {
    const double r = regular_radius(n, L0);
    if (n == 1) return kPi * r * r;
    if (n == 2) return 0.5 * kPi * r * r;
    const double nn = static_cast<double>(n);
    return 0.5 * nn * r * r * std::sin(2.0 * kPi / nn);
}

double diameter(std::span<const Vec2> pts) { return diameter_of(pts).value; }

double separation_d0(std::span<const Vec2> p, std::size_t p_original, std::span<const Vec2> q,
                     std::size_t q_original, Phase phase, const EnergyConfig& cfg) {
    if (p.empty() || q.empty()) throw LayoutError("separation_d0 needs non-empty polygons");
    if (phase == Phase::Separation) return 0.5 * (diameter(p) + diameter(q)) + cfg.buffer;
    return regular_radius(p_original, cfg.side_length) +
           regular_radius(q_original, cfg.side_length) + cfg.buffer;
}

ElementMap<std::size_t> element_sizes(const Hypergraph& h) {
    ElementMap<std::size_t> m(h.id_bound(ElementKind::Vertex), h.id_bound(ElementKind::Hyperedge),
                              0);
    for (ElementId id : h.elements()) m[id] = h.degree(id);
    return m;
}

EnergyModel::EnergyModel(const Hypergraph& h, const ElementMap<std::size_t>& original,
                         bool with_dual, EnergyConfig cfg)
    : cfg_(cfg), with_dual_(with_dual) {
    cfg_.validate();
    point_of_ = ElementMap<std::int64_t>(h.id_bound(ElementKind::Vertex),
                                         h.id_bound(ElementKind::Hyperedge), -1);
    for (Index v : h.vertices()) {
        point_of_[ElementId::vertex(v)] = static_cast<std::int64_t>(point_ids_.size());
        point_ids_.push_back(ElementId::vertex(v));
    }
    if (with_dual_) {
        for (Index e : h.hyperedges()) {
            point_of_[ElementId::hyperedge(e)] = static_cast<std::int64_t>(point_ids_.size());
            point_ids_.push_back(ElementId::hyperedge(e));
        }
    }

    auto original_of = [&](ElementId id) {
        const auto& slots = original.of(id.kind);
        const std::size_t n = id.index < slots.size() ? slots[id.index] : 0;
        return n > 0 ? n : h.degree(id);
    };
    // Primal polygons are hyperedges over vertex points; dual polygons are
    // vertices over hyperedge points.
    std::vector<std::size_t> layer_start{0};
    for (ElementKind k : {ElementKind::Hyperedge, ElementKind::Vertex}) {
        if (k == ElementKind::Vertex && !with_dual_) break;
        for (Index i : h.ids(k)) {
            PolygonRef p;
            p.owner = {k, i};
            for (Index m : h.incident(p.owner)) {
                p.points.push_back(static_cast<std::size_t>(point_of_[{opposite(k), m}]));
            }
            p.original = original_of(p.owner);
            polygons_.push_back(std::move(p));
        }
        layer_start.push_back(polygons_.size());
    }

    for (std::size_t layer = 0; layer + 1 < layer_start.size(); ++layer) {
        for (std::size_t a = layer_start[layer]; a < layer_start[layer + 1]; ++a) {
            for (std::size_t b = a + 1; b < layer_start[layer + 1]; ++b) {
                const auto& pa = polygons_[a].points;
                const auto& pb = polygons_[b].points;
                std::vector<std::size_t> common;
                std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                                      std::back_inserter(common));
                if (common.size() >= 3) continue;
                Pair pr{a, b, common.size()};
                if (common.size() == 2) {
                    pr.u = common[0];
                    pr.v = common[1];
                }
                pairs_.push_back(pr);
            }
        }
    }
}

std::int64_t EnergyModel::point_of(ElementId id) const {
    const auto& slots = point_of_.of(id.kind);
    return id.index < slots.size() ? slots[id.index] : -1;
}

void EnergyModel::set_active(const std::vector<char>& active) {
    if (active.size() != point_count()) throw LayoutError("active mask size mismatch");
    sel_polygons_.clear();
    sel_pairs_.clear();
    std::vector<char> touched(polygons_.size(), 0);
    for (std::size_t i = 0; i < polygons_.size(); ++i) {
        const PolygonRef& p = polygons_[i];
        bool t = std::any_of(p.points.begin(), p.points.end(),
                             [&](std::size_t q) { return active[q] != 0; });
        const std::int64_t twin = point_of(p.owner);
        if (twin >= 0 && active[static_cast<std::size_t>(twin)]) t = true;
        touched[i] = t;
        if (t) sel_polygons_.push_back(i);
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (touched[pairs_[i].a] || touched[pairs_[i].b]) sel_pairs_.push_back(i);
    }
    restricted_ = true;
}

void EnergyModel::clear_active() {
    restricted_ = false;
    sel_polygons_.clear();
    sel_pairs_.clear();
}

double EnergyModel::evaluate(std::span<const Vec2> pts, Phase phase, std::span<Vec2> grad,
                             unsigned terms, TermValues* parts) const {
    if (pts.size() != point_count()) throw LayoutError("position count mismatch");
    for (const Vec2& p : pts) {
        if (!p.finite()) throw LayoutError("non-finite position");
    }
    const bool want_grad = !grad.empty();
    if (want_grad) {
        if (grad.size() != point_count()) throw LayoutError("gradient size mismatch");
        std::fill(grad.begin(), grad.end(), Vec2{});
    }
    terms &= phase_terms(phase);
    if (!with_dual_) terms &= ~static_cast<unsigned>(kPrimalDual);

    const double L0 = cfg_.side_length;
    const double L2 = L0 * L0;
    const EnergyWeights& w = cfg_.weights;
    TermValues tv;

    const std::size_t np = restricted_ ? sel_polygons_.size() : polygons_.size();
    auto poly_at = [&](std::size_t k) { return restricted_ ? sel_polygons_[k] : k; };

    // Centroids of every polygon (separation pairs may reach unselected ones).
    std::vector<Vec2> centroid(polygons_.size());
    std::vector<Vec2> scratch;
    for (std::size_t i = 0; i < polygons_.size(); ++i) {
        Vec2 c;
        for (std::size_t q : polygons_[i].points) c += pts[q];
        centroid[i] = (1.0 / static_cast<double>(polygons_[i].points.size())) * c;
    }
    auto spread_centroid = [&](std::size_t poly, Vec2 g) {
        const auto& ps = polygons_[poly].points;
        const Vec2 share = (1.0 / static_cast<double>(ps.size())) * g;
        for (std::size_t q : ps) grad[q] += share;
    };

    for (std::size_t k = 0; k < np; ++k) {
        const std::size_t i = poly_at(k);
        const PolygonRef& poly = polygons_[i];
        const std::size_t n = poly.points.size();
        const Vec2 c = centroid[i];

        if ((terms & (kRegularity | kArea)) && n >= 2) {
            scratch.clear();
            std::vector<std::size_t> tie;
            for (std::size_t q : poly.points) {
                scratch.push_back(pts[q]);
                tie.push_back(q);
            }
            const auto order = angular_order(scratch, c, tie);

            if ((terms & kRegularity) && n >= 3 && w.regularity > 0) {
                const double nn = static_cast<double>(n);
                std::complex<double> wfit{};
                double spread = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    const Vec2 d = scratch[order[j]];
                    const double ang = -2.0 * kPi * static_cast<double>(j) / nn;
                    wfit += std::complex<double>(d.x, d.y) * std::polar(1.0, ang);
                    spread += (d - c).norm2();
                }
                wfit /= nn;
                const double e = (spread - nn * std::norm(wfit)) / (nn * L2);
                tv.regularity += w.regularity * e;
                if (want_grad) {
                    const double s = w.regularity * 2.0 / (nn * L2);
                    for (std::size_t j = 0; j < n; ++j) {
                        const std::complex<double> fit =
                            wfit * std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / nn);
                        const Vec2 d = scratch[order[j]] - c - Vec2{fit.real(), fit.imag()};
                        grad[poly.points[order[j]]] += s * d;
                    }
                }
            }

            if ((terms & kArea) && w.area > 0) {
                const double target = regular_area(poly.original, L0);
                double a = 0;
                if (n == 2) {
                    const Vec2 d = scratch[1] - scratch[0];
                    a = 0.125 * kPi * d.norm2();
                } else {
                    for (std::size_t j = 0; j < n; ++j) {
                        a += 0.5 * cross(scratch[order[j]], scratch[order[(j + 1) % n]]);
                    }
                }
                const double r = (a - target) / target;
                tv.area += w.area * r * r;
                if (want_grad) {
                    const double s = w.area * 2.0 * r / target;
                    if (n == 2) {
                        const Vec2 d = scratch[0] - scratch[1];
                        grad[poly.points[0]] += (s * 0.25 * kPi) * d;
                        grad[poly.points[1]] -= (s * 0.25 * kPi) * d;
                    } else {
                        for (std::size_t j = 0; j < n; ++j) {
                            const Vec2 next = scratch[order[(j + 1) % n]];
                            const Vec2 prev = scratch[order[(j + n - 1) % n]];
                            grad[poly.points[order[j]]] +=
                                (s * 0.5) * Vec2{next.y - prev.y, prev.x - next.x};
                        }
                    }
                }
            }
        }

        if ((terms & kPrimalDual) && w.primal_dual > 0) {
            const std::int64_t twin = point_of(poly.owner);
            const auto t = static_cast<std::size_t>(twin);
            const Vec2 d = pts[t] - c;
            tv.primal_dual += w.primal_dual * d.norm2() / L2;
            if (want_grad) {
                const Vec2 g = (2.0 * w.primal_dual / L2) * d;
                grad[t] += g;
                spread_centroid(i, -g);
            }
        }
    }

    const std::size_t npairs = restricted_ ? sel_pairs_.size() : pairs_.size();
    const bool sep = (terms & kSeparation) && w.separation > 0;
    const bool inter = (terms & kIntersection) && w.intersection > 0;
    for (std::size_t k = 0; (sep || inter) && k < npairs; ++k) {
        const Pair& pr = pairs_[restricted_ ? sel_pairs_[k] : k];
        const PolygonRef& P = polygons_[pr.a];
        const PolygonRef& Q = polygons_[pr.b];

        if (sep && (pr.shared == 0 || cfg_.separate_shared)) {
            // Radii and the angular size used for shared-vertex clearance.
            double r[2];
            std::size_t nsz[2];
            Diameter dm[2];
            const PolygonRef* pp[2] = {&P, &Q};
            for (int s = 0; s < 2; ++s) {
                if (phase == Phase::Separation) {
                    scratch.clear();
                    for (std::size_t q : pp[s]->points) scratch.push_back(pts[q]);
                    dm[s] = diameter_of(scratch);
                    r[s] = 0.5 * dm[s].value;
                    nsz[s] = pp[s]->points.size();
                } else {
                    r[s] = regular_radius(pp[s]->original, L0);
                    nsz[s] = pp[s]->original;
                }
            }
            double d0 = 0;
            double dr[2] = {0, 0};  // d d0 / d r_s
            bool active = true;
            if (pr.shared == 0) {
                d0 = r[0] + r[1] + cfg_.buffer;
                dr[0] = dr[1] = 1.0;
            } else if (pr.shared == 1) {
                const double theta = half_interior(nsz[0]) + half_interior(nsz[1]);
                if (theta <= 0) {
                    active = false;
                } else {
                    const double ct = std::cos(theta);
                    d0 = std::sqrt(std::max(0.0, r[0] * r[0] + r[1] * r[1] - 2 * r[0] * r[1] * ct));
                    if (d0 > 0) {
                        dr[0] = (r[0] - r[1] * ct) / d0;
                        dr[1] = (r[1] - r[0] * ct) / d0;
                    }
                }
            } else {
                dr[0] = apothem_ratio(nsz[0]);
                dr[1] = apothem_ratio(nsz[1]);
                d0 = r[0] * dr[0] + r[1] * dr[1] + cfg_.shared_buffer;
            }
            const Vec2 delta = centroid[pr.a] - centroid[pr.b];
            const double dist = delta.norm();
            if (active && d0 > 0 && dist < d0) {
                const double gap = d0 - dist;
                tv.separation += w.separation * gap * gap / L2;
                if (want_grad) {
                    const double s = 2.0 * w.separation * gap / L2;
                    if (dist > 0) {
                        const Vec2 u = (1.0 / dist) * delta;
                        spread_centroid(pr.a, -s * u);
                        spread_centroid(pr.b, s * u);
                    }
                    if (phase == Phase::Separation) {
                        for (int side = 0; side < 2; ++side) {
                            const auto& ps = pp[side]->points;
                            if (dm[side].value <= 0) continue;
                            const Vec2 a = pts[ps[dm[side].a]];
                            const Vec2 b = pts[ps[dm[side].b]];
                            const Vec2 g = (s * dr[side] * 0.5 / dm[side].value) * (a - b);
                            grad[ps[dm[side].a]] += g;
                            grad[ps[dm[side].b]] -= g;
                        }
                    }
                }
            }
        }

        if (inter && pr.shared == 2) {
            const Vec2 u = pts[pr.u];
            const Vec2 v = pts[pr.v];
            const Vec2 D = v - u;
            const double len = D.norm();
            if (len <= 0) continue;
            const Vec2 c1 = centroid[pr.a];
            const Vec2 c2 = centroid[pr.b];
            const double cr1 = cross(D, c1 - u);
            const double cr2 = cross(D, c2 - u);
            // z = s1 * s2 / L0^2 with s = cr / len
            const double K = 1.0 / L2;
            const double p = 2.0;
            const double z = K * cr1 * cr2 / (len * len);
            const double k = cfg_.softplus_sharpness;
            const double sp = softplus(z, k);
            tv.intersection += w.intersection * sp * sp;
            if (want_grad) {
                const double dEdz = w.intersection * 2.0 * sp * sigmoid(k * z);
                const double g1 = dEdz * K * cr2 / (len * len);  // dE/dcr1
                const double g2 = dEdz * K * cr1 / (len * len);
                const double gl = -dEdz * p * z / len;              // dE/dlen
                const Vec2 dc{-D.y, D.x};
                spread_centroid(pr.a, g1 * dc);
                spread_centroid(pr.b, g2 * dc);
                const Vec2 du1{v.y - c1.y, c1.x - v.x}, dv1{c1.y - u.y, u.x - c1.x};
                const Vec2 du2{v.y - c2.y, c2.x - v.x}, dv2{c2.y - u.y, u.x - c2.x};
                const Vec2 dl = (1.0 / len) * D;
                grad[pr.u] += g1 * du1 + g2 * du2 - gl * dl;
                grad[pr.v] += g1 * dv1 + g2 * dv2 + gl * dl;
            }
        }
    }

    if (parts) *parts = tv;
    return tv.total();
}

}  // namespace polyhg
