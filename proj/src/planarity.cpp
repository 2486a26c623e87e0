#include "polyhg/planarity.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace polyhg {

const char* to_string(ForbiddenKind k) {
    switch (k) {
        case ForbiddenKind::ThreeAdjacentPair: return "three_adjacent_pair";
        case ForbiddenKind::TwoAdjacentTriple: return "two_adjacent_triple";
        case ForbiddenKind::StrangledVertex: return "strangled_vertex";
        case ForbiddenKind::StrangledHyperedge: return "strangled_hyperedge";
    }
    return "unknown";
}

namespace {

// Same-kind pairs sharing at least three incident elements.
std::vector<ForbiddenInstance> cluster_pairs(const Hypergraph& h, ElementKind kind,
                                             ForbiddenKind tag) {
    std::vector<ForbiddenInstance> out;
    for (Index x : h.ids(kind)) {
        const ElementId xe{kind, x};
        for (const auto& [y, a] : adjacent(h, xe)) {
            if (y <= x || a < 3) continue;
            ForbiddenInstance inst;
            inst.kind = tag;
            inst.operands = {xe, {kind, y}};
            auto ix = h.incident(xe);
            auto iy = h.incident({kind, y});
            std::vector<Index> shared;
            std::set_intersection(ix.begin(), ix.end(), iy.begin(), iy.end(),
                                  std::back_inserter(shared));
            for (Index s : shared) inst.witness.push_back({opposite(kind), s});
            out.push_back(std::move(inst));
        }
    }
    return out;
}

// Link structure of a center element: its incident elements ("ring") and
// its adjacent same-kind elements ("spokes"), joined by incidence that
// does not pass through the center.
struct Link {
    std::vector<Index> ring;
    std::vector<Index> spokes;
    std::vector<std::vector<std::uint32_t>> ring_to_spoke;
    std::vector<std::vector<std::uint32_t>> spoke_to_ring;
};

Link build_link(const Hypergraph& h, ElementId center) {
    Link l;
    auto inc = h.incident(center);
    l.ring.assign(inc.begin(), inc.end());
    for (const auto& [y, a] : adjacent(h, center)) l.spokes.push_back(y);
    l.ring_to_spoke.resize(l.ring.size());
    l.spoke_to_ring.resize(l.spokes.size());
    const ElementKind ring_kind = opposite(center.kind);
    for (std::uint32_t r = 0; r < l.ring.size(); ++r) {
        for (Index s : h.incident({ring_kind, l.ring[r]})) {
            if (s == center.index) continue;
            auto it = std::lower_bound(l.spokes.begin(), l.spokes.end(), s);
            const auto si = static_cast<std::uint32_t>(it - l.spokes.begin());
            l.ring_to_spoke[r].push_back(si);
            l.spoke_to_ring[si].push_back(r);
        }
    }
    return l;
}

// Depth-first search for a simple cycle whose ring nodes number at least
// three and strictly fewer than the whole ring. Each cycle is rooted at its
// smallest ring node.
class CycleSearch {
public:
    CycleSearch(const Link& link, std::size_t step_cap) : link_(link), cap_(step_cap) {}

    bool run() {
        const std::size_t n = link_.ring.size();
        if (n < 4) return false;
        ring_used_.assign(n, 0);
        spoke_used_.assign(link_.spokes.size(), 0);
        for (std::uint32_t root = 0; root < n; ++root) {
            root_ = root;
            path_ring_ = {root};
            path_spoke_.clear();
            ring_used_[root] = 1;
            if (extend(root)) return true;
            ring_used_[root] = 0;
        }
        return false;
    }

    [[nodiscard]] const std::vector<std::uint32_t>& ring_path() const { return path_ring_; }
    [[nodiscard]] const std::vector<std::uint32_t>& spoke_path() const { return path_spoke_; }

private:
    bool extend(std::uint32_t r) {
        const std::size_t limit = link_.ring.size() - 1;
        for (auto s : link_.ring_to_spoke[r]) {
            if (spoke_used_[s]) continue;
            if (++steps_ > cap_) {
                throw PlanarityIndeterminate("cycle search exceeded its step budget");
            }
            spoke_used_[s] = 1;
            path_spoke_.push_back(s);
            if (path_ring_.size() >= 3) {
                const auto& back = link_.spoke_to_ring[s];
                if (std::find(back.begin(), back.end(), root_) != back.end()) return true;
            }
            if (path_ring_.size() < limit) {
                for (auto next : link_.spoke_to_ring[s]) {
                    if (next <= root_ || ring_used_[next]) continue;
                    ring_used_[next] = 1;
                    path_ring_.push_back(next);
                    if (extend(next)) return true;
                    path_ring_.pop_back();
                    ring_used_[next] = 0;
                }
            }
            path_spoke_.pop_back();
            spoke_used_[s] = 0;
        }
        return false;
    }

    const Link& link_;
    std::size_t cap_;
    std::size_t steps_ = 0;
    std::uint32_t root_ = 0;
    std::vector<char> ring_used_, spoke_used_;
    std::vector<std::uint32_t> path_ring_, path_spoke_;
};

std::vector<ForbiddenInstance> strangled_of_kind(const Hypergraph& h, ElementKind kind,
                                                 std::size_t step_cap) {
    std::vector<ForbiddenInstance> out;
    for (Index x : h.ids(kind)) {
        auto found = strangled_at(h, {kind, x}, step_cap);
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

}  // namespace

std::vector<ForbiddenInstance> strangled_at(const Hypergraph& h, ElementId center,
                                            std::size_t step_cap) {
    const Link link = build_link(h, center);
    CycleSearch search(link, step_cap);
    if (!search.run()) return {};

    ForbiddenInstance inst;
    inst.kind = center.is_vertex() ? ForbiddenKind::StrangledVertex
                                   : ForbiddenKind::StrangledHyperedge;
    inst.operands = {center};
    const ElementKind ring_kind = opposite(center.kind);
    const auto& rp = search.ring_path();
    const auto& sp = search.spoke_path();
    for (std::size_t i = 0; i < rp.size(); ++i) {
        inst.witness.push_back({ring_kind, link.ring[rp[i]]});
        inst.witness.push_back({center.kind, link.spokes[sp[i]]});
    }
    inst.strict = sp.size() < link.spokes.size();
    return {inst};
}

std::vector<ForbiddenInstance> three_adjacent_pairs(const Hypergraph& h) {
    return cluster_pairs(h, ElementKind::Hyperedge, ForbiddenKind::ThreeAdjacentPair);
}

std::vector<ForbiddenInstance> two_adjacent_triples(const Hypergraph& h) {
    return cluster_pairs(h, ElementKind::Vertex, ForbiddenKind::TwoAdjacentTriple);
}

std::vector<ForbiddenInstance> strangled_vertices(const Hypergraph& h, std::size_t step_cap) {
    return strangled_of_kind(h, ElementKind::Vertex, step_cap);
}

std::vector<ForbiddenInstance> strangled_hyperedges(const Hypergraph& h, std::size_t step_cap) {
    return strangled_of_kind(h, ElementKind::Hyperedge, step_cap);
}

std::vector<ForbiddenInstance> forbidden_instances(const Hypergraph& h, std::size_t step_cap) {
    std::vector<ForbiddenInstance> all = three_adjacent_pairs(h);
    for (auto&& part : {two_adjacent_triples(h), strangled_vertices(h, step_cap),
                        strangled_hyperedges(h, step_cap)}) {
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

std::size_t forbidden_count(const Hypergraph& h, std::size_t step_cap) {
    return forbidden_instances(h, step_cap).size();
}

bool is_zykov_planar(const Hypergraph& h) {
    const KonigGraph k = konig(h);
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph g(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (!k.nodes[i].is_vertex()) continue;
        for (auto j : k.adjacency[i]) boost::add_edge(i, j, g);
    }
    return boost::boyer_myrvold_planarity_test(g);
}

bool convex_polygon_planar(const Hypergraph& h) {
    return is_zykov_planar(h) && forbidden_count(h) == 0;
}

PlanarityReport planarity_report(const Hypergraph& h, std::size_t step_cap) {
    PlanarityReport r;
    r.zykov_planar = is_zykov_planar(h);
    r.instances = forbidden_instances(h, step_cap);
    r.forbidden_count = r.instances.size();
    r.convex_polygon_planar = r.zykov_planar && r.forbidden_count == 0;
    return r;
}

}  // namespace polyhg
