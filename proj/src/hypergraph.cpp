#include "polyhg/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace polyhg {

namespace {

void insert_sorted(std::vector<Index>& v, Index x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

void erase_sorted(std::vector<Index>& v, Index x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

std::vector<Index> sorted_union(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::vector<Index> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::string to_string(ElementId id) {
    return (id.is_vertex() ? "v" : "e") + std::to_string(id.index);
}

bool Footprint::contains(ElementId id) const {
    const auto& v = of(id.kind);
    return std::binary_search(v.begin(), v.end(), id.index);
}

void Footprint::merge(const Footprint& other) {
    vertices = sorted_union(vertices, other.vertices);
    hyperedges = sorted_union(hyperedges, other.hyperedges);
}

Hypergraph Hypergraph::build(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& member_lists) {
    Hypergraph h;
    std::map<std::string, Index> by_label;
    for (const auto& [edge_label, members] : member_lists) {
        if (members.empty()) {
            throw HypergraphError("hyperedge '" + edge_label + "' has no members");
        }
        std::vector<Index> ids;
        ids.reserve(members.size());
        for (const auto& name : members) {
            auto [it, inserted] = by_label.try_emplace(name, 0);
            if (inserted) it->second = h.add_vertex(name);
            ids.push_back(it->second);
        }
        h.add_hyperedge(edge_label, ids);
    }
    return h;
}

Index Hypergraph::add_vertex(std::string label) {
    auto& s = side(ElementKind::Vertex);
    const auto id = static_cast<Index>(s.alive.size());
    s.incidence.emplace_back();
    s.alive.push_back(1);
    s.labels.push_back(std::move(label));
    ++s.alive_count;
    return id;
}

Index Hypergraph::add_hyperedge(std::string label, std::span<const Index> members) {
    if (members.empty()) throw HypergraphError("hyperedge '" + label + "' has no members");
    for (Index v : members) {
        if (!contains(ElementId::vertex(v))) {
            throw HypergraphError("hyperedge '" + label + "' references unknown vertex " +
                                  std::to_string(v));
        }
    }
    auto& s = side(ElementKind::Hyperedge);
    const auto id = static_cast<Index>(s.alive.size());
    s.incidence.emplace_back();
    s.alive.push_back(1);
    s.labels.push_back(std::move(label));
    ++s.alive_count;
    for (Index v : members) link(ElementId::hyperedge(id), v);
    return id;
}

bool Hypergraph::contains(ElementId id) const noexcept {
    const auto& s = side(id.kind);
    return id.index < s.alive.size() && s.alive[id.index] != 0;
}

void Hypergraph::require(ElementId id) const {
    if (!contains(id)) throw HypergraphError("unknown element " + to_string(id));
}

std::span<const Index> Hypergraph::incident(ElementId id) const {
    require(id);
    return side(id.kind).incidence[id.index];
}

bool Hypergraph::incident_to(ElementId id, Index other) const {
    auto inc = incident(id);
    return std::binary_search(inc.begin(), inc.end(), other);
}

const std::string& Hypergraph::label(ElementId id) const {
    const auto& s = side(id.kind);
    if (id.index >= s.labels.size()) throw HypergraphError("unknown element " + to_string(id));
    return s.labels[id.index];
}

void Hypergraph::set_label(ElementId id, std::string label) {
    auto& s = side(id.kind);
    if (id.index >= s.labels.size()) throw HypergraphError("unknown element " + to_string(id));
    s.labels[id.index] = std::move(label);
}

std::vector<Index> Hypergraph::ids(ElementKind k) const {
    const auto& s = side(k);
    std::vector<Index> out;
    out.reserve(s.alive_count);
    for (Index i = 0; i < s.alive.size(); ++i) {
        if (s.alive[i]) out.push_back(i);
    }
    return out;
}

std::vector<ElementId> Hypergraph::elements() const {
    std::vector<ElementId> out;
    out.reserve(size());
    for (ElementKind k : {ElementKind::Vertex, ElementKind::Hyperedge}) {
        for (Index i : ids(k)) out.push_back({k, i});
    }
    return out;
}

void Hypergraph::erase(ElementId id) {
    require(id);
    auto& s = side(id.kind);
    auto& other = side(opposite(id.kind));
    for (Index o : s.incidence[id.index]) erase_sorted(other.incidence[o], id.index);
    s.incidence[id.index].clear();
    s.alive[id.index] = 0;
    --s.alive_count;
}

void Hypergraph::revive(ElementId id, std::span<const Index> incidence) {
    auto& s = side(id.kind);
    if (id.index >= s.alive.size() || s.alive[id.index]) {
        throw HypergraphError("cannot revive " + to_string(id) + ": not an erased slot");
    }
    s.alive[id.index] = 1;
    ++s.alive_count;
    for (Index o : incidence) link(id, o);
}

void Hypergraph::link(ElementId id, Index other) {
    require(id);
    const ElementId o{opposite(id.kind), other};
    require(o);
    insert_sorted(side(id.kind).incidence[id.index], other);
    insert_sorted(side(o.kind).incidence[other], id.index);
}

void Hypergraph::unlink(ElementId id, Index other) {
    require(id);
    const ElementId o{opposite(id.kind), other};
    require(o);
    erase_sorted(side(id.kind).incidence[id.index], other);
    erase_sorted(side(o.kind).incidence[other], id.index);
}

bool Hypergraph::check_transpose() const {
    for (ElementKind k : {ElementKind::Vertex, ElementKind::Hyperedge}) {
        const auto& s = side(k);
        const auto& o = side(opposite(k));
        std::size_t alive = 0;
        for (Index i = 0; i < s.alive.size(); ++i) {
            const auto& inc = s.incidence[i];
            if (!std::is_sorted(inc.begin(), inc.end()) ||
                std::adjacent_find(inc.begin(), inc.end()) != inc.end()) {
                return false;
            }
            if (!s.alive[i]) {
                if (!inc.empty()) return false;
                continue;
            }
            ++alive;
            for (Index j : inc) {
                if (j >= o.alive.size() || !o.alive[j]) return false;
                if (!std::binary_search(o.incidence[j].begin(), o.incidence[j].end(), i)) {
                    return false;
                }
            }
        }
        if (alive != s.alive_count) return false;
    }
    return true;
}

Hypergraph Hypergraph::dual() const {
    for (Index v : ids(ElementKind::Vertex)) {
        if (deg(v) == 0) {
            throw HypergraphError("vertex " + to_string(ElementId::vertex(v)) +
                                  " is isolated; its dual hyperedge would be empty");
        }
    }
    Hypergraph d;
    d.sides_[0] = sides_[1];
    d.sides_[1] = sides_[0];
    return d;
}

KonigGraph konig(const Hypergraph& h) {
    KonigGraph g;
    g.node_of = ElementMap<std::int64_t>(h.id_bound(ElementKind::Vertex),
                                         h.id_bound(ElementKind::Hyperedge), -1);
    g.nodes = h.elements();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        g.node_of[g.nodes[i]] = static_cast<std::int64_t>(i);
    }
    g.adjacency.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const ElementId x = g.nodes[i];
        for (Index o : h.incident(x)) {
            g.adjacency[i].push_back(static_cast<std::uint32_t>(g.node_of[{opposite(x.kind), o}]));
        }
        if (x.is_vertex()) g.edge_count += g.adjacency[i].size();
    }
    return g;
}

std::size_t adjacency(const Hypergraph& h, ElementId x, ElementId y) {
    if (x.kind != y.kind) {
        throw HypergraphError("adjacency requires elements of the same kind: " + to_string(x) +
                              ", " + to_string(y));
    }
    if (x == y) throw HypergraphError("adjacency of an element with itself: " + to_string(x));
    auto a = h.incident(x);
    auto b = h.incident(y);
    std::size_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

std::vector<std::pair<Index, std::size_t>> adjacent(const Hypergraph& h, ElementId x) {
    std::map<Index, std::size_t> counts;
    for (Index o : h.incident(x)) {
        for (Index y : h.incident({opposite(x.kind), o})) {
            if (y != x.index) ++counts[y];
        }
    }
    return {counts.begin(), counts.end()};
}

Footprint neighborhood(const Hypergraph& h, ElementId x) {
    Footprint f;
    auto inc = h.incident(x);
    f.of(opposite(x.kind)).assign(inc.begin(), inc.end());
    auto& same = f.of(x.kind);
    same.push_back(x.index);
    for (const auto& [y, a] : adjacent(h, x)) same.push_back(y);
    std::sort(same.begin(), same.end());
    return f;
}

bool is_connected(const Hypergraph& h) {
    if (h.empty()) return true;
    const KonigGraph g = konig(h);
    std::vector<char> seen(g.size(), 0);
    std::queue<std::uint32_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        const auto n = q.front();
        q.pop();
        for (auto m : g.adjacency[n]) {
            if (!seen[m]) {
                seen[m] = 1;
                ++reached;
                q.push(m);
            }
        }
    }
    return reached == g.size();
}

bool is_linear(const Hypergraph& h) {
    for (Index e : h.hyperedges()) {
        for (const auto& [f, a] : adjacent(h, ElementId::hyperedge(e))) {
            if (a > 1) return false;
        }
    }
    return true;
}

namespace {

// Copy of `h` with every live element erased; labels and id bounds retained.
Hypergraph hollow(const Hypergraph& h) {
    Hypergraph out = h;
    for (Index e : h.hyperedges()) out.erase(ElementId::hyperedge(e));
    for (Index v : h.vertices()) out.erase(ElementId::vertex(v));
    return out;
}

}  // namespace

Hypergraph induced_sub_hypergraph(const Hypergraph& h, std::span<const Index> vertex_set) {
    std::vector<Index> keep(vertex_set.begin(), vertex_set.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Index v : keep) {
        if (!h.contains(ElementId::vertex(v))) {
            throw HypergraphError("unknown element " + to_string(ElementId::vertex(v)));
        }
    }
    Hypergraph out = hollow(h);
    for (Index v : keep) out.revive(ElementId::vertex(v), {});
    for (Index e : h.hyperedges()) {
        std::vector<Index> clipped;
        for (Index v : h.hyperedge_vertices(e)) {
            if (std::binary_search(keep.begin(), keep.end(), v)) clipped.push_back(v);
        }
        if (!clipped.empty()) out.revive(ElementId::hyperedge(e), clipped);
    }
    return out;
}

Hypergraph partial_hypergraph(const Hypergraph& h, std::span<const Index> hyperedge_set) {
    std::vector<Index> keep(hyperedge_set.begin(), hyperedge_set.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Index e : keep) {
        if (!h.contains(ElementId::hyperedge(e))) {
            throw HypergraphError("unknown element " + to_string(ElementId::hyperedge(e)));
        }
    }
    Hypergraph out = hollow(h);
    std::vector<Index> members;
    for (Index e : keep) {
        auto vs = h.hyperedge_vertices(e);
        members.insert(members.end(), vs.begin(), vs.end());
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Index v : members) out.revive(ElementId::vertex(v), {});
    for (Index e : keep) out.revive(ElementId::hyperedge(e), h.hyperedge_vertices(e));
    return out;
}

}  // namespace polyhg
