#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyhg {

using Index = std::uint32_t;

/// Raised for violated preconditions on hypergraph inputs and queries.
class HypergraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ElementKind : std::uint8_t { Vertex = 0, Hyperedge = 1 };

[[nodiscard]] constexpr ElementKind opposite(ElementKind k) noexcept {
    return k == ElementKind::Vertex ? ElementKind::Hyperedge : ElementKind::Vertex;
}

[[nodiscard]] constexpr std::size_t slot(ElementKind k) noexcept {
    return static_cast<std::size_t>(k);
}

/// Stable identity of a vertex or hyperedge within one pipeline run.
/// Vertices order before hyperedges; within a kind, by index.
struct ElementId {
    ElementKind kind = ElementKind::Vertex;
    Index index = 0;

    [[nodiscard]] static constexpr ElementId vertex(Index i) noexcept {
        return {ElementKind::Vertex, i};
    }
    [[nodiscard]] static constexpr ElementId hyperedge(Index i) noexcept {
        return {ElementKind::Hyperedge, i};
    }
    /// The counterpart of this element in the dual hypergraph.
    [[nodiscard]] constexpr ElementId dual() const noexcept { return {opposite(kind), index}; }
    [[nodiscard]] constexpr bool is_vertex() const noexcept { return kind == ElementKind::Vertex; }

    constexpr auto operator<=>(const ElementId&) const = default;
};

/// "v3" / "e7"
[[nodiscard]] std::string to_string(ElementId id);

/// Dense per-kind storage keyed by ElementId.
template <typename T>
class ElementMap {
public:
    ElementMap() = default;
    ElementMap(std::size_t vertex_bound, std::size_t hyperedge_bound, const T& init = T{}) {
        slots_[0].assign(vertex_bound, init);
        slots_[1].assign(hyperedge_bound, init);
    }

    [[nodiscard]] T& operator[](ElementId id) { return slots_[slot(id.kind)].at(id.index); }
    [[nodiscard]] const T& operator[](ElementId id) const {
        return slots_[slot(id.kind)].at(id.index);
    }
    [[nodiscard]] std::vector<T>& of(ElementKind k) { return slots_[slot(k)]; }
    [[nodiscard]] const std::vector<T>& of(ElementKind k) const { return slots_[slot(k)]; }

    /// Same storage with kinds swapped, matching `Hypergraph::dual()`.
    [[nodiscard]] ElementMap swapped() const {
        ElementMap out;
        out.slots_[0] = slots_[1];
        out.slots_[1] = slots_[0];
        return out;
    }

    bool operator==(const ElementMap&) const = default;

private:
    std::array<std::vector<T>, 2> slots_;
};

/// Vertex and hyperedge id sets (sorted ascending).
struct Footprint {
    std::vector<Index> vertices;
    std::vector<Index> hyperedges;

    [[nodiscard]] std::vector<Index>& of(ElementKind k) {
        return k == ElementKind::Vertex ? vertices : hyperedges;
    }
    [[nodiscard]] const std::vector<Index>& of(ElementKind k) const {
        return k == ElementKind::Vertex ? vertices : hyperedges;
    }
    [[nodiscard]] bool contains(ElementId id) const;
    [[nodiscard]] std::size_t size() const { return vertices.size() + hyperedges.size(); }
    /// Set union, kept sorted.
    void merge(const Footprint& other);

    bool operator==(const Footprint&) const = default;
};

/// A hypergraph with stable element ids.
///
/// Both incidence directions are stored as sorted id lists and updated
/// together, so V_e and E_v are always exact transposes. Removed elements
/// keep their slot (and label) so that an inverse operation can re-bind
/// the identical id. The two kinds are stored symmetrically; `dual()` is a
/// swap of the two sides.
class Hypergraph {
public:
    Hypergraph() = default;

    /// One vertex per distinct label, hyperedges in list order.
    /// Throws HypergraphError naming the hyperedge on an empty member list.
    static Hypergraph build(
        const std::vector<std::pair<std::string, std::vector<std::string>>>& member_lists);

    Index add_vertex(std::string label = {});
    /// Duplicate members are collapsed. Throws on empty or unknown members.
    Index add_hyperedge(std::string label, std::span<const Index> members);
    Index add_hyperedge(std::string label, std::initializer_list<Index> members) {
        return add_hyperedge(std::move(label), std::span<const Index>(members.begin(), members.size()));
    }

    [[nodiscard]] bool contains(ElementId id) const noexcept;
    /// Ids of the opposite kind incident to `id` (E_v for a vertex, V_e for a hyperedge).
    [[nodiscard]] std::span<const Index> incident(ElementId id) const;
    /// deg(v) or card(e).
    [[nodiscard]] std::size_t degree(ElementId id) const { return incident(id).size(); }
    [[nodiscard]] bool incident_to(ElementId id, Index other) const;
    [[nodiscard]] const std::string& label(ElementId id) const;
    void set_label(ElementId id, std::string label);

    /// Number of live elements of a kind.
    [[nodiscard]] std::size_t count(ElementKind k) const noexcept {
        return sides_[slot(k)].alive_count;
    }
    /// One past the largest id ever issued for a kind.
    [[nodiscard]] std::size_t id_bound(ElementKind k) const noexcept {
        return sides_[slot(k)].alive.size();
    }
    /// Live ids of a kind, ascending.
    [[nodiscard]] std::vector<Index> ids(ElementKind k) const;
    /// Live elements, vertices first.
    [[nodiscard]] std::vector<ElementId> elements() const;

    [[nodiscard]] std::size_t num_vertices() const noexcept { return count(ElementKind::Vertex); }
    [[nodiscard]] std::size_t num_hyperedges() const noexcept {
        return count(ElementKind::Hyperedge);
    }
    [[nodiscard]] std::size_t size() const noexcept { return num_vertices() + num_hyperedges(); }
    [[nodiscard]] bool empty() const noexcept { return size() == 0; }
    [[nodiscard]] std::vector<Index> vertices() const { return ids(ElementKind::Vertex); }
    [[nodiscard]] std::vector<Index> hyperedges() const { return ids(ElementKind::Hyperedge); }
    [[nodiscard]] std::span<const Index> vertex_hyperedges(Index v) const {
        return incident(ElementId::vertex(v));
    }
    [[nodiscard]] std::span<const Index> hyperedge_vertices(Index e) const {
        return incident(ElementId::hyperedge(e));
    }
    [[nodiscard]] std::size_t deg(Index v) const { return degree(ElementId::vertex(v)); }
    [[nodiscard]] std::size_t card(Index e) const { return degree(ElementId::hyperedge(e)); }

    // Mutation primitives for the simplification protocol. They do not
    // enforce non-empty hyperedges or connectivity; callers do.

    /// Deletes a live element and all its incidences. The slot is retained.
    void erase(ElementId id);
    /// Re-binds a previously erased id with the given incidences.
    void revive(ElementId id, std::span<const Index> incidence);
    /// Adds incidence between `id` and element `other` of the opposite kind.
    void link(ElementId id, Index other);
    void unlink(ElementId id, Index other);

    /// Exact transpose check between the two incidence directions.
    [[nodiscard]] bool check_transpose() const;

    /// Roles of vertices and hyperedges swapped; ids carry over unchanged.
    /// Throws HypergraphError if a live vertex has degree 0.
    [[nodiscard]] Hypergraph dual() const;

    bool operator==(const Hypergraph&) const = default;

private:
    struct Side {
        std::vector<std::vector<Index>> incidence;
        std::vector<char> alive;
        std::vector<std::string> labels;
        std::size_t alive_count = 0;

        bool operator==(const Side&) const = default;
    };

    void require(ElementId id) const;
    Side& side(ElementKind k) { return sides_[slot(k)]; }
    const Side& side(ElementKind k) const { return sides_[slot(k)]; }

    std::array<Side, 2> sides_;
};

[[nodiscard]] inline Hypergraph dual(const Hypergraph& h) { return h.dual(); }

/// Bipartite incidence graph. Nodes are live vertices (ascending) followed by
/// live hyperedges (ascending).
struct KonigGraph {
    std::vector<ElementId> nodes;
    std::vector<std::vector<std::uint32_t>> adjacency;
    std::size_t edge_count = 0;
    ElementMap<std::int64_t> node_of;  // -1 for dead slots

    [[nodiscard]] std::size_t size() const { return nodes.size(); }
};

[[nodiscard]] KonigGraph konig(const Hypergraph& h);

/// Number of shared incident elements between two distinct same-kind elements.
[[nodiscard]] std::size_t adjacency(const Hypergraph& h, ElementId x, ElementId y);

/// Same-kind elements sharing at least one incident element with `x`,
/// paired with their adjacency to `x`, ascending by id.
[[nodiscard]] std::vector<std::pair<Index, std::size_t>> adjacent(const Hypergraph& h,
                                                                  ElementId x);

/// Incident plus adjacent elements of `x`, together with `x` itself.
[[nodiscard]] Footprint neighborhood(const Hypergraph& h, ElementId x);

/// Connectivity of the König graph; the empty hypergraph is connected.
[[nodiscard]] bool is_connected(const Hypergraph& h);

[[nodiscard]] bool is_linear(const Hypergraph& h);

/// H_A: vertices in A, hyperedges clipped to A (empty clips dropped). Ids are kept.
[[nodiscard]] Hypergraph induced_sub_hypergraph(const Hypergraph& h, std::span<const Index> vertex_set);
/// H_J: hyperedges in J with the union of their members. Ids are kept.
[[nodiscard]] Hypergraph partial_hypergraph(const Hypergraph& h, std::span<const Index> hyperedge_set);

}  // namespace polyhg
