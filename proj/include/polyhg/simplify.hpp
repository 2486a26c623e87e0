#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyhg/hypergraph.hpp"
#include "polyhg/planarity.hpp"
#include "polyhg/stats.hpp"

namespace polyhg {

class SimplifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OpKind : std::uint8_t { VertexRemoval, HyperedgeRemoval, VertexMerger, HyperedgeMerger };

[[nodiscard]] const char* to_string(OpKind k);
[[nodiscard]] OpKind op_kind_from_string(const std::string& s);
[[nodiscard]] constexpr bool is_merger(OpKind k) noexcept {
    return k == OpKind::VertexMerger || k == OpKind::HyperedgeMerger;
}
[[nodiscard]] constexpr ElementKind operand_kind(OpKind k) noexcept {
    return (k == OpKind::VertexRemoval || k == OpKind::VertexMerger) ? ElementKind::Vertex
                                                                     : ElementKind::Hyperedge;
}
[[nodiscard]] constexpr OpKind removal_of(ElementKind k) noexcept {
    return k == ElementKind::Vertex ? OpKind::VertexRemoval : OpKind::HyperedgeRemoval;
}
[[nodiscard]] constexpr OpKind merger_of(ElementKind k) noexcept {
    return k == ElementKind::Vertex ? OpKind::VertexMerger : OpKind::HyperedgeMerger;
}
/// The equivalent operation on the dual hypergraph.
[[nodiscard]] constexpr OpKind mirror(OpKind k) noexcept {
    return is_merger(k) ? merger_of(opposite(operand_kind(k)))
                        : removal_of(opposite(operand_kind(k)));
}

/// Identity of a candidate operation: a removal of `first`, or a merger of
/// the unordered pair {first, second} with first < second.
struct OpKey {
    OpKind kind{};
    Index first = 0;
    Index second = 0;

    [[nodiscard]] static OpKey removal(ElementId x) { return {removal_of(x.kind), x.index, x.index}; }
    [[nodiscard]] static OpKey merger(ElementId x, ElementId y);
    [[nodiscard]] ElementId first_id() const { return {operand_kind(kind), first}; }
    [[nodiscard]] ElementId second_id() const { return {operand_kind(kind), second}; }

    auto operator<=>(const OpKey&) const = default;
};

struct AtomicOperation {
    OpKind kind{};
    ElementId removed;
    std::optional<ElementId> retained;  // mergers only
    double priority = 0.0;
    bool legal = false;
    std::uint64_t version = 0;

    [[nodiscard]] OpKey key() const;
};

/// An applied operation with the pre-state needed for exact inversion.
struct AppliedRecord {
    OpKind kind{};
    ElementId removed;
    std::optional<ElementId> retained;
    std::vector<Index> removed_incidence;  // incident elements of `removed` before application
    std::vector<Index> shared;             // mergers: incidence common to both operands
    double priority = 0.0;
    std::size_t scale_index = 0;           // the scale this operation produced

    bool operator==(const AppliedRecord&) const = default;
};

/// The record of the same operation applied to the dual hypergraph.
[[nodiscard]] AppliedRecord mirrored(const AppliedRecord& r);

struct PriorityWeights {
    double alpha = 0.4;
    double beta = 0.4;
    double gamma = 0.2;

    void validate() const;
    bool operator==(const PriorityWeights&) const = default;
};

struct TerminationCriteria {
    std::optional<std::size_t> target_vertices;
    std::optional<std::size_t> target_hyperedges;
    bool until_linear = false;
    bool until_forbidden_free = false;

    void validate() const;
    bool operator==(const TerminationCriteria&) const = default;
};

enum class StopReason { TargetVertices, TargetHyperedges, Linear, ForbiddenFree, Exhausted };
[[nodiscard]] const char* to_string(StopReason r);

/// First satisfied criterion, checked in declaration order.
[[nodiscard]] std::optional<StopReason> satisfied_criterion(const Hypergraph& h,
                                                            const TerminationCriteria& c);

/// Removing `x` keeps every pair of its incident elements adjacent and
/// leaves no incident element without incidences.
[[nodiscard]] bool removal_legal(const Hypergraph& h, ElementId x);
/// adjacency(x, y) >= 2. Throws SimplifyError if the pair is not adjacent.
[[nodiscard]] bool merger_legal(const Hypergraph& h, ElementId x, ElementId y);
/// (removed, retained): larger degree is retained, ties keep the lower id.
[[nodiscard]] std::pair<ElementId, ElementId> merger_roles(const Hypergraph& h, ElementId x,
                                                           ElementId y);
/// Union of the operands' neighborhoods.
[[nodiscard]] Footprint footprint(const Hypergraph& h, const OpKey& key);
[[nodiscard]] bool legal(const Hypergraph& h, const OpKey& key);

/// Weighted priority of a legal operation. Degenerate normalizer ranges
/// contribute zero. Throws SimplifyError if the operation is illegal.
[[nodiscard]] double priority(const Hypergraph& h, const OpKey& key, const PriorityWeights& w,
                              const Normalizers& n, const StatTable& stats);

/// Builds a fully described operation for `key` on the current hypergraph.
[[nodiscard]] AtomicOperation evaluate(const Hypergraph& h, const OpKey& key,
                                       const PriorityWeights& w, const Normalizers& n,
                                       const StatTable& stats);

/// Applies a legal operation. Throws SimplifyError if it is stale or illegal.
AppliedRecord apply(Hypergraph& h, const AtomicOperation& op);
/// Exact inverse of `apply`. Throws SimplifyError if `h` is not in the state
/// the record left it in.
void invert(Hypergraph& h, const AppliedRecord& record);

/// Max-priority queue of legal operations with version-stamped lazy
/// invalidation. Illegal candidates are tracked off-queue.
class OperationQueue {
public:
    OperationQueue(PriorityWeights weights, Normalizers normalizers);

    void generate_initial(const Hypergraph& h, const StatTable& stats);
    /// Removes and returns the highest-priority legal operation.
    std::optional<AtomicOperation> pop();
    /// Re-evaluates every candidate whose legality or priority can have
    /// changed through `record`, including new mergers of newly adjacent pairs.
    void update_after(const Hypergraph& h, const AppliedRecord& record, const StatTable& stats);

    /// Current legal candidates, ascending by key.
    [[nodiscard]] std::vector<AtomicOperation> legal_operations() const;
    [[nodiscard]] std::size_t legal_count() const noexcept { return legal_count_; }
    [[nodiscard]] std::size_t candidate_count() const noexcept { return states_.size(); }

private:
    struct Entry {
        double priority;
        OpKey key;
        std::uint64_t version;
    };
    struct Order {
        bool operator()(const Entry& a, const Entry& b) const;  // true if a ranks below b
    };

    void refresh(const Hypergraph& h, const OpKey& key, const StatTable& stats);
    void drop(const OpKey& key);
    void refresh_element(const Hypergraph& h, ElementId x, const StatTable& stats);

    PriorityWeights weights_;
    Normalizers normalizers_;
    std::map<OpKey, AtomicOperation> states_;
    std::map<ElementId, std::vector<Index>> merger_partners_;
    std::priority_queue<Entry, std::vector<Entry>, Order> heap_;
    std::uint64_t next_version_ = 1;
    std::size_t legal_count_ = 0;
};

struct ScaleSummary {
    std::size_t index = 0;
    std::size_t vertices = 0;
    std::size_t hyperedges = 0;
};

struct SimplifyOptions {
    PriorityWeights weights;
    TerminationCriteria criteria;
    double t = 2.0;
    AdjacencyRange adjacency_range = AdjacencyRange::Joint;
    bool dual_tracking = false;

    bool operator==(const SimplifyOptions&) const = default;
};

struct SimplifyResult {
    Hypergraph coarsest;
    std::optional<Hypergraph> coarsest_dual;
    std::vector<AppliedRecord> stack;  // in application order; invert from the back
    std::vector<ScaleSummary> scales;  // 0..n
    StopReason status = StopReason::Exhausted;
    StatTable stats;                   // as of H0
    Normalizers normalizers;
};

/// Drives the prioritized simplification one operation at a time.
class Simplifier {
public:
    Simplifier(Hypergraph h0, SimplifyOptions options);

    /// Pops, applies and records the best legal operation. Returns nothing
    /// when the queue is empty.
    std::optional<AppliedRecord> step();
    /// Steps until a criterion holds or the queue is exhausted.
    SimplifyResult run();

    [[nodiscard]] const Hypergraph& current() const noexcept { return h_; }
    [[nodiscard]] const std::optional<Hypergraph>& tracked_dual() const noexcept { return dual_; }
    [[nodiscard]] const OperationQueue& queue() const noexcept { return queue_; }
    [[nodiscard]] const StatTable& stats() const noexcept { return stats_; }
    [[nodiscard]] const Normalizers& normalizers() const noexcept { return normalizers_; }
    [[nodiscard]] const std::vector<AppliedRecord>& stack() const noexcept { return stack_; }
    [[nodiscard]] const SimplifyOptions& options() const noexcept { return options_; }

private:
    SimplifyOptions options_;
    Hypergraph h_;
    std::optional<Hypergraph> dual_;
    StatTable stats_;
    StatTable initial_stats_;
    Normalizers normalizers_;
    OperationQueue queue_;
    std::vector<AppliedRecord> stack_;
    std::vector<ScaleSummary> scales_;
};

[[nodiscard]] SimplifyResult simplify(const Hypergraph& h0, const SimplifyOptions& options);

/// Elements whose incidence changed through `record` (live ones only).
[[nodiscard]] Footprint changed_elements(const Hypergraph& h, const AppliedRecord& record);

}  // namespace polyhg
