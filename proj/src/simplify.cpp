#include "polyhg/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace polyhg {

const char* to_string(OpKind k) {
    switch (k) {
        case OpKind::VertexRemoval: return "vertex_removal";
        case OpKind::HyperedgeRemoval: return "hyperedge_removal";
        case OpKind::VertexMerger: return "vertex_merger";
        case OpKind::HyperedgeMerger: return "hyperedge_merger";
    }
    return "unknown";
}

OpKind op_kind_from_string(const std::string& s) {
    for (OpKind k : {OpKind::VertexRemoval, OpKind::HyperedgeRemoval, OpKind::VertexMerger,
                     OpKind::HyperedgeMerger}) {
        if (s == to_string(k)) return k;
    }
    throw SimplifyError("unknown operation kind '" + s + "'");
}

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::TargetVertices: return "target_vertices";
        case StopReason::TargetHyperedges: return "target_hyperedges";
        case StopReason::Linear: return "linear";
        case StopReason::ForbiddenFree: return "forbidden_free";
        case StopReason::Exhausted: return "exhausted";
    }
    return "unknown";
}

OpKey OpKey::merger(ElementId x, ElementId y) {
    if (x.kind != y.kind || x == y) throw SimplifyError("merger operands must be distinct and of one kind");
    return {merger_of(x.kind), std::min(x.index, y.index), std::max(x.index, y.index)};
}

OpKey AtomicOperation::key() const {
    return retained ? OpKey::merger(removed, *retained) : OpKey::removal(removed);
}

AppliedRecord mirrored(const AppliedRecord& r) {
    AppliedRecord m = r;
    m.kind = mirror(r.kind);
    m.removed = r.removed.dual();
    if (r.retained) m.retained = r.retained->dual();
    return m;
}

void PriorityWeights::validate() const {
    if (!(alpha >= 0 && beta >= 0 && gamma >= 0)) {
        throw SimplifyError("priority weights must be non-negative");
    }
    if (alpha == 0 && beta == 0 && gamma == 0) {
        throw SimplifyError("priority weights must not all be zero");
    }
}

void TerminationCriteria::validate() const {
    if (!target_vertices && !target_hyperedges && !until_linear && !until_forbidden_free) {
        throw SimplifyError("at least one termination criterion is required");
    }
}

std::optional<StopReason> satisfied_criterion(const Hypergraph& h, const TerminationCriteria& c) {
    if (c.target_vertices && h.num_vertices() <= *c.target_vertices) {
        return StopReason::TargetVertices;
    }
    if (c.target_hyperedges && h.num_hyperedges() <= *c.target_hyperedges) {
        return StopReason::TargetHyperedges;
    }
    if (c.until_linear && is_linear(h)) return StopReason::Linear;
    if (c.until_forbidden_free && forbidden_count(h) == 0) return StopReason::ForbiddenFree;
    return std::nullopt;
}

bool removal_legal(const Hypergraph& h, ElementId x) {
    auto inc = h.incident(x);
    const ElementKind other = opposite(x.kind);
    for (Index o : inc) {
        if (h.degree({other, o}) <= 1) return false;
    }
    for (std::size_t i = 0; i < inc.size(); ++i) {
        // a(o_i, o_j) >= 2 for every later o_j
        std::vector<std::size_t> shared(inc.size(), 0);
        for (Index s : h.incident({other, inc[i]})) {
            for (Index o : h.incident({x.kind, s})) {
                auto it = std::lower_bound(inc.begin(), inc.end(), o);
                if (it != inc.end() && *it == o) ++shared[static_cast<std::size_t>(it - inc.begin())];
            }
        }
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
            if (shared[j] < 2) return false;
        }
    }
    return true;
}

bool merger_legal(const Hypergraph& h, ElementId x, ElementId y) {
    const std::size_t a = adjacency(h, x, y);
    if (a == 0) throw SimplifyError("merger operands " + to_string(x) + ", " + to_string(y) +
                                    " are not adjacent");
    return a >= 2;
}

std::pair<ElementId, ElementId> merger_roles(const Hypergraph& h, ElementId x, ElementId y) {
    const auto dx = h.degree(x);
    const auto dy = h.degree(y);
    if (dx > dy || (dx == dy && x < y)) return {y, x};
    return {x, y};
}

Footprint footprint(const Hypergraph& h, const OpKey& key) {
    Footprint f = neighborhood(h, key.first_id());
    if (is_merger(key.kind)) f.merge(neighborhood(h, key.second_id()));
    return f;
}

bool legal(const Hypergraph& h, const OpKey& key) {
    if (is_merger(key.kind)) return merger_legal(h, key.first_id(), key.second_id());
    return removal_legal(h, key.first_id());
}

namespace {

double normalized(double value, double lo, double hi) {
    return hi > lo ? (value - lo) / (hi - lo) : 0.0;
}

double unchecked_priority(const Hypergraph& h, const OpKey& key, const PriorityWeights& w,
                          const Normalizers& n, const StatTable& stats) {
    const Footprint f = footprint(h, key);
    double d_hat = 0;
    for (ElementKind k : {ElementKind::Vertex, ElementKind::Hyperedge}) {
        for (Index i : f.of(k)) d_hat = std::max(d_hat, static_cast<double>(h.degree({k, i})));
    }
    const ElementId x = key.first_id();
    double a_bar = stats.adjacency_factor[x];
    double b_bar = stats.betweenness[x];
    if (is_merger(key.kind)) {
        const ElementId y = key.second_id();
        a_bar = 0.5 * (a_bar + stats.adjacency_factor[y]);
        b_bar = 0.5 * (b_bar + stats.betweenness[y]);
    }
    const std::size_t k = slot(x.kind);
    return w.alpha * normalized(d_hat, n.d_min, n.d_max) +
           w.beta * normalized(a_bar, n.a_min[k], n.a_max[k]) +
           w.gamma * (n.b_max > n.b_min ? (n.b_max - b_bar) / (n.b_max - n.b_min) : 0.0);
}

}  // namespace

double priority(const Hypergraph& h, const OpKey& key, const PriorityWeights& w,
                const Normalizers& n, const StatTable& stats) {
    if (!legal(h, key)) throw SimplifyError("priority of an illegal operation");
    return unchecked_priority(h, key, w, n, stats);
}

AtomicOperation evaluate(const Hypergraph& h, const OpKey& key, const PriorityWeights& w,
                         const Normalizers& n, const StatTable& stats) {
    AtomicOperation op;
    op.kind = key.kind;
    if (is_merger(key.kind)) {
        auto [removed, retained] = merger_roles(h, key.first_id(), key.second_id());
        op.removed = removed;
        op.retained = retained;
    } else {
        op.removed = key.first_id();
    }
    op.legal = legal(h, key);
    op.priority = op.legal ? unchecked_priority(h, key, w, n, stats) : 0.0;
    return op;
}

AppliedRecord apply(Hypergraph& h, const AtomicOperation& op) {
    if (!h.contains(op.removed)) {
        throw SimplifyError("stale operation: " + to_string(op.removed) + " no longer exists");
    }
    if (operand_kind(op.kind) != op.removed.kind || is_merger(op.kind) != op.retained.has_value()) {
        throw SimplifyError("malformed operation");
    }
    AppliedRecord rec;
    rec.kind = op.kind;
    rec.removed = op.removed;
    rec.retained = op.retained;
    rec.priority = op.priority;
    auto inc = h.incident(op.removed);
    rec.removed_incidence.assign(inc.begin(), inc.end());

    if (!is_merger(op.kind)) {
        if (!removal_legal(h, op.removed)) {
            throw SimplifyError("illegal removal of " + to_string(op.removed));
        }
        h.erase(op.removed);
        return rec;
    }

    const ElementId keep = *op.retained;
    if (!h.contains(keep) || keep == op.removed) {
        throw SimplifyError("stale merger: retained operand " + to_string(keep) + " is invalid");
    }
    if (!merger_legal(h, op.removed, keep)) {
        throw SimplifyError("illegal merger of " + to_string(op.removed) + " into " +
                            to_string(keep));
    }
    auto kept = h.incident(keep);
    std::set_intersection(rec.removed_incidence.begin(), rec.removed_incidence.end(), kept.begin(),
                          kept.end(), std::back_inserter(rec.shared));
    h.erase(op.removed);
    for (Index o : rec.removed_incidence) h.link(keep, o);
    return rec;
}

void invert(Hypergraph& h, const AppliedRecord& record) {
    const ElementId r = record.removed;
    if (h.contains(r) || r.index >= h.id_bound(r.kind)) {
        throw SimplifyError("out-of-order inversion: " + to_string(r) + " is not removed");
    }
    const ElementKind other = opposite(r.kind);
    for (Index o : record.removed_incidence) {
        if (!h.contains({other, o})) {
            throw SimplifyError("out-of-order inversion: " + to_string({other, o}) + " is missing");
        }
    }
    if (record.retained) {
        const ElementId keep = *record.retained;
        if (!h.contains(keep)) {
            throw SimplifyError("out-of-order inversion: " + to_string(keep) + " is missing");
        }
        for (Index o : record.removed_incidence) {
            if (!h.incident_to(keep, o)) {
                throw SimplifyError("out-of-order inversion: " + to_string(keep) +
                                    " lost merged incidence");
            }
        }
        for (Index o : record.removed_incidence) {
            if (!std::binary_search(record.shared.begin(), record.shared.end(), o)) {
                h.unlink(keep, o);
            }
        }
    }
    h.revive(r, record.removed_incidence);
}

Footprint changed_elements(const Hypergraph& h, const AppliedRecord& record) {
    Footprint c;
    if (record.retained && h.contains(*record.retained)) {
        c.of(record.retained->kind).push_back(record.retained->index);
    }
    const ElementKind other = opposite(record.removed.kind);
    for (Index o : record.removed_incidence) {
        if (h.contains({other, o})) c.of(other).push_back(o);
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.hyperedges.begin(), c.hyperedges.end());
    return c;
}

// ── OperationQueue ──────────────────────────────────────────────────────

bool OperationQueue::Order::operator()(const Entry& a, const Entry& b) const {
    if (a.priority != b.priority) return a.priority < b.priority;
    const ElementId fa = a.key.first_id();
    const ElementId fb = b.key.first_id();
    if (fa != fb) return fa > fb;
    const bool ma = is_merger(a.key.kind);
    const bool mb = is_merger(b.key.kind);
    if (ma != mb) return ma;
    return a.key.second > b.key.second;
}

OperationQueue::OperationQueue(PriorityWeights weights, Normalizers normalizers)
    : weights_(weights), normalizers_(normalizers) {
    weights_.validate();
}

void OperationQueue::generate_initial(const Hypergraph& h, const StatTable& stats) {
    if (!is_connected(h)) throw SimplifyError("simplification requires a connected hypergraph");
    for (ElementId x : h.elements()) refresh_element(h, x, stats);
}

void OperationQueue::drop(const OpKey& key) {
    auto it = states_.find(key);
    if (it == states_.end()) return;
    if (it->second.legal) --legal_count_;
    states_.erase(it);
    if (is_merger(key.kind)) {
        for (auto [a, b] : {std::pair{key.first_id(), key.second}, std::pair{key.second_id(), key.first}}) {
            auto p = merger_partners_.find(a);
            if (p == merger_partners_.end()) continue;
            auto& v = p->second;
            v.erase(std::remove(v.begin(), v.end(), b), v.end());
            if (v.empty()) merger_partners_.erase(p);
        }
    }
}

void OperationQueue::refresh(const Hypergraph& h, const OpKey& key, const StatTable& stats) {
    AtomicOperation op = evaluate(h, key, weights_, normalizers_, stats);
    auto [it, inserted] = states_.try_emplace(key, op);
    AtomicOperation& state = it->second;
    if (inserted) {
        if (is_merger(key.kind)) {
            for (auto [a, b] : {std::pair{key.first_id(), key.second}, std::pair{key.second_id(), key.first}}) {
                auto& v = merger_partners_[a];
                v.insert(std::lower_bound(v.begin(), v.end(), b), b);
            }
        }
    } else {
        const bool changed = state.legal != op.legal || state.priority != op.priority;
        if (state.legal) --legal_count_;
        op.version = state.version;
        state = op;
        if (!changed) {
            if (state.legal) ++legal_count_;
            return;
        }
    }
    state.version = next_version_++;
    if (state.legal) {
        ++legal_count_;
        heap_.push({state.priority, key, state.version});
    }
}

void OperationQueue::refresh_element(const Hypergraph& h, ElementId x, const StatTable& stats) {
    std::vector<Index> old;
    if (auto p = merger_partners_.find(x); p != merger_partners_.end()) old = p->second;
    if (!h.contains(x)) {
        drop(OpKey::removal(x));
        for (Index y : old) drop(OpKey::merger(x, {x.kind, y}));
        return;
    }
    refresh(h, OpKey::removal(x), stats);
    const auto now = adjacent(h, x);
    for (Index y : old) {
        const bool still = std::any_of(now.begin(), now.end(),
                                       [y](const auto& p) { return p.first == y; });
        if (!still) drop(OpKey::merger(x, {x.kind, y}));
    }
    for (const auto& [y, a] : now) refresh(h, OpKey::merger(x, {x.kind, y}), stats);
}

std::optional<AtomicOperation> OperationQueue::pop() {
    while (!heap_.empty()) {
        const Entry top = heap_.top();
        heap_.pop();
        auto it = states_.find(top.key);
        if (it == states_.end() || it->second.version != top.version || !it->second.legal) continue;
        AtomicOperation op = it->second;
        drop(top.key);
        return op;
    }
    return std::nullopt;
}

void OperationQueue::update_after(const Hypergraph& h, const AppliedRecord& record,
                                  const StatTable& stats) {
    refresh_element(h, record.removed, stats);

    // Legality and priority of an operation on x read degrees and adjacencies
    // within König distance 2 of x, so everything within distance 2 of a
    // changed element is re-evaluated.
    const Footprint changed = changed_elements(h, record);
    std::set<ElementId> region;
    std::vector<ElementId> frontier;
    for (ElementKind k : {ElementKind::Vertex, ElementKind::Hyperedge}) {
        for (Index i : changed.of(k)) {
            if (region.insert({k, i}).second) frontier.push_back({k, i});
        }
    }
    for (int depth = 0; depth < 2; ++depth) {
        std::vector<ElementId> next;
        for (ElementId x : frontier) {
            for (Index o : h.incident(x)) {
                const ElementId y{opposite(x.kind), o};
                if (region.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    for (ElementId x : region) refresh_element(h, x, stats);
}

std::vector<AtomicOperation> OperationQueue::legal_operations() const {
    std::vector<AtomicOperation> out;
    for (const auto& [key, op] : states_) {
        if (op.legal) out.push_back(op);
    }
    return out;
}

// ── Simplifier ──────────────────────────────────────────────────────────

Simplifier::Simplifier(Hypergraph h0, SimplifyOptions options)
    : options_(std::move(options)),
      h_(std::move(h0)),
      queue_(options_.weights, Normalizers{}) {
    options_.weights.validate();
    options_.criteria.validate();
    if (h_.empty()) throw SimplifyError("cannot simplify an empty hypergraph");
    if (!is_connected(h_)) throw SimplifyError("simplification requires a connected hypergraph");
    if (options_.dual_tracking) dual_ = h_.dual();
    stats_ = StatTable::compute(h_, options_.t);
    initial_stats_ = stats_;
    normalizers_ = extrema(h_, stats_, options_.adjacency_range);
    queue_ = OperationQueue(options_.weights, normalizers_);
    queue_.generate_initial(h_, stats_);
    scales_.push_back({0, h_.num_vertices(), h_.num_hyperedges()});
}

std::optional<AppliedRecord> Simplifier::step() {
    auto op = queue_.pop();
    if (!op) return std::nullopt;
    AppliedRecord rec = apply(h_, *op);
    rec.scale_index = stack_.size() + 1;
    if (dual_) {
        const AppliedRecord m = mirrored(rec);
        AtomicOperation dual_op;
        dual_op.kind = m.kind;
        dual_op.removed = m.removed;
        dual_op.retained = m.retained;
        dual_op.priority = m.priority;
        apply(*dual_, dual_op);
    }

    // Adjacency factors change exactly for changed elements and their incident elements.
    Footprint adj_region = changed_elements(h_, rec);
    Footprint grown = adj_region;
    for (ElementKind k : {ElementKind::Vertex, ElementKind::Hyperedge}) {
        for (Index i : adj_region.of(k)) {
            auto inc = h_.incident({k, i});
            auto& dst = grown.of(opposite(k));
            dst.insert(dst.end(), inc.begin(), inc.end());
        }
    }
    for (ElementKind k : {ElementKind::Vertex, ElementKind::Hyperedge}) {
        auto& v = grown.of(k);
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    stats_.refresh(h_, grown);
    queue_.update_after(h_, rec, stats_);

    stack_.push_back(rec);
    scales_.push_back({rec.scale_index, h_.num_vertices(), h_.num_hyperedges()});
    return rec;
}

SimplifyResult Simplifier::run() {
    SimplifyResult out;
    for (;;) {
        if (auto reason = satisfied_criterion(h_, options_.criteria)) {
            out.status = *reason;
            break;
        }
        if (!step()) {
            out.status = StopReason::Exhausted;
            break;
        }
    }
    out.coarsest = h_;
    out.coarsest_dual = dual_;
    out.stack = stack_;
    out.scales = scales_;
    out.stats = initial_stats_;
    out.normalizers = normalizers_;
    return out;
}

SimplifyResult simplify(const Hypergraph& h0, const SimplifyOptions& options) {
    Simplifier s(h0, options);
    return s.run();
}

}  // namespace polyhg
