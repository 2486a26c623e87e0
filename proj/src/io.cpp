#include "polyhg/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace polyhg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string id_text(const Json& id) {
    return id.is_string() ? id.get<std::string>() : id.dump();
}

bool integer_id(const Json& id) { return id.is_number_unsigned() || (id.is_number_integer() && id.get<std::int64_t>() >= 0); }

void check_connected(const Hypergraph& h, const ParseOptions& opt) {
    if (h.num_vertices() == 0) throw IoError("hypergraph has no vertices");
    if (h.num_hyperedges() == 0) throw IoError("hypergraph has no hyperedges");
    if (!opt.require_connected) return;
    if (!is_connected(h)) throw IoError("hypergraph is disconnected");
    for (Index v : h.vertices()) {
        if (h.deg(v) == 0) throw IoError("vertex " + to_string(ElementId::vertex(v)) + " is isolated");
    }
}

const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw IoError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
    if (!j.is_object()) throw IoError(where + ": expected an object");
    for (const auto& [k, v] : j.items()) {
        if (std::find_if(keys.begin(), keys.end(), [&](const char* s) { return k == s; }) == keys.end()) {
            throw IoError(where + ": unknown key \"" + k + "\"");
        }
    }
}

template <typename T>
void read(const Json& j, const char* key, T& out, const std::string& where) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw IoError(where + ": bad value for \"" + key + "\"");
    }
}

Json ids(std::span<const Index> xs) {
    Json a = Json::array();
    for (Index x : xs) a.push_back(x);
    return a;
}

Json point_list(const std::vector<Vec2>& pts) {
    Json a = Json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!pts[i].finite()) continue;
        a.push_back({{"id", i}, {"x", pts[i].x}, {"y", pts[i].y}});
    }
    return a;
}

std::vector<Vec2> points_from(const Json& a, const std::string& where) {
    if (!a.is_array()) throw IoError(where + ": expected an array");
    std::vector<Vec2> out;
    for (const Json& p : a) {
        const Json& id = require(p, "id", where);
        if (!integer_id(id)) throw IoError(where + ": bad id " + id.dump());
        const auto i = id.get<std::size_t>();
        if (i >= out.size()) out.resize(i + 1, Vec2{kNaN, kNaN});
        double x = 0, y = 0;
        try {
            x = require(p, "x", where).get<double>();
            y = require(p, "y", where).get<double>();
        } catch (const nlohmann::json::exception&) {
            throw IoError(where + ": bad coordinates for id " + std::to_string(i));
        }
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw IoError(where + ": non-finite coordinates for id " + std::to_string(i));
        }
        out[i] = {x, y};
    }
    return out;
}

ElementId element_from(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'v' && s[0] != 'e')) throw IoError("bad element id \"" + s + "\"");
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s.substr(1), &pos);
    } catch (const std::exception&) {
        throw IoError("bad element id \"" + s + "\"");
    }
    if (pos != s.size() - 1) throw IoError("bad element id \"" + s + "\"");
    return s[0] == 'v' ? ElementId::vertex(static_cast<Index>(v))
                       : ElementId::hyperedge(static_cast<Index>(v));
}

}  // namespace

InputFormat input_format_from_string(const std::string& s) {
    if (s == "json") return InputFormat::Json;
    if (s == "hmetis") return InputFormat::Hmetis;
    throw IoError("unknown input format \"" + s + "\"");
}

InputFormat input_format_for_path(const std::string& path) {
    const auto dot = path.rfind('.');
    return dot != std::string::npos && path.substr(dot) == ".json" ? InputFormat::Json
                                                                    : InputFormat::Hmetis;
}

Hypergraph hypergraph_from_json(const Json& j, const ParseOptions& opt) {
    reject_unknown(j, {"vertices", "hyperedges"}, "hypergraph");
    const Json& vs = require(j, "vertices", "hypergraph");
    const Json& es = require(j, "hyperedges", "hypergraph");
    if (!vs.is_array() || !es.is_array()) throw IoError("hypergraph: vertices and hyperedges must be arrays");

    // Resolve ids to slots.
    auto slots = [](const Json& list, const char* what) {
        bool numeric = true;
        for (const Json& x : list) {
            const std::string where = std::string(what) + " entry";
            if (!x.is_object() || !x.contains("id")) throw IoError(where + ": missing \"id\"");
            const Json& id = x.at("id");
            if (!id.is_string() && !id.is_number_integer()) throw IoError(where + ": bad id " + id.dump());
            if (!integer_id(id)) numeric = false;
        }
        std::map<std::string, Index> slot;
        std::vector<Index> order;
        Index next = 0;
        for (const Json& x : list) {
            const std::string key = id_text(x.at("id"));
            if (slot.count(key)) throw IoError(std::string(what) + " " + key + ": duplicate id");
            const Index s = numeric ? x.at("id").get<Index>() : next++;
            slot[key] = s;
            order.push_back(s);
        }
        return std::make_tuple(numeric, slot, order);
    };
    const auto [vnum, vslot, vorder] = slots(vs, "vertex");
    const auto [enum_, eslot, eorder] = slots(es, "hyperedge");
    (void)enum_;

    const Index vbound = vorder.empty() ? 0 : *std::max_element(vorder.begin(), vorder.end()) + 1;
    const Index ebound = eorder.empty() ? 0 : *std::max_element(eorder.begin(), eorder.end()) + 1;
    std::vector<std::string> vlabel(vbound);
    std::vector<char> vlive(vbound, 0);
    for (std::size_t k = 0; k < vs.size(); ++k) {
        const Json& x = vs[k];
        const std::string where = "vertex " + id_text(x.at("id"));
        reject_unknown(x, {"id", "label"}, where);
        std::string label = vnum ? std::string{} : x.at("id").get<std::string>();
        read(x, "label", label, where);
        vlabel[vorder[k]] = label;
        vlive[vorder[k]] = 1;
    }

    Hypergraph h;
    for (Index v = 0; v < vbound; ++v) h.add_vertex(vlabel[v]);
    std::vector<std::vector<Index>> members(ebound);
    std::vector<std::string> elabel(ebound);
    std::vector<char> elive(ebound, 0);
    for (std::size_t k = 0; k < es.size(); ++k) {
        const Json& x = es[k];
        const std::string key = id_text(x.at("id"));
        const std::string where = "hyperedge " + key;
        reject_unknown(x, {"id", "label", "members"}, where);
        const Json& m = require(x, "members", where);
        if (!m.is_array()) throw IoError(where + ": members must be an array");
        if (m.empty()) throw IoError(where + ": empty hyperedge");
        std::string label = x.at("id").is_string() ? key : std::string{};
        read(x, "label", label, where);
        const Index s = eorder[k];
        for (const Json& id : m) {
            if (!id.is_string() && !id.is_number_integer()) throw IoError(where + ": bad member " + id.dump());
            const auto it = vslot.find(id_text(id));
            if (it == vslot.end()) throw IoError(where + ": unknown vertex " + id_text(id));
            members[s].push_back(it->second);
        }
        elabel[s] = label;
        elive[s] = 1;
    }
    // Gap slots are created with a placeholder member and erased afterwards.
    const Index any_vertex = vorder.empty() ? 0 : vorder.front();
    for (Index e = 0; e < ebound; ++e) {
        if (elive[e]) {
            h.add_hyperedge(elabel[e], members[e]);
        } else {
            h.add_hyperedge({}, {any_vertex});
        }
    }
    for (Index e = 0; e < ebound; ++e) {
        if (!elive[e]) h.erase(ElementId::hyperedge(e));
    }
    for (Index v = 0; v < vbound; ++v) {
        if (!vlive[v]) h.erase(ElementId::vertex(v));
    }
    check_connected(h, opt);
    return h;
}

Hypergraph parse_json(const std::string& text, const ParseOptions& opt) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(std::string("JSON syntax error: ") + e.what());
    }
    return hypergraph_from_json(j, opt);
}

Hypergraph parse_hmetis(const std::string& text, const ParseOptions& opt) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    std::size_t m = 0, n = 0;
    std::vector<std::vector<Index>> edges;
    auto numbers = [&](const std::string& s) {
        std::istringstream ls(s);
        std::vector<long long> out;
        std::string tok;
        while (ls >> tok) {
            std::size_t pos = 0;
            long long x = 0;
            try {
                x = std::stoll(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size()) {
                throw IoError("line " + std::to_string(lineno) + ": not an integer: \"" + tok + "\"");
            }
            out.push_back(x);
        }
        return out;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (header && edges.size() < m) {
                throw IoError("line " + std::to_string(lineno) + ": empty hyperedge " +
                              std::to_string(edges.size() + 1));
            }
            continue;
        }
        if (line[first] == '%') continue;
        const auto xs = numbers(line);
        if (!header) {
            if (xs.size() < 2 || xs.size() > 3) {
                throw IoError("line " + std::to_string(lineno) + ": header must be \"m n\"");
            }
            if (xs.size() == 3 && xs[2] != 0) {
                throw IoError("line " + std::to_string(lineno) + ": weighted formats are not supported");
            }
            if (xs[0] <= 0 || xs[1] <= 0) {
                throw IoError("line " + std::to_string(lineno) + ": counts must be positive");
            }
            m = static_cast<std::size_t>(xs[0]);
            n = static_cast<std::size_t>(xs[1]);
            header = true;
            continue;
        }
        if (edges.size() == m) throw IoError("line " + std::to_string(lineno) + ": more than " + std::to_string(m) + " hyperedges");
        std::vector<Index> e;
        for (long long x : xs) {
            if (x < 1 || static_cast<std::size_t>(x) > n) {
                throw IoError("line " + std::to_string(lineno) + ": vertex " + std::to_string(x) +
                              " out of range 1.." + std::to_string(n));
            }
            e.push_back(static_cast<Index>(x - 1));
        }
        edges.push_back(std::move(e));
    }
    if (!header) throw IoError("empty input");
    if (edges.size() < m) {
        throw IoError("expected " + std::to_string(m) + " hyperedges, found " + std::to_string(edges.size()));
    }
    Hypergraph h;
    for (std::size_t v = 0; v < n; ++v) h.add_vertex();
    for (const auto& e : edges) h.add_hyperedge({}, e);
    check_connected(h, opt);
    return h;
}

Hypergraph read_hypergraph(const std::string& path, std::optional<InputFormat> format,
                           const ParseOptions& opt) {
    const std::string text = read_file(path);
    const InputFormat f = format.value_or(input_format_for_path(path));
    try {
        return f == InputFormat::Json ? parse_json(text, opt) : parse_hmetis(text, opt);
    } catch (const IoError& e) {
        throw IoError(path + ": " + e.what());
    } catch (const HypergraphError& e) {
        throw IoError(path + ": " + e.what());
    }
}

Json to_json(const Hypergraph& h) {
    Json vs = Json::array();
    for (Index v : h.vertices()) {
        Json x = {{"id", v}};
        if (!h.label(ElementId::vertex(v)).empty()) x["label"] = h.label(ElementId::vertex(v));
        vs.push_back(std::move(x));
    }
    Json es = Json::array();
    for (Index e : h.hyperedges()) {
        Json x = {{"id", e}};
        if (!h.label(ElementId::hyperedge(e)).empty()) x["label"] = h.label(ElementId::hyperedge(e));
        x["members"] = ids(h.hyperedge_vertices(e));
        es.push_back(std::move(x));
    }
    return {{"vertices", vs}, {"hyperedges", es}};
}

std::string serialize(const Hypergraph& h) { return to_json(h).dump(2) + "\n"; }

std::string to_hmetis(const Hypergraph& h) {
    if (h.num_vertices() != h.id_bound(ElementKind::Vertex) ||
        h.num_hyperedges() != h.id_bound(ElementKind::Hyperedge)) {
        throw IoError("hmetis output needs contiguous ids");
    }
    std::string out = std::to_string(h.num_hyperedges()) + " " + std::to_string(h.num_vertices()) + "\n";
    for (Index e : h.hyperedges()) {
        bool first = true;
        for (Index v : h.hyperedge_vertices(e)) {
            if (!first) out += ' ';
            out += std::to_string(v + 1);
            first = false;
        }
        out += '\n';
    }
    return out;
}

Json to_json(const Layout& layout) {
    Json j = {{"scale_index", layout.scale_index}, {"positions", point_list(layout.positions)}};
    if (layout.dual_positions) j["dual_positions"] = point_list(*layout.dual_positions);
    return j;
}

Layout layout_from_json(const Json& j) {
    reject_unknown(j, {"scale_index", "positions", "dual_positions"}, "layout");
    Layout l;
    read(j, "scale_index", l.scale_index, "layout");
    l.positions = points_from(require(j, "positions", "layout"), "layout positions");
    if (j.contains("dual_positions")) {
        l.dual_positions = points_from(j.at("dual_positions"), "layout dual_positions");
    }
    return l;
}

Json to_json(const EnergyConfig& c) {
    return {{"side_length", c.side_length},
            {"buffer", c.buffer},
            {"weights",
             {{"separation", c.weights.separation},
              {"regularity", c.weights.regularity},
              {"area", c.weights.area},
              {"intersection", c.weights.intersection},
              {"primal_dual", c.weights.primal_dual}}},
            {"separation_iterations", c.separation_iterations},
            {"regularity_iterations", c.regularity_iterations},
            {"local_iterations", c.local_iterations},
            {"gradient_tolerance", c.gradient_tolerance},
            {"memory", c.memory},
            {"softplus_sharpness", c.softplus_sharpness},
            {"separate_shared", c.separate_shared},
            {"shared_buffer", c.shared_buffer},
            {"restarts", c.restarts},
            {"local_separation", c.local_separation},
            {"seed", c.seed}};
}

EnergyConfig energy_config_from_json(const Json& j, EnergyConfig c) {
    const std::string where = "energy";
    reject_unknown(j, {"side_length", "buffer", "weights", "separation_iterations",
                       "regularity_iterations", "local_iterations", "gradient_tolerance", "memory",
                       "softplus_sharpness", "separate_shared", "shared_buffer", "restarts",
                       "local_separation", "seed"},
                   where);
    read(j, "side_length", c.side_length, where);
    read(j, "buffer", c.buffer, where);
    if (j.contains("weights")) {
        const Json& w = j.at("weights");
        const std::string ww = "energy.weights";
        reject_unknown(w, {"separation", "regularity", "area", "intersection", "primal_dual"}, ww);
        read(w, "separation", c.weights.separation, ww);
        read(w, "regularity", c.weights.regularity, ww);
        read(w, "area", c.weights.area, ww);
        read(w, "intersection", c.weights.intersection, ww);
        read(w, "primal_dual", c.weights.primal_dual, ww);
    }
    read(j, "separation_iterations", c.separation_iterations, where);
    read(j, "regularity_iterations", c.regularity_iterations, where);
    read(j, "local_iterations", c.local_iterations, where);
    read(j, "gradient_tolerance", c.gradient_tolerance, where);
    read(j, "memory", c.memory, where);
    read(j, "softplus_sharpness", c.softplus_sharpness, where);
    read(j, "separate_shared", c.separate_shared, where);
    read(j, "shared_buffer", c.shared_buffer, where);
    read(j, "restarts", c.restarts, where);
    read(j, "local_separation", c.local_separation, where);
    read(j, "seed", c.seed, where);
    return c;
}

Json to_json(const SimplifyOptions& o) {
    Json criteria = Json::object();
    criteria["target_vertices"] = o.criteria.target_vertices ? Json(*o.criteria.target_vertices) : Json(nullptr);
    criteria["target_hyperedges"] = o.criteria.target_hyperedges ? Json(*o.criteria.target_hyperedges) : Json(nullptr);
    criteria["until_linear"] = o.criteria.until_linear;
    criteria["until_forbidden_free"] = o.criteria.until_forbidden_free;
    return {{"weights", {{"alpha", o.weights.alpha}, {"beta", o.weights.beta}, {"gamma", o.weights.gamma}}},
            {"criteria", criteria},
            {"t", o.t},
            {"adjacency_range", o.adjacency_range == AdjacencyRange::Joint ? "joint" : "per_kind"},
            {"dual_tracking", o.dual_tracking}};
}

SimplifyOptions simplify_options_from_json(const Json& j, SimplifyOptions o) {
    const std::string where = "simplify";
    reject_unknown(j, {"weights", "criteria", "t", "adjacency_range", "dual_tracking"}, where);
    if (j.contains("weights")) {
        const Json& w = j.at("weights");
        reject_unknown(w, {"alpha", "beta", "gamma"}, "simplify.weights");
        read(w, "alpha", o.weights.alpha, "simplify.weights");
        read(w, "beta", o.weights.beta, "simplify.weights");
        read(w, "gamma", o.weights.gamma, "simplify.weights");
    }
    if (j.contains("criteria")) {
        const Json& c = j.at("criteria");
        const std::string cw = "simplify.criteria";
        reject_unknown(c, {"target_vertices", "target_hyperedges", "until_linear", "until_forbidden_free"}, cw);
        auto opt_size = [&](const char* key, std::optional<std::size_t>& out) {
            if (!c.contains(key)) return;
            if (c.at(key).is_null()) {
                out.reset();
                return;
            }
            std::size_t v = 0;
            read(c, key, v, cw);
            out = v;
        };
        opt_size("target_vertices", o.criteria.target_vertices);
        opt_size("target_hyperedges", o.criteria.target_hyperedges);
        read(c, "until_linear", o.criteria.until_linear, cw);
        read(c, "until_forbidden_free", o.criteria.until_forbidden_free, cw);
    }
    read(j, "t", o.t, where);
    if (j.contains("adjacency_range")) {
        std::string r;
        read(j, "adjacency_range", r, where);
        if (r == "joint") o.adjacency_range = AdjacencyRange::Joint;
        else if (r == "per_kind") o.adjacency_range = AdjacencyRange::PerKind;
        else throw IoError(where + ": unknown adjacency_range \"" + r + "\"");
    }
    read(j, "dual_tracking", o.dual_tracking, where);
    return o;
}

Json to_json(const AppliedRecord& r) {
    Json j = {{"kind", to_string(r.kind)}, {"removed", to_string(r.removed)}};
    j["retained"] = r.retained ? Json(to_string(*r.retained)) : Json(nullptr);
    j["removed_incidence"] = ids(r.removed_incidence);
    j["shared"] = ids(r.shared);
    j["priority"] = r.priority;
    j["scale_index"] = r.scale_index;
    return j;
}

AppliedRecord applied_record_from_json(const Json& j) {
    const std::string where = "operation";
    reject_unknown(j, {"kind", "removed", "retained", "removed_incidence", "shared", "priority", "scale_index"}, where);
    AppliedRecord r;
    try {
        r.kind = op_kind_from_string(require(j, "kind", where).get<std::string>());
        r.removed = element_from(require(j, "removed", where).get<std::string>());
        if (j.contains("retained") && !j.at("retained").is_null()) {
            r.retained = element_from(j.at("retained").get<std::string>());
        }
        r.removed_incidence = require(j, "removed_incidence", where).get<std::vector<Index>>();
        r.shared = require(j, "shared", where).get<std::vector<Index>>();
        r.priority = require(j, "priority", where).get<double>();
        r.scale_index = require(j, "scale_index", where).get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError(where + ": " + e.what());
    } catch (const SimplifyError& e) {
        throw IoError(where + ": " + e.what());
    }
    if (r.removed.kind != operand_kind(r.kind) || (r.retained.has_value() != is_merger(r.kind))) {
        throw IoError(where + ": operands do not match kind " + to_string(r.kind));
    }
    return r;
}

Json to_json(const OverlapReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        pairs.push_back({{"e", p.e}, {"f", p.f}, {"area", p.area}, {"shared", p.shared}, {"unavoidable", p.unavoidable}});
    }
    return {{"pair_count", r.pair_count},
            {"total_area", r.total_area},
            {"unavoidable_count", r.unavoidable_count},
            {"avoidable_count", r.pair_count - r.unavoidable_count},
            {"forbidden_count", r.forbidden_count},
            {"epsilon", r.epsilon},
            {"shapes", to_string(r.shapes)},
            {"pairs", pairs}};
}

Json to_json(const ForbiddenInstance& f) {
    Json ops = Json::array(), wit = Json::array();
    for (ElementId x : f.operands) ops.push_back(to_string(x));
    for (ElementId x : f.witness) wit.push_back(to_string(x));
    Json j = {{"kind", to_string(f.kind)}, {"operands", ops}, {"witness", wit}};
    if (f.kind == ForbiddenKind::StrangledVertex || f.kind == ForbiddenKind::StrangledHyperedge) {
        j["strict"] = f.strict;
    }
    return j;
}

Json to_json(const PlanarityReport& r) {
    Json kinds = Json::object();
    for (ForbiddenKind k : {ForbiddenKind::ThreeAdjacentPair, ForbiddenKind::TwoAdjacentTriple,
                            ForbiddenKind::StrangledVertex, ForbiddenKind::StrangledHyperedge}) {
        Json list = Json::array();
        for (const auto& f : r.instances) {
            if (f.kind == k) list.push_back(to_json(f));
        }
        kinds[to_string(k)] = list;
    }
    return {{"zykov_planar", r.zykov_planar},
            {"convex_polygon_planar", r.convex_polygon_planar},
            {"forbidden_count", r.forbidden_count},
            {"instances", kinds}};
}

Json stats_table(const Hypergraph& h, double t) {
    const StatTable s = StatTable::compute(h, t);
    Json rows = Json::array();
    for (ElementId x : h.elements()) {
        Json row = {{"id", to_string(x)},
                    {"label", h.label(x)},
                    {"kind", x.is_vertex() ? "vertex" : "hyperedge"},
                    {"size", h.degree(x)},
                    {"betweenness", s.betweenness[x]},
                    {"adjacency_factor", s.adjacency_factor[x]}};
        rows.push_back(std::move(row));
    }
    return {{"t", t}, {"elements", rows}};
}

Json simplify_manifest(const Hypergraph& h0, const SimplifyOptions& opt, const SimplifyResult& r) {
    Json scales = Json::array();
    for (const auto& s : r.scales) {
        Json x = {{"index", s.index}, {"vertices", s.vertices}, {"hyperedges", s.hyperedges}};
        x["operation"] = s.index == 0 ? Json(nullptr) : to_json(r.stack.at(s.index - 1));
        scales.push_back(std::move(x));
    }
    return {{"options", to_json(opt)},
            {"status", to_string(r.status)},
            {"operation_count", r.stack.size()},
            {"scales", scales},
            {"original", to_json(h0)},
            {"coarsest", to_json(r.coarsest)}};
}

LoadedSimplification load_simplify_manifest(const Json& j) {
    const std::string where = "simplify manifest";
    LoadedSimplification out;
    out.options = simplify_options_from_json(require(j, "options", where));
    out.original = hypergraph_from_json(require(j, "original", where));
    const Json& scales = require(j, "scales", where);
    if (!scales.is_array() || scales.empty()) throw IoError(where + ": no scales");
    Hypergraph h = out.original;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        const Json& s = scales[i];
        if (require(s, "index", where).get<std::size_t>() != i) {
            throw IoError(where + ": scale indices must be contiguous from 0");
        }
        if (i == 0) continue;
        const AppliedRecord logged = applied_record_from_json(require(s, "operation", where));
        AtomicOperation op;
        op.kind = logged.kind;
        op.removed = logged.removed;
        op.retained = logged.retained;
        op.priority = logged.priority;
        op.legal = true;
        AppliedRecord rec;
        try {
            rec = apply(h, op);
        } catch (const SimplifyError& e) {
            throw IoError(where + ": scale " + std::to_string(i) + ": " + e.what());
        }
        rec.scale_index = logged.scale_index;
        if (rec != logged) {
            throw IoError(where + ": scale " + std::to_string(i) + ": record does not match its replay");
        }
        if (h.num_vertices() != require(s, "vertices", where).get<std::size_t>() ||
            h.num_hyperedges() != require(s, "hyperedges", where).get<std::size_t>()) {
            throw IoError(where + ": scale " + std::to_string(i) + ": counts do not match");
        }
        out.stack.push_back(rec);
    }
    if (j.contains("coarsest") && j.at("coarsest") != to_json(h)) {
        throw IoError(where + ": coarsest hypergraph does not match the replay");
    }
    out.coarsest = std::move(h);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace polyhg
