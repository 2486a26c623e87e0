#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "polyhg/energy.hpp"
#include "polyhg/hypergraph.hpp"
#include "polyhg/layout.hpp"
#include "polyhg/metrics.hpp"
#include "polyhg/planarity.hpp"
#include "polyhg/simplify.hpp"
#include "polyhg/stats.hpp"

namespace polyhg {

using Json = nlohmann::ordered_json;

/// Malformed or invalid input. The message names the line or element.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class InputFormat { Json, Hmetis };

/// "json" or "hmetis".
[[nodiscard]] InputFormat input_format_from_string(const std::string& s);
/// Json for a ".json" extension, Hmetis otherwise.
[[nodiscard]] InputFormat input_format_for_path(const std::string& path);

struct ParseOptions {
    bool require_connected = true;
};

/// {"vertices":[{"id","label"?}], "hyperedges":[{"id","label"?,"members":[...]}]}
///
/// Non-negative integer ids are kept as element ids; gaps become erased
/// slots. String ids are numbered in order of appearance and, without an
/// explicit label, become the label.
[[nodiscard]] Hypergraph parse_json(const std::string& text, const ParseOptions& opt = {});
[[nodiscard]] Hypergraph hypergraph_from_json(const Json& j, const ParseOptions& opt = {});

/// First line "m n" (hyperedges, vertices), then one line of 1-based vertex
/// indices per hyperedge. Lines starting with '%' are comments.
[[nodiscard]] Hypergraph parse_hmetis(const std::string& text, const ParseOptions& opt = {});

[[nodiscard]] Hypergraph read_hypergraph(const std::string& path,
                                         std::optional<InputFormat> format = std::nullopt,
                                         const ParseOptions& opt = {});

/// Live elements only, ascending ids; empty labels omitted.
[[nodiscard]] Json to_json(const Hypergraph& h);
/// Canonical text form: `to_json(h)` with two-space indent.
[[nodiscard]] std::string serialize(const Hypergraph& h);
/// Requires contiguous ids (no erased slots).
[[nodiscard]] std::string to_hmetis(const Hypergraph& h);

/// {scale_index, positions:[{id,x,y}], dual_positions?}; absent slots omitted.
[[nodiscard]] Json to_json(const Layout& layout);
[[nodiscard]] Layout layout_from_json(const Json& j);

[[nodiscard]] Json to_json(const EnergyConfig& c);
/// Missing keys keep their defaults; unknown keys are rejected.
[[nodiscard]] EnergyConfig energy_config_from_json(const Json& j, EnergyConfig base = {});

[[nodiscard]] Json to_json(const SimplifyOptions& o);
[[nodiscard]] SimplifyOptions simplify_options_from_json(const Json& j, SimplifyOptions base = {});

[[nodiscard]] Json to_json(const AppliedRecord& r);
[[nodiscard]] AppliedRecord applied_record_from_json(const Json& j);

/// Runtime is left out so reports of identical layouts compare equal.
[[nodiscard]] Json to_json(const OverlapReport& r);
[[nodiscard]] Json to_json(const ForbiddenInstance& f);
[[nodiscard]] Json to_json(const PlanarityReport& r);
/// One row per live element: id, label, kind, size, betweenness, adjacency factor.
[[nodiscard]] Json stats_table(const Hypergraph& h, double t);

/// Simplification output: options echo, per-scale counts, applied-operation
/// log with full records, H0 and Hn.
[[nodiscard]] Json simplify_manifest(const Hypergraph& h0, const SimplifyOptions& opt,
                                     const SimplifyResult& r);

struct LoadedSimplification {
    SimplifyOptions options;
    Hypergraph original;
    Hypergraph coarsest;
    std::vector<AppliedRecord> stack;
};

/// Rebuilds a simplification from its manifest by replaying the logged
/// operations on H0. Throws IoError if a record or Hn disagrees with the replay.
[[nodiscard]] LoadedSimplification load_simplify_manifest(const Json& j);

[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace polyhg
