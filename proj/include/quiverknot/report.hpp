#pragma once

// Job execution and report formatting shared by the CLI and the Python
// bindings.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverknot/algebra.hpp"
#include "quiverknot/data.hpp"
#include "quiverknot/diagram.hpp"
#include "quiverknot/poly.hpp"
#include "quiverknot/quiver.hpp"

namespace quiverknot {

enum class Invariant { counting, two_var, edge_sum, vertex_sum, max_path };

const char* to_string(Invariant inv);
/// "count", "2var", "edge", "vertex", "mp".
Invariant parse_invariant(std::string_view text);

enum class OutputFormat { text, csv, json };

OutputFormat parse_output_format(std::string_view text);

/// The only semantics that reproduces every reference maximal path value;
/// see README.
inline constexpr TrailSemantics default_trail_semantics = TrailSemantics::insertion_maximal;

struct InvariantOptions {
  TrailSemantics semantics = default_trail_semantics;
  std::uint64_t cap = default_trail_cap;
  bool max_path = true;
  /// Also run set and endpoint semantics when the selected one is different.
  bool all_semantics = false;
  /// On CapExceeded, leave the maximal path polynomial unset and record the
  /// failure instead of throwing.
  bool partial_on_cap = false;
};

struct InvariantReport {
  std::string link;
  int arcs = 0;
  int crossings = 0;
  int components = 0;
  int quandle_order = 0;
  std::uint64_t counting = 0;
  std::size_t endomorphisms = 0;
  BiPoly two_var;
  UniPoly edge_sum{'t'};
  UniPoly vertex_sum{'t'};
  std::optional<UniPoly> max_path;
  TrailSemantics semantics = default_trail_semantics;
  /// Every semantics that was computed, including the selected one.
  std::map<TrailSemantics, UniPoly> max_path_by_semantics;
  /// Set when partial_on_cap swallowed a CapExceeded.
  std::optional<std::string> max_path_error;
};

/// Builds the quiver and every decategorification. With an empty homset the
/// polynomials are zero.
InvariantReport compute_invariants(const LinkDiagram& d, const Quandle& q, const std::vector<Endomorphism>& endos,
                                   const InvariantOptions& options = {});

/// Deterministic text report; `verbatim_s0` switches the two-variable
/// polynomial to ascending order with s^0 written out.
std::string format_report(const InvariantReport& r, OutputFormat format, bool verbatim_s0 = false);

/// One invariant's canonical string from a report. Counting renders as an
/// integer.
std::string invariant_value(const InvariantReport& r, Invariant inv, bool verbatim_s0 = false);

/// True when `expected` (printed form) denotes the same value.
bool invariant_matches(const InvariantReport& r, Invariant inv, std::string_view expected);

// ---------------------------------------------------------------------------
// Jobs

struct JobSpec {
  std::string link;  // dataset name or PD literal
  std::string quandle = "dihedral:3";
  std::string endos = "all";
  TrailSemantics semantics = default_trail_semantics;
  std::vector<int> reverse_components;  // 0-based
  std::uint64_t cap = default_trail_cap;
  bool max_path = true;
};

struct ResolvedJob {
  LinkDiagram diagram;
  Quandle quandle;
  std::vector<Endomorphism> endos;
};

ResolvedJob resolve_job(const JobSpec& spec, const LinkDataset& data);

// ---------------------------------------------------------------------------
// Tables

struct TableRequest {
  std::vector<std::string> links;
  std::string quandle;
  std::string endos = "all";
  Invariant invariant = Invariant::two_var;
  TrailSemantics semantics = default_trail_semantics;
  std::uint64_t cap = default_trail_cap;
  /// Printed values keyed by link; rows without one carry no verdict.
  std::map<std::string, std::string> expected;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct TableRow {
  std::string link;
  std::string value;
  std::optional<std::string> expected;
  std::optional<bool> matches;
  /// For a mismatch: which orientation or trail semantics variant, if any,
  /// reproduces the expected value.
  std::string note;
};

/// Rows in request order. Links compute in parallel; each link itself is
/// single-threaded.
std::vector<TableRow> compute_table(const TableRequest& request, const LinkDataset& data);

std::string format_table(const std::vector<TableRow>& rows, Invariant inv, OutputFormat format);

/// Named table reproductions, "indegree2" and "maxpath". Expected values are
/// read from <data_dir>/tables.
TableRequest table_preset(std::string_view name, const std::filesystem::path& data_dir = data_directory());

/// The interpretation notes printed by `quiverknot about`.
std::string about_text();

}  // namespace quiverknot
