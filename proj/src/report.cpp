#include "quiverknot/report.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "quiverknot/coloring.hpp"
#include "quiverknot/error.hpp"

namespace quiverknot {

const char* to_string(Invariant inv) {
  switch (inv) {
    case Invariant::counting: return "count";
    case Invariant::two_var: return "2var";
    case Invariant::edge_sum: return "edge";
    case Invariant::vertex_sum: return "vertex";
    case Invariant::max_path: return "mp";
  }
  return "?";
}

Invariant parse_invariant(std::string_view text) {
  if (text == "count" || text == "counting") return Invariant::counting;
  if (text == "2var" || text == "two-var") return Invariant::two_var;
  if (text == "edge" || text == "edge-sum") return Invariant::edge_sum;
  if (text == "vertex" || text == "vertex-sum") return Invariant::vertex_sum;
  if (text == "mp" || text == "max-path") return Invariant::max_path;
  throw Error(ErrorKind::invalid_input, "unknown invariant '" + std::string(text) + "'");
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw Error(ErrorKind::invalid_input, "unknown output format '" + std::string(text) + "'");
}

InvariantReport compute_invariants(const LinkDiagram& d, const Quandle& q, const std::vector<Endomorphism>& endos,
                                   const InvariantOptions& options) {
  InvariantReport r;
  r.link = d.name.value_or(d.to_pd());
  r.arcs = d.arc_count();
  r.crossings = static_cast<int>(d.crossings().size());
  r.components = d.component_count();
  r.quandle_order = q.size();
  r.endomorphisms = endos.size();
  r.semantics = options.semantics;

  auto homset = enumerate_colorings(d, q);
  r.counting = homset.size();
  if (homset.empty()) {
    if (options.max_path) r.max_path = UniPoly('q');
    return r;
  }
  const ColoringQuiver quiver = build_quiver(std::move(homset), endos, q);
  r.two_var = two_var_indegree_poly(quiver);
  r.edge_sum = indegree_poly_edge_sum(quiver);
  r.vertex_sum = indegree_poly_vertex_sum(quiver);
  if (options.max_path) {
    std::vector<TrailSemantics> wanted{options.semantics};
    if (options.all_semantics)
      for (auto s : {TrailSemantics::set_maximal, TrailSemantics::endpoint_maximal, TrailSemantics::insertion_maximal})
        if (s != options.semantics) wanted.push_back(s);
    try {
      for (auto s : wanted) r.max_path_by_semantics[s] = maximal_path_poly(maximal_trails(quiver, s, options.cap));
    } catch (const CapExceeded& e) {
      if (!options.partial_on_cap) throw;
      r.max_path_error = e.what();
      r.max_path_by_semantics.clear();
      return r;
    }
    r.max_path = r.max_path_by_semantics.at(options.semantics);
  }
  return r;
}

std::string invariant_value(const InvariantReport& r, Invariant inv, bool verbatim_s0) {
  switch (inv) {
    case Invariant::counting: return std::to_string(r.counting);
    case Invariant::two_var: return verbatim_s0 ? format_poly_verbatim(r.two_var) : format_poly(r.two_var);
    case Invariant::edge_sum: return format_poly(r.edge_sum);
    case Invariant::vertex_sum: return format_poly(r.vertex_sum);
    case Invariant::max_path: return r.max_path ? format_poly(*r.max_path) : "";
  }
  return "";
}

bool invariant_matches(const InvariantReport& r, Invariant inv, std::string_view expected) {
  switch (inv) {
    case Invariant::counting: return std::to_string(r.counting) == expected;
    case Invariant::two_var: return r.two_var == parse_bipoly(expected);
    case Invariant::edge_sum: return r.edge_sum == parse_unipoly(expected, 't');
    case Invariant::vertex_sum: return r.vertex_sum == parse_unipoly(expected, 't');
    case Invariant::max_path: return r.max_path && *r.max_path == parse_unipoly(expected, 'q');
  }
  return false;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + '"';
}

}  // namespace

std::string format_report(const InvariantReport& r, OutputFormat format, bool verbatim_s0) {
  const std::string two_var = invariant_value(r, Invariant::two_var, verbatim_s0);
  std::ostringstream out;
  switch (format) {
    case OutputFormat::text: {
      out << "link: " << r.link << '\n'
          << "arcs: " << r.arcs << "  crossings: " << r.crossings << "  components: " << r.components << '\n'
          << "quandle order: " << r.quandle_order << "  endomorphisms: " << r.endomorphisms << '\n'
          << "counting invariant: " << r.counting << '\n'
          << "two-variable in-degree polynomial: " << two_var << '\n'
          << "in-degree polynomial (edge sum, s=1): " << format_poly(r.edge_sum) << '\n'
          << "in-degree polynomial (vertex sum): " << format_poly(r.vertex_sum) << '\n';
      for (const auto& [s, p] : r.max_path_by_semantics)
        out << "maximal path polynomial [" << to_string(s) << (s == r.semantics ? ", selected" : "")
            << "]: " << format_poly(p) << '\n';
      if (r.max_path_error)
        out << "maximal path polynomial [" << to_string(r.semantics) << ", selected]: not computed ("
            << *r.max_path_error << ")\n";
      if (r.max_path && r.max_path_by_semantics.empty())
        out << "maximal path polynomial [" << to_string(r.semantics) << ", selected]: " << format_poly(*r.max_path)
            << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "link,counting,two_var,edge_sum,vertex_sum,max_path,semantics\n"
          << csv_field(r.link) << ',' << r.counting << ',' << csv_field(two_var) << ','
          << csv_field(format_poly(r.edge_sum)) << ',' << csv_field(format_poly(r.vertex_sum)) << ','
          << csv_field(r.max_path ? format_poly(*r.max_path) : "") << ',' << (r.max_path ? to_string(r.semantics) : "")
          << '\n';
      break;
    }
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["link"] = r.link;
      j["arcs"] = r.arcs;
      j["crossings"] = r.crossings;
      j["components"] = r.components;
      j["quandle_order"] = r.quandle_order;
      j["endomorphisms"] = r.endomorphisms;
      j["counting"] = r.counting;
      j["two_var"] = {{"text", two_var}, {"poly", nlohmann::ordered_json::parse(to_json(r.two_var))}};
      j["edge_sum"] = {{"text", format_poly(r.edge_sum)}, {"poly", nlohmann::ordered_json::parse(to_json(r.edge_sum))}};
      j["vertex_sum"] = {{"text", format_poly(r.vertex_sum)},
                         {"poly", nlohmann::ordered_json::parse(to_json(r.vertex_sum))}};
      if (r.max_path_error) {
        j["max_path"] = {{"semantics", to_string(r.semantics)}, {"error", *r.max_path_error}};
      } else if (r.max_path) {
        j["max_path"] = {{"semantics", to_string(r.semantics)},
                         {"text", format_poly(*r.max_path)},
                         {"poly", nlohmann::ordered_json::parse(to_json(*r.max_path))}};
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

ResolvedJob resolve_job(const JobSpec& spec, const LinkDataset& data) {
  LinkDiagram d = resolve_link(spec.link, data);
  for (int k : spec.reverse_components) d = reverse_component(d, k);
  Quandle q = resolve_quandle(spec.quandle);
  auto endos = resolve_endomorphisms(spec.endos, q);
  return ResolvedJob{std::move(d), std::move(q), std::move(endos)};
}

// ---------------------------------------------------------------------------

namespace {

std::string component_list(unsigned mask) {
  std::string out;
  for (int k = 0; mask >> k; ++k) {
    if (!((mask >> k) & 1u)) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(k + 1);
  }
  return out;
}

// Mismatch protocol: look for an orientation (subset of reversed
// components) or, for maximal paths, a trail semantics that reproduces the
// expected value. Subsets are tried by size, then numerically.
std::string explain_mismatch(const LinkDiagram& d, const Quandle& q, const std::vector<Endomorphism>& endos,
                             const TableRequest& req, const std::string& expected) {
  const int c = std::min(d.component_count(), 8);
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << c); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

  std::vector<TrailSemantics> semantics{req.semantics};
  if (req.invariant == Invariant::max_path)
    for (auto s : {TrailSemantics::set_maximal, TrailSemantics::endpoint_maximal, TrailSemantics::insertion_maximal})
      if (s != req.semantics) semantics.push_back(s);

  for (auto s : semantics) {
    for (unsigned mask : masks) {
      if (mask == 0 && s == req.semantics) continue;
      LinkDiagram variant = d;
      for (int k = 0; k < c; ++k)
        if ((mask >> k) & 1u) variant = reverse_component(variant, k);
      InvariantOptions opts{s, req.cap, req.invariant == Invariant::max_path, false};
      try {
        if (!invariant_matches(compute_invariants(variant, q, endos, opts), req.invariant, expected)) continue;
      } catch (const CapExceeded&) {
        continue;
      }
      std::string note = "matches";
      if (mask) note += std::string(" with component") + (std::popcount(mask) > 1 ? "s " : " ") + component_list(mask) + " reversed";
      if (s != req.semantics) note += std::string(mask ? " and" : "") + " under " + to_string(s) + " semantics";
      return note;
    }
  }
  return "no orientation or trail semantics variant matches";
}

}  // namespace

std::vector<TableRow> compute_table(const TableRequest& req, const LinkDataset& data) {
  const Quandle q = resolve_quandle(req.quandle);
  const auto endos = resolve_endomorphisms(req.endos, q);
  for (const auto& name : req.links)
    if (!data.contains(name)) throw Error(ErrorKind::unknown_link, "unknown link '" + name + "'");

  std::vector<TableRow> rows(req.links.size());
  std::vector<std::exception_ptr> errors(req.links.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < req.links.size();) {
      try {
        const auto& name = req.links[i];
        const LinkDiagram d = data.diagram(name);
        InvariantOptions opts{req.semantics, req.cap, req.invariant == Invariant::max_path, false};
        const InvariantReport r = compute_invariants(d, q, endos, opts);
        TableRow row{name, invariant_value(r, req.invariant), std::nullopt, std::nullopt, ""};
        if (auto it = req.expected.find(name); it != req.expected.end()) {
          row.expected = it->second;
          row.matches = invariant_matches(r, req.invariant, it->second);
          if (!*row.matches) row.note = explain_mismatch(d, q, endos, req, it->second);
        }
        rows[i] = std::move(row);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = req.threads ? req.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, req.links.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows, Invariant inv, OutputFormat format) {
  std::ostringstream out;
  const bool checked = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.expected.has_value(); });
  switch (format) {
    case OutputFormat::text: {
      std::size_t name_w = 4;
      std::size_t value_w = std::string(to_string(inv)).size();
      for (const auto& r : rows) name_w = std::max(name_w, r.link.size()), value_w = std::max(value_w, r.value.size());
      auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
      out << pad("link", name_w) << "  " << (checked ? pad(to_string(inv), value_w) + "  check" : std::string(to_string(inv)))
          << '\n';
      for (const auto& r : rows) {
        out << pad(r.link, name_w) << "  ";
        if (!checked) {
          out << r.value << '\n';
          continue;
        }
        out << pad(r.value, value_w) << "  ";
        if (!r.matches) {
          out << "-";
        } else if (*r.matches) {
          out << "match";
        } else {
          out << "differs; expected " << *r.expected << "; " << r.note;
        }
        out << '\n';
      }
      if (checked) {
        const auto total = std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.matches.has_value(); });
        const auto good = std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.matches.value_or(false); });
        out << good << " of " << total << " rows match\n";
      }
      break;
    }
    case OutputFormat::csv: {
      out << "link," << to_string(inv) << (checked ? ",expected,matches,note" : "") << '\n';
      for (const auto& r : rows) {
        out << csv_field(r.link) << ',' << csv_field(r.value);
        if (checked)
          out << ',' << csv_field(r.expected.value_or("")) << ','
              << (r.matches ? (*r.matches ? "true" : "false") : "") << ',' << csv_field(r.note);
        out << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json row{{"link", r.link}, {to_string(inv), r.value}};
        if (r.expected) {
          row["expected"] = *r.expected;
          row["matches"] = *r.matches;
          if (!r.note.empty()) row["note"] = r.note;
        }
        j.push_back(std::move(row));
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

TableRequest table_preset(std::string_view name, const std::filesystem::path& data_dir) {
  TableRequest req;
  req.links = prime_links_through_seven();
  if (name == "indegree2") {
    req.quandle = (data_dir / "quandles" / "q3.qnd").string();
    req.endos = "all";
    req.invariant = Invariant::two_var;
    req.expected = load_expected_values(data_dir / "tables" / "indegree2.txt");
  } else if (name == "maxpath") {
    req.quandle = (data_dir / "quandles" / "q4c.qnd").string();
    req.endos = "[2,4,3,1];[2,2,4,2]";
    req.invariant = Invariant::max_path;
    req.semantics = TrailSemantics::insertion_maximal;
    req.expected = load_expected_values(data_dir / "tables" / "maxpath.txt");
  } else {
    throw Error(ErrorKind::invalid_input, "unknown table preset '" + std::string(name) + "'");
  }
  return req;
}

std::string about_text() {
  return R"(quiverknot: quandle coloring quivers and their polynomial invariants.

Conventions
  Elements of a quandle are 1..n; maps are written [s(1),...,s(n)].
  PD codes: X(a,b,c,d) lists edges counterclockwise from the incoming
  under-edge a. A positive crossing colors its outgoing under-arc
  x |> y (x incoming, y over); a negative one uses right division.
  Quiver edges run f -> s o f for each s in S, so every vertex has
  out-degree |S| while in-degrees vary.

Two-variable in-degree polynomial
  Sum over edges of s^indeg(source) t^indeg(target).
  Two one-variable readings are reported:
    edge sum    the two-variable polynomial at s = 1, i.e. sum over edges
                of t^indeg(target); its coefficients add up to |S| times
                the counting invariant.
    vertex sum  sum over vertices of t^indeg(v); at t = 1 it is the
                counting invariant. The edge sum is not |S| times the
                vertex sum in general, so neither is derived from the
                other.

Maximal path polynomial
  Sum over maximal trails p (walks that never reuse an edge) of q^|p|;
  the summand is q^|p| alone. Three notions of maximal are available:
    set       no trail uses a strict superset of p's edges
    endpoint  no edge can be appended or prepended
    insert    no single edge can be appended, prepended or inserted,
              i.e. endpoint-maximal and every loop at a visited vertex
              is used (default)
  Only `insert` reproduces every bundled reference value. For the Hopf
  link with q3 and S = [1,1,2],[2,2,1] it gives 12q^5, leaving out trails
  that skip a loop; for L7a2 with q5 it counts the trails that skip a
  longer detour (32q^7).

Exit codes: 0 success, 2 input error, 3 cap exceeded.
)";
}

}  // namespace quiverknot
