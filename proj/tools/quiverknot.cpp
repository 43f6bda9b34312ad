// quiverknot command line tool.
//
//   quiverknot invariants --link L2a1 --quandle q3.qnd --endos "[1,1,2];[2,2,1]"
//   quiverknot table --preset indegree2
//   quiverknot quiver --link L2a1 --quandle q3.qnd --endos all --dot hopf.dot
//
// Exit codes: 0 success, 2 input error, 3 cap exceeded.

#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quiverknot/coloring.hpp"
#include "quiverknot/data.hpp"
#include "quiverknot/error.hpp"
#include "quiverknot/quiver.hpp"
#include "quiverknot/report.hpp"

namespace qk = quiverknot;

namespace {

constexpr int exit_input_error = 2;
constexpr int exit_cap_exceeded = 3;

struct LinkOptions {
  std::string link;
  std::string pd;
  std::string quandle = "dihedral:3";
  std::string endos = "all";
  std::vector<int> reverse;  // 1-based on the command line
};

void add_link_options(CLI::App* cmd, LinkOptions& o) {
  cmd->add_option("--link", o.link, "Dataset name, or a PD literal");
  cmd->add_option("--pd", o.pd, "Literal PD code, e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
  cmd->add_option("--quandle", o.quandle, "Quandle: dihedral:n, trivial:n, a file, or a bundled name")
      ->capture_default_str();
  cmd->add_option("--endos", o.endos, "Endomorphisms: all, \"[..];[..]\", or a file")->capture_default_str();
  cmd->add_option("--reverse-component", o.reverse, "Reverse component k (1-based); repeatable")
      ->check(CLI::PositiveNumber);
}

qk::JobSpec job_spec(const LinkOptions& o) {
  if (o.link.empty() == o.pd.empty())
    throw qk::Error(qk::ErrorKind::invalid_input, "give exactly one of --link and --pd");
  qk::JobSpec spec;
  spec.link = o.pd.empty() ? o.link : o.pd;
  spec.quandle = o.quandle;
  spec.endos = o.endos;
  for (int k : o.reverse) spec.reverse_components.push_back(k - 1);
  return spec;
}

qk::ResolvedJob resolve(const qk::JobSpec& spec) { return qk::resolve_job(spec, qk::load_bundled_links()); }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qk::Error(qk::ErrorKind::invalid_input, "cannot write " + path);
  out << text;
}

std::string dot_of(const qk::ResolvedJob& job, const std::string& name) {
  auto homset = qk::enumerate_colorings(job.diagram, job.quandle);
  if (homset.empty()) return "digraph " + name + " {\n}\n";
  return qk::to_dot(qk::build_quiver(std::move(homset), job.endos, job.quandle), name);
}

std::string graph_name(const std::string& s) {
  std::string out;
  for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front()))) out.insert(0, "Q_");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle coloring quivers and their polynomial invariants"};
  app.require_subcommand(0, 1);
  bool about_flag = false;
  app.add_flag("--about", about_flag, "Print conventions and interpretation notes");

  // invariants
  LinkOptions inv_link;
  std::string inv_semantics = qk::to_string(qk::default_trail_semantics);
  std::string inv_format = "text";
  std::string inv_dot;
  bool inv_verbatim = false;
  bool inv_all_semantics = false;
  bool inv_no_mp = false;
  std::uint64_t inv_cap = qk::default_trail_cap;
  auto* inv = app.add_subcommand("invariants", "Counting invariant, in-degree and maximal path polynomials");
  add_link_options(inv, inv_link);
  inv->add_option("--trail-semantics", inv_semantics, "Maximal trail notion: set, endpoint or insert")
      ->capture_default_str();
  inv->add_flag("--all-semantics", inv_all_semantics, "Also report the other trail semantics");
  inv->add_flag("--no-max-path", inv_no_mp, "Skip the maximal path polynomial");
  inv->add_option("--format", inv_format, "text, csv or json")->capture_default_str();
  inv->add_option("--dot", inv_dot, "Also write the quiver as DOT to this file");
  inv->add_flag("--verbatim-s0", inv_verbatim, "Write the two-variable polynomial ascending with s^0 kept");
  inv->add_option("--cap", inv_cap, "Bound on trail search steps")->capture_default_str();

  // table
  std::string tab_preset;
  std::vector<std::string> tab_links;
  std::string tab_quandle;
  std::string tab_endos;
  std::string tab_invariant;
  std::string tab_expected;
  std::string tab_semantics;
  std::string tab_format = "text";
  std::string tab_out;
  std::uint64_t tab_cap = qk::default_trail_cap;
  unsigned tab_threads = 0;
  auto* tab = app.add_subcommand("table", "One invariant over a list of links");
  tab->add_option("--preset", tab_preset, "indegree2 or maxpath");
  tab->add_option("--links", tab_links, "Comma separated dataset names")
      ->delimiter(',')
      ->expected(0, CLI::detail::expected_max_vector_size);
  tab->add_option("--quandle", tab_quandle, "Quandle spec");
  tab->add_option("--endos", tab_endos, "Endomorphism set");
  tab->add_option("--invariant", tab_invariant, "count, 2var, edge, vertex or mp");
  tab->add_option("--expected", tab_expected, "File of 'name: value' lines to check against");
  tab->add_option("--trail-semantics", tab_semantics, "set, endpoint or insert");
  tab->add_option("--format", tab_format, "text, csv or json")->capture_default_str();
  tab->add_option("--out", tab_out, "Write to this file instead of standard output");
  tab->add_option("--cap", tab_cap, "Bound on trail search steps per link")->capture_default_str();
  tab->add_option("--threads", tab_threads, "Worker threads (0: all cores)")->capture_default_str();

  // quiver
  LinkOptions q_link;
  std::string q_dot;
  std::string q_name;
  auto* quiver = app.add_subcommand("quiver", "Write the coloring quiver as Graphviz DOT");
  add_link_options(quiver, q_link);
  quiver->add_option("--dot", q_dot, "Output file (default: standard output)");
  quiver->add_option("--name", q_name, "Graph name (default: derived from the link)");

  auto* links = app.add_subcommand("links", "List the bundled dataset names");
  auto* about = app.add_subcommand("about", "Print conventions and interpretation notes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input_error;
  }

  try {
    if (about_flag || *about) {
      std::cout << qk::about_text();
      return 0;
    }
    if (*links) {
      for (const auto& n : qk::load_bundled_links().names()) std::cout << n << '\n';
      return 0;
    }
    if (*inv) {
      const auto t0 = std::chrono::steady_clock::now();
      qk::JobSpec spec = job_spec(inv_link);
      const auto job = resolve(spec);
      qk::InvariantOptions opts;
      opts.semantics = qk::parse_trail_semantics(inv_semantics);
      opts.cap = inv_cap;
      opts.max_path = !inv_no_mp;
      opts.all_semantics = inv_all_semantics;
      opts.partial_on_cap = true;
      const auto format = qk::parse_output_format(inv_format);
      const auto report = qk::compute_invariants(job.diagram, job.quandle, job.endos, opts);
      std::cout << qk::format_report(report, format, inv_verbatim);
      if (!inv_dot.empty()) write_text(inv_dot, dot_of(job, graph_name(report.link)));
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      std::fprintf(stderr, "elapsed: %.1f ms\n", ms);
      if (report.max_path_error) {
        std::cerr << "error [CapExceeded]: " << *report.max_path_error << "; raise --cap or use --no-max-path\n";
        return exit_cap_exceeded;
      }
      return 0;
    }
    if (*tab) {
      qk::TableRequest req;
      if (!tab_preset.empty()) req = qk::table_preset(tab_preset, qk::data_directory());
      if (tab->count("--links")) {
        req.links.clear();
        for (const auto& l : tab_links)
          if (!l.empty()) req.links.push_back(l);
      }
      if (!tab_quandle.empty()) req.quandle = tab_quandle;
      if (!tab_endos.empty()) req.endos = tab_endos;
      if (!tab_invariant.empty()) req.invariant = qk::parse_invariant(tab_invariant);
      if (!tab_semantics.empty()) req.semantics = qk::parse_trail_semantics(tab_semantics);
      if (!tab_expected.empty()) req.expected = qk::load_expected_values(tab_expected);
      if (tab->count("--cap")) req.cap = tab_cap;
      req.threads = tab_threads;
      const auto format = qk::parse_output_format(tab_format);
      if (req.quandle.empty()) {
        if (!req.links.empty()) throw qk::Error(qk::ErrorKind::invalid_input, "table needs --quandle or --preset");
        req.quandle = "trivial:1";
      }
      const auto rows = qk::compute_table(req, qk::load_bundled_links());
      write_text(tab_out, qk::format_table(rows, req.invariant, format));
      return 0;
    }
    if (*quiver) {
      const auto job = resolve(job_spec(q_link));
      const std::string name = q_name.empty() ? graph_name(job.diagram.name.value_or("QCQ")) : q_name;
      write_text(q_dot, dot_of(job, name));
      return 0;
    }
    std::cout << app.help();
    return 0;
  } catch (const qk::CapExceeded& e) {
    std::cerr << "error [" << qk::to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_cap_exceeded;
  } catch (const qk::Error& e) {
    std::cerr << "error [" << qk::to_string(e.kind()) << "]: " << e.what() << '\n';
    return e.kind() == qk::ErrorKind::cap_exceeded ? exit_cap_exceeded : exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}
