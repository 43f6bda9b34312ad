#include "quiverknot/data.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "quiverknot/error.hpp"

#ifndef QUIVERKNOT_DEFAULT_DATA_DIR
#define QUIVERKNOT_DEFAULT_DATA_DIR "data"
#endif

namespace quiverknot {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// `name: value` lines. The name ends at the first ':' followed by a space or
// end of line, so braces and commas inside names ("L6n1{0,1}") survive.
std::vector<std::pair<std::string, std::string>> read_named_lines(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto colon = body.find(':');
    if (colon == std::string_view::npos || colon == 0)
      throw Error(ErrorKind::invalid_input, "line " + std::to_string(line_no) + ": expected 'name: value'");
    out.emplace_back(std::string(trim(body.substr(0, colon))), std::string(trim(body.substr(colon + 1))));
  }
  return out;
}

}  // namespace

LinkDataset LinkDataset::parse(std::string_view text) {
  LinkDataset d;
  for (auto& [name, pd] : read_named_lines(text)) {
    if (d.contains(name)) throw Error(ErrorKind::invalid_input, "duplicate link name '" + name + "'");
    d.entries_.emplace_back(std::move(name), std::move(pd));
  }
  return d;
}

LinkDataset LinkDataset::load(const fs::path& path) { return parse(read_file(path)); }

bool LinkDataset::contains(std::string_view name) const {
  for (const auto& [n, pd] : entries_)
    if (n == name) return true;
  return false;
}

const std::string& LinkDataset::pd(std::string_view name) const {
  for (const auto& [n, pd] : entries_)
    if (n == name) return pd;
  throw Error(ErrorKind::unknown_link, "unknown link '" + std::string(name) + "'");
}

LinkDiagram LinkDataset::diagram(std::string_view name) const {
  LinkDiagram d = parse_pd(pd(name));
  d.name = std::string(name);
  return d;
}

std::vector<std::string> LinkDataset::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [n, pd] : entries_) out.push_back(n);
  return out;
}

fs::path data_directory() {
  if (const char* env = std::getenv("QUIVERKNOT_DATA"); env && *env) {
    const fs::path p(env);
    if (fs::is_directory(p)) return p;
    return p.parent_path();
  }
  return fs::path(QUIVERKNOT_DEFAULT_DATA_DIR);
}

fs::path dataset_path() {
  if (const char* env = std::getenv("QUIVERKNOT_DATA"); env && *env) {
    const fs::path p(env);
    if (!fs::is_directory(p)) return p;
  }
  return data_directory() / "links.pd";
}

LinkDataset load_bundled_links() { return LinkDataset::load(dataset_path()); }

LinkDiagram resolve_link(std::string_view name_or_pd, const LinkDataset& data) {
  const auto spec = trim(name_or_pd);
  if (data.contains(spec)) return data.diagram(spec);
  if (spec.find('(') != std::string_view::npos || spec.find('[') != std::string_view::npos) return parse_pd(spec);
  return data.diagram(spec);  // throws unknown_link
}

Quandle resolve_quandle(std::string_view spec_in, const fs::path& data_dir) {
  const auto spec = trim(spec_in);
  for (auto [prefix, make] : {std::pair{std::string_view("dihedral:"), &dihedral},
                              std::pair{std::string_view("trivial:"), &trivial_quandle}}) {
    if (spec.substr(0, prefix.size()) != prefix) continue;
    const std::string arg(spec.substr(prefix.size()));
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != arg.size())
      throw Error(ErrorKind::invalid_input, "bad quandle size in '" + std::string(spec) + "'");
    return make(n);
  }
  const fs::path direct{std::string(spec)};
  if (fs::is_regular_file(direct)) return load_quandle(direct);
  for (const fs::path& candidate : {data_dir / "quandles" / direct, data_dir / "quandles" / (std::string(spec) + ".qnd")})
    if (fs::is_regular_file(candidate)) return load_quandle(candidate);
  throw Error(ErrorKind::invalid_input, "no quandle '" + std::string(spec) + "' (not a file or bundled name)");
}

std::vector<Endomorphism> resolve_endomorphisms(std::string_view spec_in, const Quandle& q) {
  const auto spec = trim(spec_in);
  if (spec == "all" || spec.find('[') != std::string_view::npos) return parse_endomorphism_set(spec, q);
  const fs::path path{std::string(spec)};
  if (!fs::is_regular_file(path))
    throw Error(ErrorKind::invalid_input, "endomorphism set '" + std::string(spec) + "' is neither inline nor a file");
  return parse_endomorphism_set(read_file(path), q);
}

std::map<std::string, std::string> load_expected_values(const fs::path& path) {
  std::map<std::string, std::string> out;
  for (auto& [name, value] : read_named_lines(read_file(path))) out[name] = value;
  return out;
}

const std::vector<std::string>& prime_links_through_seven() {
  static const std::vector<std::string> names = {"L2a1", "L4a1", "L5a1", "L6a1", "L6a2", "L6a3",
                                                 "L6a4", "L6a5", "L6n1", "L7a1", "L7a2", "L7a3",
                                                 "L7a4", "L7a5", "L7a6", "L7a7", "L7n1", "L7n2"};
  return names;
}

}  // namespace quiverknot
