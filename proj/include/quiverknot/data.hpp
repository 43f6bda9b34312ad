#pragma once

// Bundled data: the named PD dataset, quandle files and printed tables, plus
// the resolution rules the CLI uses for --link / --quandle / --endos.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiverknot/algebra.hpp"
#include "quiverknot/diagram.hpp"

namespace quiverknot {

/// `name: PD...` lines; '#' comments; later duplicates are rejected.
class LinkDataset {
 public:
  static LinkDataset parse(std::string_view text);
  static LinkDataset load(const std::filesystem::path& path);

  bool contains(std::string_view name) const;
  /// Throws unknown_link.
  const std::string& pd(std::string_view name) const;
  LinkDiagram diagram(std::string_view name) const;
  /// Names in file order.
  std::vector<std::string> names() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// The data directory: $QUIVERKNOT_DATA when it names a directory (or the
/// parent of the file it names), otherwise the directory configured at build
/// time.
std::filesystem::path data_directory();

/// $QUIVERKNOT_DATA when it names a file, else <data_directory>/links.pd.
std::filesystem::path dataset_path();

LinkDataset load_bundled_links();

/// A dataset name, or a literal PD string (anything containing '(' or '[').
LinkDiagram resolve_link(std::string_view name_or_pd, const LinkDataset& data);

/// `dihedral:n`, `trivial:n`, a path, or a bundled quandle name with or
/// without the .qnd suffix.
Quandle resolve_quandle(std::string_view spec, const std::filesystem::path& data_dir = data_directory());

/// `all`, inline bracket lists separated by ';', or a file of them.
std::vector<Endomorphism> resolve_endomorphisms(std::string_view spec, const Quandle& q);

/// `name: value` lines, as in data/tables/*.txt.
std::map<std::string, std::string> load_expected_values(const std::filesystem::path& path);

/// The eighteen prime links through seven crossings, in table order.
const std::vector<std::string>& prime_links_through_seven();

}  // namespace quiverknot
