#pragma once

// Shared fixtures for the test suites: the bundled data, and a blind
// enumeration of every quandle of small order.

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>
#include <tuple>
#include <string>
#include <vector>

#include "quiverknot/algebra.hpp"
#include "quiverknot/data.hpp"
#include "quiverknot/error.hpp"
#include "quiverknot/quiver.hpp"

namespace qk_test {

namespace qk = quiverknot;

inline std::filesystem::path data_dir() { return qk::data_directory(); }

inline qk::Quandle bundled(const std::string& name) { return qk::load_quandle(data_dir() / "quandles" / (name + ".qnd")); }

inline const qk::LinkDataset& links() {
  static const qk::LinkDataset d = qk::load_bundled_links();
  return d;
}

/// Every valid quandle table on n elements, found by choosing each column
/// y as a permutation fixing y and keeping the distributive ones. Only
/// practical for n <= 4.
inline std::vector<qk::Quandle> all_quandles(int n) {
  std::vector<std::vector<int>> column_choices;  // permutations fixing y, per y
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::vector<std::vector<int>>> per_column(static_cast<std::size_t>(n));
  for (int y = 1; y <= n; ++y)
    for (const auto& p : perms)
      if (p[static_cast<std::size_t>(y - 1)] == y) per_column[static_cast<std::size_t>(y - 1)].push_back(p);

  std::vector<qk::Quandle> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x)
        rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
            per_column[static_cast<std::size_t>(y)][pick[static_cast<std::size_t>(y)]][static_cast<std::size_t>(x)];
    bool distributive = true;
    auto op = [&](int a, int b) { return rows[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]; };
    for (int x = 1; x <= n && distributive; ++x)
      for (int y = 1; y <= n && distributive; ++y)
        for (int z = 1; z <= n && distributive; ++z)
          distributive = op(op(x, y), z) == op(op(x, z), op(y, z));
    if (distributive) out.push_back(qk::validate_quandle(rows));
    int k = 0;
    while (k < n && ++pick[static_cast<std::size_t>(k)] == per_column[static_cast<std::size_t>(k)].size())
      pick[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
  }
  return out;
}

/// Blind filter over all n^n maps.
inline std::vector<std::vector<int>> blind_endomorphisms(const qk::Quandle& q) {
  const int n = q.size();
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(n), 1);
  while (true) {
    bool ok = true;
    for (int x = 1; x <= n && ok; ++x)
      for (int y = 1; y <= n && ok; ++y)
        ok = f[static_cast<std::size_t>(q.op(x, y) - 1)] ==
             q.op(f[static_cast<std::size_t>(x - 1)], f[static_cast<std::size_t>(y - 1)]);
    if (ok) out.push_back(f);
    int k = n - 1;
    while (k >= 0 && ++f[static_cast<std::size_t>(k)] > n) f[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
  }
  return out;
}

// Blind reference: every edge sequence without repeats that chains head to
// tail, filtered by the literal definition of each semantics.
inline std::vector<qk::Trail> blind_trails(const qk::Digraph& g, qk::TrailSemantics sem) {
  const int m = g.edge_count();
  std::vector<std::vector<int>> all;
  std::vector<int> seq;
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  auto rec = [&](auto&& self) -> void {
    if (!seq.empty()) all.push_back(seq);
    for (int e = 0; e < m; ++e) {
      if (used[static_cast<std::size_t>(e)]) continue;
      if (!seq.empty() && g.edge(seq.back()).target != g.edge(e).source) continue;
      used[static_cast<std::size_t>(e)] = true;
      seq.push_back(e);
      self(self);
      seq.pop_back();
      used[static_cast<std::size_t>(e)] = false;
    }
  };
  rec(rec);

  auto is_trail = [&](const std::vector<int>& s) {
    std::set<int> seen(s.begin(), s.end());
    if (seen.size() != s.size()) return false;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (g.edge(s[i - 1]).target != g.edge(s[i]).source) return false;
    return true;
  };
  auto edge_set = [](const std::vector<int>& s) { return std::set<int>(s.begin(), s.end()); };

  std::vector<qk::Trail> out;
  for (const auto& s : all) {
    bool maximal = true;
    if (sem == qk::TrailSemantics::set_maximal) {
      const auto mine = edge_set(s);
      for (const auto& other : all) {
        if (other.size() <= s.size()) continue;
        const auto theirs = edge_set(other);
        if (std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) {
          maximal = false;
          break;
        }
      }
    } else {
      const bool anywhere = sem == qk::TrailSemantics::insertion_maximal;
      for (int e = 0; e < m && maximal; ++e) {
        if (std::find(s.begin(), s.end(), e) != s.end()) continue;
        for (std::size_t pos = 0; pos <= s.size() && maximal; ++pos) {
          if (!anywhere && pos != 0 && pos != s.size()) continue;
          auto longer = s;
          longer.insert(longer.begin() + static_cast<std::ptrdiff_t>(pos), e);
          if (is_trail(longer)) maximal = false;
        }
      }
    }
    if (maximal) out.push_back(qk::Trail{s, g.edge(s.front()).source, g.edge(s.back()).target});
  }
  std::sort(out.begin(), out.end(), [](const qk::Trail& a, const qk::Trail& b) {
    return std::tie(a.start, a.edges) < std::tie(b.start, b.edges);
  });
  return out;
}

inline std::vector<qk::Quandle> bundled_quandles() {
  return {bundled("q3"), bundled("q4"), bundled("q4c"), bundled("q5")};
}

}  // namespace qk_test
