#include "quiverknot/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quiverknot/error.hpp"

namespace quiverknot {

Digraph::Digraph(int vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), out_(static_cast<std::size_t>(vertex_count)), in_(static_cast<std::size_t>(vertex_count)) {
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto& edge = edges_[e];
    if (edge.source < 0 || edge.source >= vertex_count || edge.target < 0 || edge.target >= vertex_count)
      throw Error(ErrorKind::invalid_input, "edge endpoint out of range");
    out_[edge.source].push_back(e);
    in_[edge.target].push_back(e);
  }
}

ColoringQuiver build_quiver(std::vector<Coloring> homset, std::vector<Endomorphism> endos, const Quandle& q) {
  if (homset.empty()) throw Error(ErrorKind::invalid_input, "cannot build a quiver on an empty homset");
  for (const auto& s : endos)
    if (!is_endomorphism(q, s.image))
      throw Error(ErrorKind::not_an_endomorphism, s.str() + " is not an endomorphism of the coloring quandle");
  std::sort(homset.begin(), homset.end());

  std::vector<Edge> edges;
  edges.reserve(homset.size() * endos.size());
  for (int v = 0; v < static_cast<int>(homset.size()); ++v) {
    for (int k = 0; k < static_cast<int>(endos.size()); ++k) {
      const Coloring image = apply_endo(homset[v], endos[k]);
      auto it = std::lower_bound(homset.begin(), homset.end(), image);
      if (it == homset.end() || *it != image)
        throw Error(ErrorKind::invalid_input, "homset is not closed under " + endos[k].str());
      edges.push_back(Edge{v, static_cast<int>(it - homset.begin()), k});
    }
  }

  ColoringQuiver out;
  out.graph_ = Digraph(static_cast<int>(homset.size()), std::move(edges));
  out.vertices_ = std::move(homset);
  out.endos_ = std::move(endos);
  return out;
}

const char* to_string(TrailSemantics s) {
  switch (s) {
    case TrailSemantics::set_maximal: return "set";
    case TrailSemantics::endpoint_maximal: return "endpoint";
    case TrailSemantics::insertion_maximal: return "insert";
  }
  return "?";
}

TrailSemantics parse_trail_semantics(std::string_view text) {
  if (text == "set" || text == "set-maximal") return TrailSemantics::set_maximal;
  if (text == "endpoint" || text == "endpoint-maximal") return TrailSemantics::endpoint_maximal;
  if (text == "insert" || text == "insertion-maximal") return TrailSemantics::insertion_maximal;
  throw Error(ErrorKind::invalid_input, "unknown trail semantics '" + std::string(text) + "'");
}

namespace {

class TrailSearch {
 public:
  TrailSearch(const Digraph& g, TrailSemantics semantics, std::uint64_t cap)
      : g_(g),
        semantics_(semantics),
        cap_(cap),
        used_(static_cast<std::size_t>(g.edge_count()), 0),
        visits_(static_cast<std::size_t>(g.vertex_count()), 0) {
    for (int e = 0; e < g.edge_count(); ++e)
      if (g.edge(e).source == g.edge(e).target) loops_.push_back(e);
  }

  // Every trail that cannot be extended at either end (plus the loop rule
  // for insertion semantics), in DFS order from each starting edge.
  std::vector<Trail> run() {
    for (int e = 0; e < g_.edge_count(); ++e) {
      const int start = g_.edge(e).source;
      ++visits_[start];
      push(e);
      extend(g_.edge(e).target);
      pop(e);
      --visits_[start];
    }
    return std::move(found_);
  }

 private:
  void push(int e) {
    used_[e] = 1;
    path_.push_back(e);
    ++visits_[g_.edge(e).target];
  }
  void pop(int e) {
    used_[e] = 0;
    path_.pop_back();
    --visits_[g_.edge(e).target];
  }

  void extend(int v) {
    bool extended = false;
    for (int e : g_.out_edges(v)) {
      if (used_[e]) continue;
      extended = true;
      if (++steps_ > cap_) throw CapExceeded("maximal trail search", cap_);
      push(e);
      extend(g_.edge(e).target);
      pop(e);
    }
    if (!extended) record(v);
  }

  void record(int end) {
    const int start = g_.edge(path_.front()).source;
    for (int e : g_.in_edges(start))
      if (!used_[e]) return;
    if (semantics_ == TrailSemantics::insertion_maximal) {
      for (int e : loops_)
        if (!used_[e] && visits_[g_.edge(e).source] > 0) return;
    }
    found_.push_back(Trail{path_, start, end});
  }

  const Digraph& g_;
  TrailSemantics semantics_;
  std::uint64_t cap_;
  std::uint64_t steps_ = 0;
  std::vector<char> used_;
  std::vector<int> visits_;
  std::vector<int> loops_;
  std::vector<int> path_;
  std::vector<Trail> found_;
};

std::vector<Trail> drop_strict_subsets(std::vector<Trail> trails, int edge_count) {
  const std::size_t words = (static_cast<std::size_t>(edge_count) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> sets(trails.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < trails.size(); ++i)
    for (int e : trails[i].edges) sets[i][e / 64] |= std::uint64_t{1} << (e % 64);

  std::vector<std::size_t> by_length(trails.size());
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t a, std::size_t b) { return trails[a].length() > trails[b].length(); });

  auto subset = [&](std::size_t a, std::size_t b) {
    for (std::size_t w = 0; w < words; ++w)
      if (sets[a][w] & ~sets[b][w]) return false;
    return true;
  };

  std::vector<char> keep(trails.size(), 1);
  for (std::size_t i = 0; i < trails.size(); ++i) {
    const auto& t = trails[i];
    for (std::size_t j : by_length) {
      if (trails[j].length() <= t.length()) break;
      if (subset(i, j)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<Trail> out;
  for (std::size_t i = 0; i < trails.size(); ++i)
    if (keep[i]) out.push_back(std::move(trails[i]));
  return out;
}

}  // namespace

std::vector<Trail> maximal_trails(const Digraph& g, TrailSemantics semantics, std::uint64_t cap) {
  // Set-maximal trails are inextensible at both ends, and every trail lies
  // inside some inextensible one, so filtering the endpoint list suffices.
  const auto search_semantics =
      semantics == TrailSemantics::set_maximal ? TrailSemantics::endpoint_maximal : semantics;
  std::vector<Trail> trails = TrailSearch(g, search_semantics, cap).run();
  if (semantics == TrailSemantics::set_maximal) trails = drop_strict_subsets(std::move(trails), g.edge_count());
  std::sort(trails.begin(), trails.end(), [](const Trail& a, const Trail& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.edges < b.edges;
  });
  return trails;
}

std::string to_dot(const ColoringQuiver& q, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  for (int v = 0; v < q.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << q.vertices()[v].str() << "\\nin " << q.in_degree(v) << "\"];\n";
  for (const auto& e : q.edges())
    out << "  v" << e.source << " -> v" << e.target << " [label=\"s" << e.label + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace quiverknot
