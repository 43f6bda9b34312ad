#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quiverknot/algebra.hpp"
#include "quiverknot/coloring.hpp"

namespace quiverknot {

struct Edge {
  int source = 0;
  int target = 0;
  int label = 0;  // index into the endomorphism list

  auto operator<=>(const Edge&) const = default;
};

/// Directed multigraph with loops, vertices 0..n-1 and edges indexed in
/// insertion order.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(out_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

  const std::vector<int>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& in_edges(int v) const { return in_[static_cast<std::size_t>(v)]; }
  int in_degree(int v) const { return static_cast<int>(in_edges(v).size()); }
  int out_degree(int v) const { return static_cast<int>(out_edges(v).size()); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Quandle coloring quiver: one vertex per coloring (in homset order) and an
/// edge f -> s o f for every vertex f and every s in S, ordered by
/// (vertex, endomorphism index).
class ColoringQuiver {
 public:
  const std::vector<Coloring>& vertices() const noexcept { return vertices_; }
  const std::vector<Endomorphism>& endomorphisms() const noexcept { return endos_; }
  const Digraph& graph() const noexcept { return graph_; }

  int vertex_count() const noexcept { return graph_.vertex_count(); }
  int edge_count() const noexcept { return graph_.edge_count(); }
  const std::vector<Edge>& edges() const noexcept { return graph_.edges(); }
  int in_degree(int v) const { return graph_.in_degree(v); }
  int out_degree(int v) const { return graph_.out_degree(v); }

 private:
  friend ColoringQuiver build_quiver(std::vector<Coloring> homset, std::vector<Endomorphism> endos,
                                     const Quandle& q);

  std::vector<Coloring> vertices_;
  std::vector<Endomorphism> endos_;
  Digraph graph_;
};

/// Throws not_an_endomorphism if some s fails is_endomorphism for q, and
/// invalid_input if the homset is empty or not closed under S.
ColoringQuiver build_quiver(std::vector<Coloring> homset, std::vector<Endomorphism> endos, const Quandle& q);

// ---------------------------------------------------------------------------
// Trails: edge sequences, head to tail, never reusing an edge.

struct Trail {
  std::vector<int> edges;
  int start = 0;
  int end = 0;

  std::size_t length() const noexcept { return edges.size(); }
  auto operator<=>(const Trail&) const = default;
};

/// Which trails count as maximal.
///  set:      no other trail uses a strict superset of the edges.
///  endpoint: nothing can be appended at the end or prepended at the start.
///  insert:   endpoint, and no unused loop sits at any vertex the trail
///            visits; equivalently, no single edge can be inserted anywhere.
enum class TrailSemantics { set_maximal, endpoint_maximal, insertion_maximal };

const char* to_string(TrailSemantics s);
/// Accepts "set", "endpoint", "insert" (and the long spellings).
TrailSemantics parse_trail_semantics(std::string_view text);

inline constexpr std::uint64_t default_trail_cap = 10'000'000;

/// Maximal trails, sorted by (start vertex, edge sequence). `cap` bounds the
/// number of single-edge extensions the search may perform; exceeding it
/// throws CapExceeded rather than returning a partial list.
std::vector<Trail> maximal_trails(const Digraph& g, TrailSemantics semantics,
                                  std::uint64_t cap = default_trail_cap);

inline std::vector<Trail> maximal_trails(const ColoringQuiver& q, TrailSemantics semantics,
                                         std::uint64_t cap = default_trail_cap) {
  return maximal_trails(q.graph(), semantics, cap);
}

/// Deterministic Graphviz digraph; vertices show the coloring and in-degree,
/// edges the 1-based endomorphism index.
std::string to_dot(const ColoringQuiver& q, std::string_view graph_name = "QCQ");

}  // namespace quiverknot
