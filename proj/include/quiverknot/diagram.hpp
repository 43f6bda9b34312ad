#pragma once

// Oriented link diagrams from PD codes.
//
// Token forms (whitespace or commas between tokens; brackets may replace
// parentheses, so Knot Atlas `X[1,4,2,5]` is accepted too):
//   X(a,b,c,d)   classical crossing; a is the incoming under-edge and the
//                rest follow counterclockwise. Orientation of the over
//                strand is inferred from its component.
//   X+(...) X-(...)  classical crossing with an explicit sign.
//   V(a,b,c,d)   virtual crossing; strands a-c and b-d pass through.
//   O(a)         a crossingless component with edge label a.
// The empty string is the zero-crossing unknot.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quiverknot {

enum class PdKind { classical, virtual_crossing, loop };

/// One PD token. For loops only labels[0] is meaningful. `sign` is 0 for a
/// classical crossing whose sign is still to be inferred.
struct PdToken {
  PdKind kind = PdKind::classical;
  std::array<int, 4> labels{};
  int sign = 0;

  auto operator<=>(const PdToken&) const = default;
};

/// A classical crossing in arc terms (arcs are 1-based). The over strand is a
/// single arc, so over_out == over; both are kept to mirror the four PD
/// positions.
struct Crossing {
  int sign = 0;
  int under_in = 0;
  int over = 0;
  int under_out = 0;
  int over_out = 0;
};

/// A coloring constraint: color(out) = color(in) |> color(over) when sign is
/// +1, color(in) = color(out) |> color(over) when sign is -1.
struct Relation {
  int out_arc = 0;
  int in_arc = 0;
  int over_arc = 0;
  int sign = 0;

  auto operator<=>(const Relation&) const = default;
};

class LinkDiagram {
 public:
  std::optional<std::string> name;

  int arc_count() const noexcept { return arc_count_; }
  int component_count() const noexcept { return static_cast<int>(components_.size()); }

  /// Classical crossings in token order.
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

  /// Arcs of each component in traversal order. Components are ordered by
  /// their smallest edge label.
  const std::vector<std::vector<int>>& components() const noexcept { return components_; }

  /// Tokens with every classical sign resolved.
  const std::vector<PdToken>& tokens() const noexcept { return tokens_; }

  int virtual_crossing_count() const noexcept;

  /// Arc carrying a PD edge label.
  int arc_of_label(int label) const;
  /// Component index (0-based) of a PD edge label.
  int component_of_label(int label) const;

  /// Signed PD text that parses back to the same diagram.
  std::string to_pd() const;

 private:
  friend LinkDiagram build_diagram(std::vector<PdToken> tokens);
  friend LinkDiagram add_kink(const LinkDiagram& d, int arc, int sign);

  struct Occurrence {
    int token = -1;
    int position = -1;
  };

  std::vector<PdToken> tokens_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> components_;
  std::map<int, int> label_arc_;
  std::map<int, int> label_component_;
  std::map<int, Occurrence> head_;  // where each edge ends, going forward
  int arc_count_ = 0;
};

/// Validates closure and orientation and derives arcs, signs and components.
/// Throws Error with kind open_diagram or orientation_conflict.
LinkDiagram build_diagram(std::vector<PdToken> tokens);

/// Tokenizes then builds. Throws malformed_token on syntax errors.
LinkDiagram parse_pd(std::string_view text);

/// One relation per classical crossing, in crossing order.
std::vector<Relation> relations(const LinkDiagram& d);

/// Reverses component k (0-based). Throws bad_component_index.
LinkDiagram reverse_component(const LinkDiagram& d, int k);

/// Inserts a Reidemeister I kink of the given sign on an arc (1-based).
/// Throws bad_arc, or invalid_input for a sign other than +-1.
LinkDiagram add_kink(const LinkDiagram& d, int arc, int sign);

}  // namespace quiverknot
