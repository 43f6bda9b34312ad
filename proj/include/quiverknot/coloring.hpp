#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "quiverknot/algebra.hpp"
#include "quiverknot/diagram.hpp"

namespace quiverknot {

/// Arc colors: colors[a-1] is the element on arc a.
struct Coloring {
  std::vector<int> colors;

  int operator[](int arc) const { return colors[static_cast<std::size_t>(arc - 1)]; }

  /// "(1,2,...)"
  std::string str() const;

  auto operator<=>(const Coloring&) const = default;
};

bool satisfies_relations(const Coloring& c, const std::vector<Relation>& rels, const Quandle& q);

/// The homset Hom(Q(L), X), lexicographically ordered by arc colors. Depth
/// first over arcs in canonical order; every assignment immediately forces
/// whatever crossing outputs it determines, and a conflict backtracks.
std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const Quandle& q);

std::uint64_t counting_invariant(const LinkDiagram& d, const Quandle& q);

/// s o c, arc by arc.
Coloring apply_endo(const Coloring& c, const Endomorphism& s);

inline constexpr std::uint64_t default_brute_force_cap = 100'000'000;

/// Filters all n^arcs assignments. Throws CapExceeded when n^arcs > cap.
std::vector<Coloring> brute_force_colorings(const LinkDiagram& d, const Quandle& q,
                                            std::uint64_t cap = default_brute_force_cap);

}  // namespace quiverknot
