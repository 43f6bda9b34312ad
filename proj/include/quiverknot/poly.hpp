#pragma once

// Sparse integer polynomials and the decategorifications of a coloring
// quiver. Coefficients are 64-bit; any overflow raises Error{overflow}
// instead of wrapping.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "quiverknot/quiver.hpp"

namespace quiverknot {

using Coefficient = std::int64_t;

Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

/// Polynomial in one variable. Terms are kept in descending exponent order
/// with no zero coefficients.
class UniPoly {
 public:
  using Terms = std::map<int, Coefficient, std::greater<>>;

  UniPoly() = default;
  explicit UniPoly(char variable) : variable_(variable) {}

  char variable() const noexcept { return variable_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(int exponent, Coefficient c);
  Coefficient coefficient(int exponent) const;
  Coefficient evaluate(Coefficient x) const;
  Coefficient coefficient_sum() const { return evaluate(1); }

  /// Equality ignores the variable name.
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

 private:
  char variable_ = 'q';
  Terms terms_;
};

/// Polynomial in (s, t); terms in descending (i, j) lexicographic order.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Coefficient, std::greater<>>;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(int s_exp, int t_exp, Coefficient c);
  Coefficient coefficient(int s_exp, int t_exp) const;

  /// Substitutes s = value, leaving a polynomial in t.
  UniPoly at_s(Coefficient value) const;
  Coefficient coefficient_sum() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  Terms terms_;
};

/// Sum over edges of s^indeg(source) t^indeg(target).
BiPoly two_var_indegree_poly(const ColoringQuiver& q);
/// Sum over edges of t^indeg(target): the two-variable polynomial at s = 1.
UniPoly indegree_poly_edge_sum(const ColoringQuiver& q);
/// Sum over vertices of t^indeg(vertex).
UniPoly indegree_poly_vertex_sum(const ColoringQuiver& q);
/// Sum over trails of q^length.
UniPoly maximal_path_poly(std::span<const Trail> trails);

/// Canonical text: descending terms joined by " + ", unit coefficients and
/// unit exponents suppressed, zero exponents dropped, "0" for the zero
/// polynomial. e.g. "4s^5t^5 + 6t^5", "12q^5".
std::string format_poly(const UniPoly& p);
std::string format_poly(const BiPoly& p);
/// The printed style of the Hopf link example: ascending, no spaces, s^0
/// written out, e.g. "6s^0t^5+4s^5t^5".
std::string format_poly_verbatim(const BiPoly& p);

/// Reads the printed forms back, tolerating braces in exponents
/// ("s^{12}t^7"), unicode-free "^", spaces, and any term order.
UniPoly parse_unipoly(std::string_view text, char variable = 'q');
BiPoly parse_bipoly(std::string_view text);

/// {"terms":[{"s":i,"t":j,"c":k}, ...]} in canonical order.
std::string to_json(const BiPoly& p);
/// {"terms":[{"<var>":i,"c":k}, ...]}
std::string to_json(const UniPoly& p);

}  // namespace quiverknot
