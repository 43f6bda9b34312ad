#pragma once

// Finite quandles and their endomorphisms. Elements are named 1..n
// throughout, matching printed operation tables and the bracket notation
// [s(1),...,s(n)] for maps.

#include <compare>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quiverknot {

/// A validated finite quandle. Immutable once constructed; the only way to
/// obtain one is through validate_quandle (or the helpers built on it), so
/// every instance satisfies the three axioms.
class Quandle {
 public:
  int size() const noexcept { return n_; }

  /// x |> y
  int op(int x, int y) const { return table_[index(x, y)]; }

  /// The unique z with z |> y = x.
  int right_divide(int x, int y) const { return rdiv_[index(x, y)]; }

  /// Row-major table as printed: rows()[x-1][y-1] = x |> y.
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Quandle& a, const Quandle& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  friend Quandle validate_quandle(const std::vector<std::vector<int>>& table);

  Quandle(int n, std::vector<int> table, std::vector<int> rdiv)
      : n_(n), table_(std::move(table)), rdiv_(std::move(rdiv)) {}

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x - 1) * n_ + (y - 1);
  }

  int n_;
  std::vector<int> table_;
  std::vector<int> rdiv_;
};

/// Checks idempotency, right invertibility and right self-distributivity in
/// that order and throws AxiomViolation naming the first failure. Tables
/// that are not square or hold entries outside 1..n are input errors.
Quandle validate_quandle(const std::vector<std::vector<int>>& table);

/// x |> y = 2y - x mod n, writing the class of zero as n.
Quandle dihedral(int n);

/// Trivial quandle on n elements: x |> y = x.
Quandle trivial_quandle(int n);

struct Endomorphism {
  std::vector<int> image;  // image[x-1] = s(x)

  int operator()(int x) const { return image[static_cast<std::size_t>(x - 1)]; }
  int size() const noexcept { return static_cast<int>(image.size()); }

  /// "[a,b,...]"
  std::string str() const;

  auto operator<=>(const Endomorphism&) const = default;
};

Endomorphism identity_endomorphism(int n);

bool is_endomorphism(const Quandle& q, std::span<const int> image);

/// All endomorphisms in lexicographic order of their images.
std::vector<Endomorphism> enumerate_endomorphisms(const Quandle& q);

/// (s o t)(x) = s(t(x))
Endomorphism compose(const Endomorphism& s, const Endomorphism& t);

/// Resolves the right divisor as a free function, mirroring the member.
inline int right_divide(const Quandle& q, int x, int y) { return q.right_divide(x, y); }

// ---------------------------------------------------------------------------
// Text formats

/// First line n, then n rows of n integers; '#' starts a comment.
Quandle parse_quandle(std::string_view text);
Quandle load_quandle(const std::filesystem::path& path);
std::string format_quandle(const Quandle& q);

/// Parses a single "[a,b,...]" list (whitespace tolerated).
Endomorphism parse_endomorphism(std::string_view text);

/// Either the keyword `all`, or bracket lists separated by newlines, ';',
/// ',' or whitespace.
/// Every entry is checked against q; a map that fails is reported as a
/// NotAnEndomorphism error. Duplicates are kept in input order.
std::vector<Endomorphism> parse_endomorphism_set(std::string_view text, const Quandle& q);

}  // namespace quiverknot
