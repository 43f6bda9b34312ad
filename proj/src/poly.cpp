#include "quiverknot/poly.hpp"

#include <cctype>
#include <vector>

#include "json.hpp"
#include "quiverknot/error.hpp"

namespace quiverknot {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "polynomial coefficient overflow");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "polynomial coefficient overflow");
  return r;
}

void UniPoly::add_term(int exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(exponent, 0);
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Coefficient UniPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

Coefficient UniPoly::evaluate(Coefficient x) const {
  Coefficient sum = 0;
  for (auto [e, c] : terms_) {
    Coefficient power = 1;
    for (int i = 0; i < e; ++i) power = checked_mul(power, x);
    sum = checked_add(sum, checked_mul(c, power));
  }
  return sum;
}

void BiPoly::add_term(int s_exp, int t_exp, Coefficient c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace({s_exp, t_exp}, 0);
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Coefficient BiPoly::coefficient(int s_exp, int t_exp) const {
  auto it = terms_.find({s_exp, t_exp});
  return it == terms_.end() ? 0 : it->second;
}

UniPoly BiPoly::at_s(Coefficient value) const {
  UniPoly out('t');
  for (const auto& [exps, c] : terms_) {
    Coefficient power = 1;
    for (int i = 0; i < exps.first; ++i) power = checked_mul(power, value);
    out.add_term(exps.second, checked_mul(c, power));
  }
  return out;
}

Coefficient BiPoly::coefficient_sum() const {
  Coefficient sum = 0;
  for (const auto& [exps, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

BiPoly two_var_indegree_poly(const ColoringQuiver& q) {
  BiPoly p;
  for (const auto& e : q.edges()) p.add_term(q.in_degree(e.source), q.in_degree(e.target), 1);
  return p;
}

UniPoly indegree_poly_edge_sum(const ColoringQuiver& q) {
  UniPoly p('t');
  for (const auto& e : q.edges()) p.add_term(q.in_degree(e.target), 1);
  return p;
}

UniPoly indegree_poly_vertex_sum(const ColoringQuiver& q) {
  UniPoly p('t');
  for (int v = 0; v < q.vertex_count(); ++v) p.add_term(q.in_degree(v), 1);
  return p;
}

UniPoly maximal_path_poly(std::span<const Trail> trails) {
  UniPoly p('q');
  for (const auto& t : trails) p.add_term(static_cast<int>(t.length()), 1);
  return p;
}

// ---------------------------------------------------------------------------

namespace {

void append_power(std::string& out, char var, int e, bool keep_zero) {
  if (e == 0 && !keep_zero) return;
  out += var;
  if (e != 1) out += '^' + std::to_string(e);
}

// Appends one term given its rendered monomial; `first` controls the
// leading sign form.
void append_term(std::string& out, Coefficient c, const std::string& monomial, bool first, bool spaced) {
  const bool negative = c < 0;
  const Coefficient mag = negative ? -c : c;
  if (first) {
    if (negative) out += '-';
  } else {
    out += spaced ? (negative ? " - " : " + ") : (negative ? "-" : "+");
  }
  if (mag != 1 || monomial.empty()) out += std::to_string(mag);
  out += monomial;
}

}  // namespace

std::string format_poly(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : p.terms()) {
    std::string mono;
    append_power(mono, p.variable(), e, false);
    append_term(out, c, mono, first, true);
    first = false;
  }
  return out;
}

std::string format_poly(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, c] : p.terms()) {
    std::string mono;
    append_power(mono, 's', exps.first, false);
    append_power(mono, 't', exps.second, false);
    append_term(out, c, mono, first, true);
    first = false;
  }
  return out;
}

std::string format_poly_verbatim(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string mono;
    append_power(mono, 's', it->first.first, true);
    append_power(mono, 't', it->first.second, false);
    append_term(out, it->second, mono, first, false);
    first = false;
  }
  return out;
}

namespace {

// Parses "c v^e w^f ..." sums. Exponents for variables not in `vars` are
// rejected.
class PolyReader {
 public:
  PolyReader(std::string_view text, std::string_view vars) : text_(text), vars_(vars) {}

  template <class Sink>
  void run(Sink&& sink) {
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Coefficient c = 1;
      bool has_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c = number();
        has_coeff = true;
      }
      std::vector<int> exps(vars_.size(), 0);
      bool has_var = false;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
        const auto slot = vars_.find(peek());
        if (slot == std::string_view::npos) fail(std::string("unexpected variable '") + peek() + "'");
        ++pos_;
        int e = 1;
        skip();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip();
          const bool braced = !at_end() && peek() == '{';
          if (braced) ++pos_;
          e = static_cast<int>(number());
          if (braced) {
            if (at_end() || peek() != '}') fail("expected '}'");
            ++pos_;
          }
        }
        exps[slot] += e;
        has_var = true;
        skip();
      }
      if (!has_coeff && !has_var) fail("empty term");
      sink(exps, sign * c);
      skip();
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*' || peek() == '.')) ++pos_;
  }
  Coefficient number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    Coefficient v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      v = checked_add(checked_mul(v, 10), peek() - '0'), ++pos_;
    skip();
    return v;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::invalid_input, "polynomial '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::string_view vars_;
  std::size_t pos_ = 0;
};

}  // namespace

UniPoly parse_unipoly(std::string_view text, char variable) {
  UniPoly p(variable);
  const char vars[2] = {variable, '\0'};
  PolyReader(text, std::string_view(vars, 1)).run([&](const std::vector<int>& e, Coefficient c) {
    p.add_term(e[0], c);
  });
  return p;
}

BiPoly parse_bipoly(std::string_view text) {
  BiPoly p;
  PolyReader(text, "st").run([&](const std::vector<int>& e, Coefficient c) { p.add_term(e[0], e[1], c); });
  return p;
}

std::string to_json(const BiPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [exps, c] : p.terms()) terms.push_back({{"s", exps.first}, {"t", exps.second}, {"c", c}});
  return nlohmann::ordered_json{{"terms", terms}}.dump();
}

std::string to_json(const UniPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  const std::string var(1, p.variable());
  for (auto [e, c] : p.terms()) terms.push_back({{var, e}, {"c", c}});
  return nlohmann::ordered_json{{"terms", terms}}.dump();
}

}  // namespace quiverknot
