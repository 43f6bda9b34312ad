#include "quiverknot/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "quiverknot/error.hpp"

namespace quiverknot {

std::vector<std::vector<int>> Quandle::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int x = 1; x <= n_; ++x)
    for (int y = 1; y <= n_; ++y) out[x - 1][y - 1] = op(x, y);
  return out;
}

Quandle validate_quandle(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::invalid_input, "quandle table is empty");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::invalid_input, "quandle table is not square");
    for (int v : row) {
      if (v < 1 || v > n)
        throw Error(ErrorKind::invalid_input,
                    "quandle table entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
      flat.push_back(v);
    }
  }
  auto at = [&](int x, int y) { return flat[static_cast<std::size_t>(x - 1) * n + (y - 1)]; };

  for (int x = 1; x <= n; ++x)
    if (at(x, x) != x) throw AxiomViolation(Axiom::idempotency, {x});

  std::vector<int> rdiv(flat.size(), 0);
  for (int y = 1; y <= n; ++y) {
    std::vector<int> preimage(n + 1, 0);
    for (int x = 1; x <= n; ++x) {
      const int v = at(x, y);
      if (preimage[v] != 0) throw AxiomViolation(Axiom::right_invertibility, {y, preimage[v], x});
      preimage[v] = x;
      rdiv[static_cast<std::size_t>(v - 1) * n + (y - 1)] = x;
    }
  }

  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        if (at(at(x, y), z) != at(at(x, z), at(y, z)))
          throw AxiomViolation(Axiom::distributivity, {x, y, z});

  return Quandle(n, std::move(flat), std::move(rdiv));
}

Quandle dihedral(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "dihedral quandle needs n >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      // ((2y - x - 1) mod n) + 1, kept non-negative.
      const int r = ((2 * y - x - 1) % n + n) % n;
      rows[x - 1][y - 1] = r + 1;
    }
  return validate_quandle(rows);
}

Quandle trivial_quandle(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "trivial quandle needs n >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 1; x <= n; ++x) std::fill(rows[x - 1].begin(), rows[x - 1].end(), x);
  return validate_quandle(rows);
}

std::string Endomorphism::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image[i]);
  }
  return out + ']';
}

Endomorphism identity_endomorphism(int n) {
  Endomorphism id;
  id.image.resize(n);
  for (int x = 1; x <= n; ++x) id.image[x - 1] = x;
  return id;
}

bool is_endomorphism(const Quandle& q, std::span<const int> image) {
  const int n = q.size();
  if (static_cast<int>(image.size()) != n) return false;
  for (int v : image)
    if (v < 1 || v > n) return false;
  auto s = [&](int x) { return image[static_cast<std::size_t>(x - 1)]; };
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (s(q.op(x, y)) != q.op(s(x), s(y))) return false;
  return true;
}

std::vector<Endomorphism> enumerate_endomorphisms(const Quandle& q) {
  const int n = q.size();
  // checks[k]: pairs (x, y) whose constraint s(x|>y) = s(x)|>s(y) becomes
  // decidable exactly when s(k) is assigned, i.e. max(x, y, x|>y) == k.
  std::vector<std::vector<std::pair<int, int>>> checks(n + 1);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) checks[std::max({x, y, q.op(x, y)})].emplace_back(x, y);

  std::vector<Endomorphism> out;
  std::vector<int> image(n + 1, 0);
  auto consistent = [&](int k) {
    for (auto [x, y] : checks[k])
      if (image[q.op(x, y)] != q.op(image[x], image[y])) return false;
    return true;
  };
  auto extend = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.push_back(Endomorphism{std::vector<int>(image.begin() + 1, image.end())});
      return;
    }
    for (int v = 1; v <= n; ++v) {
      image[k] = v;
      if (consistent(k)) self(self, k + 1);
    }
    image[k] = 0;
  };
  extend(extend, 1);
  return out;
}

Endomorphism compose(const Endomorphism& s, const Endomorphism& t) {
  if (s.size() != t.size())
    throw Error(ErrorKind::invalid_input, "cannot compose maps of different sizes");
  Endomorphism out;
  out.image.reserve(t.image.size());
  for (int v : t.image) out.image.push_back(s(v));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string strip_comments(std::string_view text) {
  std::string out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    out += line;
    out += '\n';
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Quandle parse_quandle(std::string_view text) {
  std::istringstream in(strip_comments(text));
  int n = 0;
  if (!(in >> n) || n < 1) throw Error(ErrorKind::invalid_input, "quandle file: expected element count");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (auto& row : rows)
    for (auto& v : row)
      if (!(in >> v)) throw Error(ErrorKind::invalid_input, "quandle file: truncated table");
  std::string rest;
  if (in >> rest) throw Error(ErrorKind::invalid_input, "quandle file: trailing data '" + rest + "'");
  return validate_quandle(rows);
}

Quandle load_quandle(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open quandle file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quandle(buf.str());
}

std::string format_quandle(const Quandle& q) {
  std::ostringstream out;
  out << q.size() << '\n';
  for (const auto& row : q.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

Endomorphism parse_endomorphism(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw Error(ErrorKind::invalid_input, "expected bracket list, got '" + std::string(text) + "'");
  Endomorphism out;
  std::string body(text.substr(1, text.size() - 2));
  std::istringstream in(body);
  for (std::string item; std::getline(in, item, ',');) {
    auto t = trim(item);
    if (t.empty()) throw Error(ErrorKind::invalid_input, "empty entry in '" + std::string(text) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(std::string(t), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size())
      throw Error(ErrorKind::invalid_input, "bad entry '" + std::string(t) + "' in bracket list");
    out.image.push_back(v);
  }
  if (out.image.empty()) throw Error(ErrorKind::invalid_input, "empty bracket list");
  return out;
}

std::vector<Endomorphism> parse_endomorphism_set(std::string_view text, const Quandle& q) {
  const std::string cleaned = strip_comments(text);
  if (trim(cleaned) == "all") return enumerate_endomorphisms(q);

  std::vector<Endomorphism> out;
  std::string item;
  auto flush = [&] {
    if (trim(item).empty()) {
      item.clear();
      return;
    }
    Endomorphism e = parse_endomorphism(item);
    if (!is_endomorphism(q, e.image))
      throw Error(ErrorKind::not_an_endomorphism,
                  e.str() + " is not an endomorphism of the " + std::to_string(q.size()) +
                      "-element quandle");
    out.push_back(std::move(e));
    item.clear();
  };
  for (char c : cleaned) {
    if (c == ';' || c == '\n' || (c == ',' && trim(item).empty())) {
      flush();
    } else {
      item += c;
      if (c == ']') flush();
    }
  }
  flush();
  if (out.empty()) throw Error(ErrorKind::invalid_input, "endomorphism set is empty");
  return out;
}

}  // namespace quiverknot
