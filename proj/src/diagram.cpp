#include "quiverknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "quiverknot/error.hpp"

namespace quiverknot {

namespace {

struct Occ {
  int token;
  int position;
  friend bool operator==(const Occ&, const Occ&) = default;
};

class UnionFind {
 public:
  int find(int x) {
    auto it = parent_.try_emplace(x, x).first;
    if (it->second == x) return x;
    const int root = find(it->second);
    parent_[x] = root;
    return root;
  }
  void unite(int a, int b) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) parent_[ra] = rb;
  }

 private:
  std::map<int, int> parent_;
};

[[noreturn]] void conflict(int label, const std::string& why) {
  throw Error(ErrorKind::orientation_conflict,
              "orientation conflict on the component through edge " + std::to_string(label) + ": " + why);
}

}  // namespace

int LinkDiagram::virtual_crossing_count() const noexcept {
  return static_cast<int>(std::count_if(tokens_.begin(), tokens_.end(),
                                        [](const PdToken& t) { return t.kind == PdKind::virtual_crossing; }));
}

int LinkDiagram::arc_of_label(int label) const {
  auto it = label_arc_.find(label);
  if (it == label_arc_.end())
    throw Error(ErrorKind::invalid_input, "no edge label " + std::to_string(label) + " in diagram");
  return it->second;
}

int LinkDiagram::component_of_label(int label) const {
  auto it = label_component_.find(label);
  if (it == label_component_.end())
    throw Error(ErrorKind::invalid_input, "no edge label " + std::to_string(label) + " in diagram");
  return it->second;
}

std::string LinkDiagram::to_pd() const {
  std::string out;
  for (const auto& t : tokens_) {
    if (!out.empty()) out += ' ';
    if (t.kind == PdKind::loop) {
      out += "O(" + std::to_string(t.labels[0]) + ')';
      continue;
    }
    out += t.kind == PdKind::virtual_crossing ? "V(" : (t.sign > 0 ? "X+(" : "X-(");
    for (int p = 0; p < 4; ++p) out += std::to_string(t.labels[p]) + (p < 3 ? "," : ")");
  }
  return out;
}

LinkDiagram build_diagram(std::vector<PdToken> tokens) {
  if (tokens.empty()) tokens.push_back(PdToken{PdKind::loop, {1, 0, 0, 0}, 0});

  std::map<int, std::vector<Occ>> occ;
  std::set<int> loop_labels;
  for (int t = 0; t < static_cast<int>(tokens.size()); ++t) {
    const auto& tok = tokens[t];
    const int width = tok.kind == PdKind::loop ? 1 : 4;
    for (int p = 0; p < width; ++p) {
      if (tok.labels[p] < 1)
        throw Error(ErrorKind::malformed_token, "edge labels must be positive integers");
      occ[tok.labels[p]].push_back({t, p});
    }
    if (tok.kind == PdKind::loop) loop_labels.insert(tok.labels[0]);
    if (tok.kind != PdKind::classical && tok.sign != 0)
      throw Error(ErrorKind::malformed_token, "only classical crossings carry a sign");
  }
  for (const auto& [label, where] : occ) {
    const std::size_t expected = loop_labels.count(label) ? 1 : 2;
    if (where.size() != expected)
      throw Error(ErrorKind::open_diagram, "edge label " + std::to_string(label) + " appears " +
                                               std::to_string(where.size()) + " time(s), expected " +
                                               std::to_string(expected));
  }

  auto label_at = [&](Occ o) { return tokens[o.token].labels[o.position]; };

  LinkDiagram d;
  std::vector<std::vector<int>> component_labels;
  std::set<int> visited;

  for (const auto& [l0, where] : occ) {
    if (visited.count(l0)) continue;
    if (loop_labels.count(l0)) {
      visited.insert(l0);
      component_labels.push_back({l0});
      continue;
    }

    // Walk the strand once in an arbitrary direction, entering crossings.
    std::vector<Occ> passages;
    const Occ start = where[0];
    Occ cur = start;
    do {
      passages.push_back(cur);
      visited.insert(label_at(cur));
      const Occ exit{cur.token, (cur.position + 2) % 4};
      const auto& next = occ.at(label_at(exit));
      cur = next[0] == exit ? next[1] : next[0];
      if (passages.size() > 4 * tokens.size()) conflict(l0, "strand does not close up");
    } while (!(cur == start));

    int forward = 0;
    int backward = 0;
    for (Occ p : passages) {
      const auto& tok = tokens[p.token];
      if (tok.kind != PdKind::classical) continue;
      if (p.position == 0) {
        ++forward;
      } else if (p.position == 2) {
        ++backward;
      } else if (tok.sign != 0) {
        ((p.position == 3) == (tok.sign > 0) ? forward : backward)++;
      }
    }
    if (forward && backward) conflict(l0, "incoming under-edges disagree with the traversal direction");
    bool reversed = backward > 0;
    if (!forward && !backward) {
      // Only over or virtual passages: fall back on label succession.
      int up = 0;
      int down = 0;
      for (Occ p : passages) {
        const int in = label_at(p);
        const int out = label_at({p.token, (p.position + 2) % 4});
        up += out == in + 1;
        down += in == out + 1;
      }
      reversed = down > up;
    }
    if (reversed) {
      std::reverse(passages.begin(), passages.end());
      for (auto& p : passages) p.position = (p.position + 2) % 4;
    }

    std::vector<int> labels;
    for (Occ p : passages) {
      labels.push_back(label_at(p));
      d.head_[label_at(p)] = {p.token, p.position};
      auto& tok = tokens[p.token];
      if (tok.kind == PdKind::classical && (p.position == 1 || p.position == 3)) {
        const int sign = p.position == 3 ? 1 : -1;
        if (tok.sign != 0 && tok.sign != sign) conflict(l0, "explicit crossing sign disagrees with orientation");
        tok.sign = sign;
      }
    }
    component_labels.push_back(std::move(labels));
  }

  UnionFind uf;
  for (const auto& tok : tokens) {
    if (tok.kind == PdKind::classical) {
      uf.unite(tok.labels[1], tok.labels[3]);
    } else if (tok.kind == PdKind::virtual_crossing) {
      uf.unite(tok.labels[0], tok.labels[2]);
      uf.unite(tok.labels[1], tok.labels[3]);
    }
  }
  std::map<int, int> root_arc;
  for (const auto& tok : tokens) {
    const int width = tok.kind == PdKind::loop ? 1 : 4;
    for (int p = 0; p < width; ++p) {
      const int root = uf.find(tok.labels[p]);
      auto [it, fresh] = root_arc.try_emplace(root, static_cast<int>(root_arc.size()) + 1);
      d.label_arc_[tok.labels[p]] = it->second;
    }
  }
  d.arc_count_ = static_cast<int>(root_arc.size());

  for (const auto& tok : tokens) {
    if (tok.kind != PdKind::classical) continue;
    const auto& a = d.label_arc_;
    d.crossings_.push_back(Crossing{tok.sign, a.at(tok.labels[0]), a.at(tok.labels[1]), a.at(tok.labels[2]),
                                    a.at(tok.labels[3])});
  }

  std::sort(component_labels.begin(), component_labels.end(),
            [](const auto& x, const auto& y) {
              return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
            });
  for (int k = 0; k < static_cast<int>(component_labels.size()); ++k) {
    std::vector<int> arcs;
    for (int label : component_labels[k]) {
      d.label_component_[label] = k;
      const int arc = d.label_arc_.at(label);
      if (std::find(arcs.begin(), arcs.end(), arc) == arcs.end()) arcs.push_back(arc);
    }
    d.components_.push_back(std::move(arcs));
  }

  d.tokens_ = std::move(tokens);
  return d;
}

// ---------------------------------------------------------------------------

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  std::vector<PdToken> run() {
    std::vector<PdToken> out;
    while (skip_separators(), pos_ < text_.size()) out.push_back(token());
    return out;
  }

 private:
  void skip_separators() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::malformed_token, "PD code, offset " + std::to_string(pos_) + ": " + why);
  }

  PdToken token() {
    PdToken tok;
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_])));
    int width = 4;
    switch (head) {
      case 'X': tok.kind = PdKind::classical; break;
      case 'V': tok.kind = PdKind::virtual_crossing; break;
      case 'O': tok.kind = PdKind::loop; width = 1; break;
      default: fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    ++pos_;
    if (tok.kind == PdKind::classical) {
      if (text_.substr(pos_, 1) == "+") {
        tok.sign = 1;
        pos_ += 1;
      } else if (text_.substr(pos_, 1) == "-") {
        tok.sign = -1;
        pos_ += 1;
      } else if (text_.substr(pos_, 3) == "−") {
        tok.sign = -1;
        pos_ += 3;
      }
    }
    if (pos_ >= text_.size() || (text_[pos_] != '(' && text_[pos_] != '[')) fail("expected '(' or '['");
    const char close = text_[pos_] == '(' ? ')' : ']';
    ++pos_;
    std::vector<int> values;
    while (true) {
      while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
        ++pos_;
      if (pos_ >= text_.size()) fail("unterminated token");
      if (text_[pos_] == close) {
        ++pos_;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a positive integer label");
      long v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_++] - '0');
        if (v > 1'000'000'000) fail("label too large");
      }
      values.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(values.size()) != width)
      fail("expected " + std::to_string(width) + " labels, got " + std::to_string(values.size()));
    std::copy(values.begin(), values.end(), tok.labels.begin());
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkDiagram parse_pd(std::string_view text) { return build_diagram(Tokenizer(text).run()); }

std::vector<Relation> relations(const LinkDiagram& d) {
  std::vector<Relation> out;
  out.reserve(d.crossings().size());
  for (const auto& c : d.crossings()) out.push_back(Relation{c.under_out, c.under_in, c.over, c.sign});
  return out;
}

LinkDiagram reverse_component(const LinkDiagram& d, int k) {
  if (k < 0 || k >= d.component_count())
    throw Error(ErrorKind::bad_component_index, "component index " + std::to_string(k) + " out of range 0.." +
                                                    std::to_string(d.component_count() - 1));
  std::vector<PdToken> tokens = d.tokens();
  for (auto& tok : tokens) {
    if (tok.kind != PdKind::classical) continue;
    const bool under = d.component_of_label(tok.labels[0]) == k;
    const bool over = d.component_of_label(tok.labels[1]) == k;
    if (under) {
      const auto [a, b, c, e] = tok.labels;
      tok.labels = {c, e, a, b};
    }
    if (under != over) tok.sign = -tok.sign;
  }
  LinkDiagram out = build_diagram(std::move(tokens));
  out.name = d.name;
  return out;
}

LinkDiagram add_kink(const LinkDiagram& d, int arc, int sign) {
  if (arc < 1 || arc > d.arc_count())
    throw Error(ErrorKind::bad_arc, "arc " + std::to_string(arc) + " out of range 1.." + std::to_string(d.arc_count()));
  if (sign != 1 && sign != -1) throw Error(ErrorKind::invalid_input, "kink sign must be +1 or -1");

  std::vector<PdToken> tokens = d.tokens();
  int max_label = 0;
  int edge = 0;
  int edge_token = -1;
  for (int t = 0; t < static_cast<int>(tokens.size()); ++t) {
    const int width = tokens[t].kind == PdKind::loop ? 1 : 4;
    for (int p = 0; p < width; ++p) {
      const int label = tokens[t].labels[p];
      max_label = std::max(max_label, label);
      if (edge == 0 && d.arc_of_label(label) == arc) {
        edge = label;
        edge_token = t;
      }
    }
  }
  const int loop_label = max_label + 1;
  int exit_label = max_label + 2;
  if (tokens[edge_token].kind == PdKind::loop) {
    // The kink closes the loop on itself.
    tokens.erase(tokens.begin() + edge_token);
    exit_label = edge;
  } else {
    const auto head = d.head_.at(edge);
    tokens[head.token].labels[head.position] = exit_label;
  }
  // Under-first kink: the strand passes under, loops round and crosses over
  // itself. Over runs d -> b for a positive crossing, b -> d for a negative one.
  PdToken kink{PdKind::classical, {}, sign};
  kink.labels = sign > 0 ? std::array<int, 4>{edge, exit_label, loop_label, loop_label}
                         : std::array<int, 4>{edge, loop_label, loop_label, exit_label};
  tokens.push_back(kink);
  LinkDiagram out = build_diagram(std::move(tokens));
  out.name = d.name;
  return out;
}

}  // namespace quiverknot
