#include "quiverknot/coloring.hpp"

#include "quiverknot/error.hpp"

namespace quiverknot {

std::string Coloring::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(colors[i]);
  }
  return out + ')';
}

bool satisfies_relations(const Coloring& c, const std::vector<Relation>& rels, const Quandle& q) {
  for (const auto& r : rels) {
    const bool ok = r.sign > 0 ? c[r.out_arc] == q.op(c[r.in_arc], c[r.over_arc])
                               : c[r.in_arc] == q.op(c[r.out_arc], c[r.over_arc]);
    if (!ok) return false;
  }
  return true;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const LinkDiagram& d, const Quandle& q)
      : q_(q), rels_(relations(d)), arcs_(d.arc_count()), color_(arcs_ + 1, 0), touching_(arcs_ + 1) {
    for (int i = 0; i < static_cast<int>(rels_.size()); ++i) {
      const auto& r = rels_[i];
      for (int a : {r.out_arc, r.in_arc, r.over_arc}) {
        auto& list = touching_[a];
        if (list.empty() || list.back() != i) list.push_back(i);
      }
    }
  }

  std::vector<Coloring> run() {
    search(1);
    return std::move(found_);
  }

 private:
  // Assigns arc := v and propagates. Every arc colored here is pushed on
  // trail_ so the caller can undo; returns false on a contradiction.
  bool assign(int arc, int v) {
    color_[arc] = v;
    trail_.push_back(arc);
    std::vector<int> queue{arc};
    while (!queue.empty()) {
      const int a = queue.back();
      queue.pop_back();
      for (int ri : touching_[a]) {
        const auto& r = rels_[ri];
        const int out = color_[r.out_arc];
        const int in = color_[r.in_arc];
        const int over = color_[r.over_arc];
        if (!over) continue;
        // Positive: out = in |> over. Negative: in = out |> over.
        int forced_arc = 0;
        int forced = 0;
        if (r.sign > 0) {
          if (in && out) {
            if (out != q_.op(in, over)) return false;
          } else if (in) {
            forced_arc = r.out_arc, forced = q_.op(in, over);
          } else if (out) {
            forced_arc = r.in_arc, forced = q_.right_divide(out, over);
          }
        } else {
          if (in && out) {
            if (in != q_.op(out, over)) return false;
          } else if (out) {
            forced_arc = r.in_arc, forced = q_.op(out, over);
          } else if (in) {
            forced_arc = r.out_arc, forced = q_.right_divide(in, over);
          }
        }
        if (forced_arc) {
          if (color_[forced_arc] && color_[forced_arc] != forced) return false;
          if (!color_[forced_arc]) {
            color_[forced_arc] = forced;
            trail_.push_back(forced_arc);
            queue.push_back(forced_arc);
          }
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      color_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  void search(int from) {
    int arc = from;
    while (arc <= arcs_ && color_[arc]) ++arc;
    if (arc > arcs_) {
      Coloring c{std::vector<int>(color_.begin() + 1, color_.end())};
      if (satisfies_relations(c, rels_, q_)) found_.push_back(std::move(c));
      return;
    }
    for (int v = 1; v <= q_.size(); ++v) {
      const std::size_t mark = trail_.size();
      if (assign(arc, v)) search(arc + 1);
      undo_to(mark);
    }
  }

  const Quandle& q_;
  std::vector<Relation> rels_;
  int arcs_;
  std::vector<int> color_;  // 0 = unassigned
  std::vector<std::vector<int>> touching_;
  std::vector<int> trail_;
  std::vector<Coloring> found_;
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const Quandle& q) {
  return ColoringSearch(d, q).run();
}

std::uint64_t counting_invariant(const LinkDiagram& d, const Quandle& q) {
  return enumerate_colorings(d, q).size();
}

Coloring apply_endo(const Coloring& c, const Endomorphism& s) {
  Coloring out;
  out.colors.reserve(c.colors.size());
  for (int v : c.colors) out.colors.push_back(s(v));
  return out;
}

std::vector<Coloring> brute_force_colorings(const LinkDiagram& d, const Quandle& q, std::uint64_t cap) {
  const int n = q.size();
  const int m = d.arc_count();
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > cap / static_cast<std::uint64_t>(n)) throw CapExceeded("brute-force coloring search", cap);
    total *= static_cast<std::uint64_t>(n);
  }
  if (total > cap) throw CapExceeded("brute-force coloring search", cap);

  const auto rels = relations(d);
  std::vector<Coloring> out;
  Coloring c{std::vector<int>(m, 1)};
  for (std::uint64_t k = 0; k < total; ++k) {
    if (satisfies_relations(c, rels, q)) out.push_back(c);
    // Odometer with the last arc fastest, so output is lexicographic.
    for (int i = m - 1; i >= 0; --i) {
      if (++c.colors[i] <= n) break;
      c.colors[i] = 1;
    }
  }
  return out;
}

}  // namespace quiverknot
