#include "icmc/interval_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace icmc {

bool intersects(const ClosedInterval& a, const ClosedInterval& b) {
  const Rat& lo = a.left < b.left ? b.left : a.left;
  const Rat& hi = a.right < b.right ? a.right : b.right;
  return lo <= hi;
}

std::string to_string(LabelKind kind) {
  switch (kind) {
    case LabelKind::none: return "none";
    case LabelKind::vertex_gadget: return "H";
    case LabelKind::edge_gadget: return "E";
    case LabelKind::link: return "L";
    case LabelKind::connector12: return "C12";
    case LabelKind::connector34: return "C34";
    case LabelKind::legacy_vertex: return "legacy_vertex";
    case LabelKind::legacy_edge: return "legacy_edge";
    case LabelKind::legacy_link_weak: return "legacy_link_weak";
    case LabelKind::legacy_link_strong: return "legacy_link_strong";
  }
  return "none";
}

std::string to_string(Group group) {
  switch (group) {
    case Group::none: return "none";
    case Group::left_short: return "LS";
    case Group::left_long: return "LL";
    case Group::right_short: return "RS";
    case Group::right_long: return "RL";
  }
  return "none";
}

LabelKind parse_label_kind(const std::string& text) {
  for (auto kind : {LabelKind::none, LabelKind::vertex_gadget, LabelKind::edge_gadget, LabelKind::link,
                    LabelKind::connector12, LabelKind::connector34, LabelKind::legacy_vertex,
                    LabelKind::legacy_edge, LabelKind::legacy_link_weak, LabelKind::legacy_link_strong}) {
    if (to_string(kind) == text) return kind;
  }
  throw Error("unknown label kind '" + text + "'");
}

Group parse_group(const std::string& text) {
  for (auto group : {Group::none, Group::left_short, Group::left_long, Group::right_short, Group::right_long}) {
    if (to_string(group) == text) return group;
  }
  throw Error("unknown label group '" + text + "'");
}

std::string describe(const Label& label) {
  std::ostringstream out;
  out << to_string(label.kind);
  switch (label.kind) {
    case LabelKind::vertex_gadget:
    case LabelKind::link:
    case LabelKind::legacy_link_weak:
    case LabelKind::legacy_link_strong:
      out << "(" << label.i << "," << label.j << ")";
      break;
    case LabelKind::legacy_vertex:
      out << "(" << label.i << ")";
      break;
    case LabelKind::edge_gadget:
    case LabelKind::connector12:
    case LabelKind::connector34:
    case LabelKind::legacy_edge:
      out << "(" << label.j << ")";
      break;
    case LabelKind::none:
      break;
  }
  if (label.group != Group::none) out << "." << to_string(label.group);
  return out.str();
}

IntervalClass IntervalClass::twins(Rat left, Rat right, std::uint64_t mult, Label label) {
  IntervalClass c;
  c.left = std::move(left);
  c.right = std::move(right);
  c.mult = mult;
  c.kind = ClassKind::twin_clique;
  c.label = label;
  return c;
}

IntervalClass IntervalClass::points(Rat left_open, Rat right_open, std::uint64_t mult, Label label) {
  IntervalClass c;
  c.left = left_open;
  c.right = right_open;
  c.mult = mult;
  c.kind = ClassKind::point_family;
  c.container = OpenInterval{std::move(left_open), std::move(right_open)};
  c.label = label;
  return c;
}

Rat IntervalClass::length() const {
  if (is_points()) return Rat(0);
  return right - left;
}

BigInt WeightedIntervalModel::total_multiplicity() const {
  BigInt total = 0;
  for (const auto& c : classes) total += c.mult;
  return total;
}

void WeightedIntervalModel::validate() const {
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& c = classes[k];
    const std::string where = "class " + std::to_string(k) + " (" + describe(c.label) + ")";
    if (c.mult == 0) throw Error(where + ": multiplicity must be positive");
    if (c.is_points()) {
      if (!c.container) throw Error(where + ": point family without container");
      if (!(c.container->left < c.container->right)) throw Error(where + ": empty point container");
      if (c.left != c.container->left || c.right != c.container->right) {
        throw Error(where + ": point family span must equal its container");
      }
    } else {
      if (c.container) throw Error(where + ": twin class must not carry a container");
      if (c.right < c.left) throw Error(where + ": left endpoint exceeds right endpoint");
    }
  }
}

Adjacency class_adjacency(const IntervalClass& a, const IntervalClass& b) {
  if (!a.is_points() && !b.is_points()) {
    return intersects(a.span(), b.span()) ? Adjacency::full : Adjacency::none;
  }
  if (a.is_points() && b.is_points()) {
    const auto& x = *a.container;
    const auto& y = *b.container;
    if (x.right <= y.left || y.right <= x.left) return Adjacency::none;
    return Adjacency::partial;
  }
  const IntervalClass& pts = a.is_points() ? a : b;
  const IntervalClass& seg = a.is_points() ? b : a;
  const auto& box = *pts.container;
  if (seg.left <= box.left && box.right <= seg.right) return Adjacency::full;
  if (seg.right <= box.left || box.right <= seg.left) return Adjacency::none;
  return Adjacency::partial;
}

bool class_contained_in(const IntervalClass& inner, const IntervalClass& outer) {
  if (outer.is_points()) return false;
  return outer.left <= inner.left && inner.right <= outer.right;
}

std::set<Rat> length_set(const WeightedIntervalModel& m) {
  std::set<Rat> lengths;
  for (const auto& c : m.classes) lengths.insert(c.length());
  return lengths;
}

std::size_t interval_count(const WeightedIntervalModel& m) {
  if (m.empty()) throw Error("empty model");
  return length_set(m).size();
}

namespace {

// inner strictly inside outer on both sides, for every member of inner
bool strictly_nested(const IntervalClass& inner, const IntervalClass& outer) {
  if (outer.is_points()) return false;
  if (inner.is_points()) {
    return outer.left <= inner.container->left && inner.container->right <= outer.right;
  }
  return outer.left < inner.left && inner.right < outer.right;
}

}  // namespace

std::vector<std::size_t> longest_nesting_chain(const WeightedIntervalModel& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  std::vector<Rat> lengths(n);
  for (std::size_t k = 0; k < n; ++k) lengths[k] = m.classes[k].length();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });

  // Strict nesting strictly increases length, so ascending length is a
  // topological order of the containment relation.
  std::vector<std::size_t> best(n, 1);
  std::vector<std::size_t> prev(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t outer = order[a];
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t inner = order[b];
      if (best[inner] + 1 > best[outer] && strictly_nested(m.classes[inner], m.classes[outer])) {
        best[outer] = best[inner] + 1;
        prev[outer] = inner;
      }
    }
  }
  std::size_t top = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (best[k] > best[top]) top = k;
  }
  std::vector<std::size_t> chain;
  for (std::size_t k = top; k != n; k = prev[k]) chain.push_back(k);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::size_t nesting_chain_lower_bound(const WeightedIntervalModel& m) {
  return longest_nesting_chain(m).size();
}

MaterializedGraph materialize(const WeightedIntervalModel& m, std::size_t limit) {
  if (m.total_multiplicity() > limit) throw Error("model too large to materialize");
  MaterializedGraph out;
  for (std::size_t c = 0; c < m.size(); ++c) {
    const auto& cls = m.classes[c];
    for (std::uint64_t k = 1; k <= cls.mult; ++k) {
      if (cls.is_points()) {
        const auto& box = *cls.container;
        Rat x = box.left + (box.right - box.left) * Rat(BigInt(k), BigInt(cls.mult + 1));
        out.intervals.push_back({x, x});
      } else {
        out.intervals.push_back(cls.span());
      }
      out.class_of.push_back(c);
    }
  }
  const std::size_t v = out.intervals.size();
  out.graph.vertex_count = v;
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      if (intersects(out.intervals[a], out.intervals[b])) {
        out.graph.edges.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
      }
    }
  }
  return out;
}

std::string to_dimacs(const EdgeList& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count << " " << g.edges.size() << "\n";
  for (const auto& [u, v] : g.edges) out << "e " << (u + 1) << " " << (v + 1) << "\n";
  return out.str();
}

}  // namespace icmc
