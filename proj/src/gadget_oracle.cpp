#include "icmc/gadget_oracle.hpp"

#include <algorithm>
#include <set>

#include "icmc/maxcut.hpp"

namespace icmc {

MicroSetup micro_setup(std::uint64_t x, std::uint64_t y, std::uint64_t wl, std::uint64_t sl, std::uint64_t cov) {
  MicroSetup s;
  s.gadget = append_gadget(s.model, Rat(0), x, y);
  if (wl) s.model.classes.push_back(IntervalClass::twins(Rat(-1), Rat(0), wl));
  if (sl) s.model.classes.push_back(IntervalClass::twins(Rat(-1), Rat(2), sl));
  if (cov) {
    s.coverers.push_back(s.model.size());
    s.model.classes.push_back(IntervalClass::twins(Rat(-1), Rat(7), cov));
  }
  const auto rs = respects_structure(s.model, s.gadget);
  if (!rs.ok) throw Error("micro setup does not respect the gadget");
  s.census = rs.census;
  s.conditions = well_valued(s.gadget, s.census);
  s.name = "(" + std::to_string(x) + "," + std::to_string(y) + ") wl=" + std::to_string(wl) +
           " sl=" + std::to_string(sl) + " cov=" + std::to_string(cov);
  return s;
}

GadgetOutcome check_gadget_materialized(const MicroSetup& s) {
  const auto mg = materialize(s.model, kBruteForceMaxVertices);
  const auto& h = s.gadget;
  std::uint64_t best = 0;
  const auto masks = all_maximum_cuts(mg.graph, &best);
  GadgetOutcome out;
  out.max_cut = best;
  out.maximum_cuts = masks.size();

  std::set<std::size_t> local(s.coverers.begin(), s.coverers.end());
  for (auto c : {h.ls, h.ll, h.rs, h.rl}) local.insert(c);
  const std::size_t v = mg.graph.vertex_count;

  for (const auto mask : masks) {
    auto side_of = [&](std::size_t vert) { return ((mask >> vert) & 1) ? Side::A : Side::B; };
    // side of a whole class, or nullopt when split
    auto class_side = [&](std::size_t cls) -> std::optional<Side> {
      std::optional<Side> seen;
      for (std::size_t u = 0; u < v; ++u) {
        if (mg.class_of[u] != cls) continue;
        if (seen && *seen != side_of(u)) return std::nullopt;
        seen = side_of(u);
      }
      return seen;
    };
    const auto ls = class_side(h.ls), ll = class_side(h.ll), rs = class_side(h.rs), rl = class_side(h.rl);
    const bool left_ok = ls && ll && *ls != *ll;
    const bool right_ok = rs && rl && *rs != *rl;
    if (!left_ok || !right_ok) out.shorts_opposite = false;
    if (!(left_ok && right_ok && *ls == *rl)) out.partitioned = false;

    std::uint64_t flipped = mask;
    for (std::size_t u = 0; u < v; ++u) {
      if (h.owns(mg.class_of[u])) flipped ^= std::uint64_t{1} << u;
    }
    auto local_cut = [&](std::uint64_t m) {
      std::uint64_t k = 0;
      for (const auto& [a, b] : mg.graph.edges) {
        if (!local.count(mg.class_of[a]) || !local.count(mg.class_of[b])) continue;
        if (((m >> a) & 1) != ((m >> b) & 1)) ++k;
      }
      return k;
    };
    if (local_cut(mask) != local_cut(flipped)) out.swap_indifferent = false;
  }
  return out;
}

namespace {

// Cut edges for per-class A-counts.
BigInt count_cut(const WeightedIntervalModel& m, const std::vector<std::uint64_t>& a,
                 const std::vector<std::pair<std::size_t, std::size_t>>& adjacent,
                 const std::set<std::size_t>* only = nullptr) {
  BigInt total = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (only && !only->count(c)) continue;
    if (!m.classes[c].is_points()) total += BigInt(a[c]) * BigInt(m.classes[c].mult - a[c]);
  }
  for (const auto& [x, y] : adjacent) {
    if (only && (!only->count(x) || !only->count(y))) continue;
    const BigInt ax = a[x], ay = a[y], bx = m.classes[x].mult - a[x], by = m.classes[y].mult - a[y];
    total += ax * by + bx * ay;
  }
  return total;
}

}  // namespace

GadgetOutcome check_gadget_by_counts(const MicroSetup& s) {
  const auto& m = s.model;
  const auto& h = s.gadget;
  std::vector<std::pair<std::size_t, std::size_t>> adjacent;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x + 1; y < m.size(); ++y) {
      const auto adj = class_adjacency(m.classes[x], m.classes[y]);
      if (adj == Adjacency::partial) throw Error("micro setup violates uniform adjacency");
      if (adj == Adjacency::full) adjacent.push_back({x, y});
    }
  }
  std::set<std::size_t> local(s.coverers.begin(), s.coverers.end());
  for (auto c : {h.ls, h.ll, h.rs, h.rl}) local.insert(c);

  std::vector<std::uint64_t> a(m.size(), 0);
  BigInt best = -1;
  std::vector<std::vector<std::uint64_t>> argmax;
  while (true) {
    const BigInt value = count_cut(m, a, adjacent);
    if (value > best) {
      best = value;
      argmax.clear();
    }
    if (value == best) argmax.push_back(a);
    std::size_t k = 0;
    while (k < a.size() && a[k] == m.classes[k].mult) a[k++] = 0;
    if (k == a.size()) break;
    ++a[k];
  }

  GadgetOutcome out;
  out.max_cut = static_cast<std::uint64_t>(best);
  out.maximum_cuts = argmax.size();
  for (const auto& v : argmax) {
    auto full = [&](std::size_t c) { return v[c] == m.classes[c].mult; };
    auto empty = [&](std::size_t c) { return v[c] == 0; };
    const bool left_ok = (full(h.ls) && empty(h.ll)) || (empty(h.ls) && full(h.ll));
    const bool right_ok = (full(h.rs) && empty(h.rl)) || (empty(h.rs) && full(h.rl));
    if (!left_ok || !right_ok) out.shorts_opposite = false;
    if (!(left_ok && right_ok && full(h.ls) == full(h.rl))) out.partitioned = false;
    auto swapped = v;
    for (auto c : {h.ls, h.ll, h.rs, h.rl}) swapped[c] = m.classes[c].mult - v[c];
    if (count_cut(m, v, adjacent, &local) != count_cut(m, swapped, adjacent, &local)) out.swap_indifferent = false;
  }
  return out;
}

}  // namespace icmc
