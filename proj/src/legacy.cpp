#include "icmc/legacy.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace icmc {

ParameterSet legacy_parameters(std::size_t n) {
  check_even_order(n);
  ParameterSet ps;
  ps.q = 200 * static_cast<std::uint64_t>(n) * n * n + 1;
  ps.p = 2 * ps.q + 7 * n;
  ps.qe = 10 * static_cast<std::uint64_t>(n) * n + 1;
  ps.pe = 2 * ps.qe + 7 * n;
  return ps;
}

BigInt legacy_size(std::size_t n_) {
  const ParameterSet ps = legacy_parameters(n_);
  const BigInt n = n_, m = 3 * n / 2;
  return n * (2 * BigInt(ps.p) + 2 * BigInt(ps.q)) + m * (2 * BigInt(ps.pe) + 2 * BigInt(ps.qe)) + 4 * m;
}

BigInt legacy_size_polynomial(std::size_t n_) {
  const BigInt n = n_;
  return 1200 * n * n * n * n + 90 * n * n * n + 25 * n * n + 21 * n;
}

std::size_t LegacyModel::link_of(int i, int j) const {
  const auto [h, h2] = endpoints.at(static_cast<std::size_t>(j));
  if (i == h) return weak_links.at(static_cast<std::size_t>(j));
  if (i == h2) return strong_links.at(static_cast<std::size_t>(j));
  throw Error("vertex " + std::to_string(i) + " is not an endpoint of edge " + std::to_string(j));
}

namespace {

const Rat kHalf = make_rat(1, 2);
const Rat kEighth = make_rat(1, 8);
const Rat kQuarter = make_rat(1, 4);
const Rat kStrongOverhang = make_rat(3, 4);

GrainedGadget push_cell(WeightedIntervalModel& m, Label base, std::uint64_t x, std::uint64_t y, const Rat& at,
                        const Rat& ls_lo, const Rat& ls_hi) {
  GrainedGadget h;
  h.x = x;
  h.y = y;
  auto tagged = [&](Group g) {
    Label l = base;
    l.group = g;
    return l;
  };
  h.ll = m.classes.size();
  m.classes.push_back(IntervalClass::twins(at, at + kHalf, y, tagged(Group::left_long)));
  h.ls = m.classes.size();
  m.classes.push_back(IntervalClass::points(ls_lo, ls_hi, x, tagged(Group::left_short)));
  h.rl = m.classes.size();
  m.classes.push_back(IntervalClass::twins(at + kHalf, at + 1, y, tagged(Group::right_long)));
  h.rs = m.classes.size();
  m.classes.push_back(IntervalClass::points(at + kHalf, at + 1, x, tagged(Group::right_short)));
  return h;
}

// Edge cell positions. The weak link of e_j has length y_j - x_h - 1 and the
// strong one y_j - x_h' - 3/4.
std::vector<Rat> place_edges(const std::vector<Rat>& x, const std::vector<std::pair<int, int>>& ends,
                             LegacyLayout layout, int n) {
  std::vector<Rat> y(ends.size());
  std::set<Rat> lengths;
  Rat floor = x[static_cast<std::size_t>(n)] + 2;
  for (std::size_t j = 1; j < ends.size(); ++j) {
    const auto [h, h2] = ends[j];
    const Rat& xh = x[static_cast<std::size_t>(h)];
    const Rat& xh2 = x[static_cast<std::size_t>(h2)];
    Rat best = floor;
    if (layout == LegacyLayout::length_sharing) {
      auto fresh = [&](const Rat& at) {
        return int(!lengths.count(Rat(at - xh - 1))) + int(!lengths.count(Rat(at - xh2 - kStrongOverhang)));
      };
      int best_fresh = fresh(best);
      for (const Rat& len : lengths) {
        for (const Rat& at : std::array<Rat, 2>{Rat(len + xh + 1), Rat(len + xh2 + kStrongOverhang)}) {
          if (at < floor) continue;
          const int f = fresh(at);
          if (f < best_fresh || (f == best_fresh && at < best)) {
            best = at;
            best_fresh = f;
          }
        }
      }
    }
    y[j] = best;
    lengths.insert(best - xh - 1);
    lengths.insert(best - xh2 - kStrongOverhang);
    floor = best + 2;
  }
  return y;
}

}  // namespace

LegacyModel legacy_build(const CubicInstance& inst, LegacyLayout layout) {
  return legacy_build(inst, legacy_parameters(inst.n()), layout);
}

LegacyModel legacy_build(const CubicInstance& inst, const ParameterSet& params, LegacyLayout layout) {
  inst.validate();
  LegacyModel lm;
  lm.instance = inst;
  lm.params = params;
  lm.layout = layout;
  const int n = lm.n(), m = lm.m();
  const auto pos = inst.vertex_positions();
  lm.endpoints.assign(static_cast<std::size_t>(m + 1), {0, 0});
  for (int j = 1; j <= m; ++j) {
    const auto [u, v] = inst.graph.edges[inst.pi_e[static_cast<std::size_t>(j - 1)]];
    lm.endpoints[static_cast<std::size_t>(j)] = {std::min(pos[u], pos[v]), std::max(pos[u], pos[v])};
  }
  lm.vertex_x.assign(static_cast<std::size_t>(n + 1), Rat(0));
  for (int i = 1; i <= n; ++i) lm.vertex_x[static_cast<std::size_t>(i)] = Rat(2 * (i - 1));
  lm.edge_y = place_edges(lm.vertex_x, lm.endpoints, layout, n);

  auto& model = lm.model;
  lm.vertex_gadgets.resize(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i) {
    const Rat& at = lm.vertex_x[static_cast<std::size_t>(i)];
    lm.vertex_gadgets[static_cast<std::size_t>(i)] =
        push_cell(model, Label{LabelKind::legacy_vertex, i, 0, Group::none}, params.p, params.q, at, at, at + kHalf);
  }
  lm.edge_gadgets.resize(static_cast<std::size_t>(m + 1));
  lm.weak_links.assign(static_cast<std::size_t>(m + 1), 0);
  lm.strong_links.assign(static_cast<std::size_t>(m + 1), 0);
  for (int j = 1; j <= m; ++j) {
    const Rat& at = lm.edge_y[static_cast<std::size_t>(j)];
    lm.edge_gadgets[static_cast<std::size_t>(j)] = push_cell(model, Label{LabelKind::legacy_edge, 0, j, Group::none},
                                                             params.pe, params.qe, at, at + kEighth, at + kQuarter);
  }
  for (int j = 1; j <= m; ++j) {
    const auto [h, h2] = lm.endpoints[static_cast<std::size_t>(j)];
    const Rat& at = lm.edge_y[static_cast<std::size_t>(j)];
    lm.weak_links[static_cast<std::size_t>(j)] = model.size();
    model.classes.push_back(IntervalClass::twins(lm.vertex_x[static_cast<std::size_t>(h)] + 1, at, 2,
                                                 Label{LabelKind::legacy_link_weak, h, j, Group::none}));
    lm.strong_links[static_cast<std::size_t>(j)] = model.size();
    model.classes.push_back(IntervalClass::twins(lm.vertex_x[static_cast<std::size_t>(h2)] + 1, at + kQuarter, 2,
                                                 Label{LabelKind::legacy_link_strong, h2, j, Group::none}));
  }
  model.validate();
  return lm;
}

StructureReport legacy_verify(const LegacyModel& lm) {
  StructureReport report;
  const auto& model = lm.model;
  const int n = lm.n(), m = lm.m();
  auto add = [&](std::string name, std::string subject, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), std::move(subject), ok, std::move(detail)});
  };
  auto name_of = [&](std::size_t k) { return describe(model.classes[k].label); };
  auto gadget_name = [&](const GrainedGadget& h) {
    Label l = model.classes[h.ll].label;
    l.group = Group::none;
    return describe(l);
  };

  std::size_t partial = 0;
  for (std::size_t a = 0; a < model.size(); ++a)
    for (std::size_t b = a + 1; b < model.size(); ++b)
      if (class_adjacency(model.classes[a], model.classes[b]) == Adjacency::partial) ++partial;
  add("uniform_adjacency", "model", partial == 0, std::to_string(partial) + " partial pairs");

  std::vector<const GrainedGadget*> gadgets;
  for (int i = 1; i <= n; ++i) gadgets.push_back(&lm.vertex_gadgets[static_cast<std::size_t>(i)]);
  for (int j = 1; j <= m; ++j) gadgets.push_back(&lm.edge_gadgets[static_cast<std::size_t>(j)]);
  for (const auto* h : gadgets) {
    const auto shape = gadget_shape_error(model, *h);
    add("gadget_shape", gadget_name(*h), !shape, shape.value_or(""));
    const auto rs = respects_structure(model, *h);
    add("respects_structure", gadget_name(*h), rs.ok, rs.offending ? name_of(*rs.offending) : "");
  }

  auto expect = [&](const std::string& check, std::size_t cls, const GrainedGadget& h, Relation want) {
    const Relation got = classify(model.classes[cls], model, h);
    add(check, name_of(cls) + " vs " + gadget_name(h), got == want,
        got == want ? "" : "expected " + to_string(want) + ", got " + to_string(got));
  };
  for (int j = 1; j <= m; ++j) {
    const auto [h, h2] = lm.endpoints[static_cast<std::size_t>(j)];
    for (int side = 0; side < 2; ++side) {
      const int anchor = side == 0 ? h : h2;
      const std::size_t link = side == 0 ? lm.weak_links[static_cast<std::size_t>(j)]
                                         : lm.strong_links[static_cast<std::size_t>(j)];
      expect("link_weak_right", link, lm.vertex_gadgets[static_cast<std::size_t>(anchor)], Relation::weak_right);
      expect(side == 0 ? "link_weak_left" : "link_strong_left", link, lm.edge_gadgets[static_cast<std::size_t>(j)],
             side == 0 ? Relation::weak_left : Relation::strong_left);
      for (int l = 1; l <= n; ++l) {
        if (l == anchor) continue;
        expect("link_vertex_pattern", link, lm.vertex_gadgets[static_cast<std::size_t>(l)],
               l > anchor ? Relation::covers : Relation::disjoint);
      }
      for (int l = 1; l <= m; ++l) {
        if (l == j) continue;
        expect("link_edge_pattern", link, lm.edge_gadgets[static_cast<std::size_t>(l)],
               l < j ? Relation::covers : Relation::disjoint);
      }
    }
  }
  return report;
}

MatchingOrderings matching_orderings(const Graph& g) {
  if (!validate_cubic(g)) throw Error("matching orderings need a cubic graph");
  if (!is_bridgeless(g)) throw Error("matching orderings need a bridgeless graph");
  auto matching = perfect_matching(g);
  if (!matching) throw Error("no perfect matching found");

  std::set<Edge> in_m(matching->begin(), matching->end());
  std::vector<std::vector<std::uint32_t>> rest(g.n);
  for (const auto& e : g.edges) {
    if (in_m.count(e)) continue;
    rest[e.first].push_back(e.second);
    rest[e.second].push_back(e.first);
  }
  for (auto& r : rest) {
    std::sort(r.begin(), r.end());
    if (r.size() != 2) throw Error("graph minus matching is not 2-regular");
  }

  MatchingOrderings mo;
  mo.matching = *matching;
  std::vector<bool> seen(g.n, false);
  std::vector<std::uint32_t> pi_v;
  std::vector<Edge> order;
  for (std::uint32_t start = 0; start < g.n; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> cyc{start};
    seen[start] = true;
    std::uint32_t prev = start, cur = rest[start][0];
    while (cur != start) {
      cyc.push_back(cur);
      seen[cur] = true;
      const std::uint32_t next = rest[cur][0] == prev ? rest[cur][1] : rest[cur][0];
      prev = cur;
      cur = next;
    }
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k) order.push_back({cyc[k], cyc[k + 1]});
    order.push_back({cyc.front(), cyc.back()});
    pi_v.insert(pi_v.end(), cyc.begin(), cyc.end());
    mo.cycles.push_back(std::move(cyc));
  }
  std::vector<int> pos(g.n);
  for (std::size_t k = 0; k < pi_v.size(); ++k) pos[pi_v[k]] = static_cast<int>(k);
  auto low = [&](const Edge& e) { return std::min(pos[e.first], pos[e.second]); };
  std::vector<Edge> m_sorted = *matching;
  std::sort(m_sorted.begin(), m_sorted.end(), [&](const Edge& a, const Edge& b) { return low(a) < low(b); });
  order.insert(order.end(), m_sorted.begin(), m_sorted.end());

  std::vector<std::uint32_t> pi_e;
  for (auto e : order) {
    if (e.first > e.second) std::swap(e.first, e.second);
    const auto it = std::find(g.edges.begin(), g.edges.end(), e);
    pi_e.push_back(static_cast<std::uint32_t>(it - g.edges.begin()));
  }
  mo.instance = make_instance(g, std::move(pi_v), std::move(pi_e));
  return mo;
}

LegacyIcReport legacy_ic_report(const LegacyModel& lm) {
  LegacyIcReport r;
  r.measured_ic = interval_count(lm.model);
  r.lower_bound = nesting_chain_lower_bound(lm.model);
  r.upper_bound_target = 4 * lm.instance.n() / 3 + 3;
  r.hamiltonian = is_hamiltonian(lm.instance.graph);
  r.upper_ok = r.measured_ic <= r.upper_bound_target;
  r.lower_ok = r.hamiltonian || r.lower_bound >= 5;
  return r;
}

namespace {

bool strictly_inside(const IntervalClass& inner, const IntervalClass& outer) {
  if (outer.is_points()) return false;
  if (inner.is_points()) return outer.left <= inner.left && inner.right <= outer.right;
  return outer.left < inner.left && inner.right < outer.right;
}

bool chain_holds(const WeightedIntervalModel& m, const std::vector<std::size_t>& chain) {
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (!strictly_inside(m.classes[chain[k]], m.classes[chain[k + 1]])) return false;
  }
  return true;
}

int edge_index(const CubicInstance& inst, std::uint32_t u, std::uint32_t v) {
  const Edge e{std::min(u, v), std::max(u, v)};
  for (std::size_t j = 0; j < inst.pi_e.size(); ++j) {
    if (inst.graph.edges[inst.pi_e[j]] == e) return static_cast<int>(j) + 1;
  }
  throw Error("not an edge");
}

}  // namespace

std::optional<std::vector<std::size_t>> five_chain_witness(const LegacyModel& lm, const MatchingOrderings& mo) {
  if (mo.cycles.size() < 2) return std::nullopt;
  const auto& inst = lm.instance;
  const auto pos = inst.vertex_positions();
  const auto& c1 = mo.cycles[0];
  const auto& c2 = mo.cycles[1];
  const std::uint32_t a = c2[0], b = c2[1], c = c2[2], last = c2.back();
  const std::uint32_t first = c1[0];
  std::uint32_t mate = first;
  for (const auto& e : mo.matching) {
    if (e.first == first) mate = e.second;
    if (e.second == first) mate = e.first;
  }
  const auto& gc = lm.vertex_gadgets[static_cast<std::size_t>(pos[c])];
  std::vector<std::size_t> chain{
      gc.rs,
      gc.rl,
      lm.link_of(pos[b], edge_index(inst, a, b)),
      lm.link_of(pos[a], edge_index(inst, a, last)),
      lm.link_of(pos[first], edge_index(inst, first, mate)),
  };
  if (!chain_holds(lm.model, chain)) return std::nullopt;
  return chain;
}

std::optional<std::vector<std::size_t>> adversarial_chain(const LegacyModel& lm) {
  const auto& inst = lm.instance;
  const auto pos = inst.vertex_positions();
  const int n = lm.n();
  std::vector<std::size_t> chain;
  for (int k = 1; k <= n; ++k) {
    const std::uint32_t v = static_cast<std::uint32_t>(k - 1);
    const auto [u, w] = inst.graph.edges[inst.pi_e[static_cast<std::size_t>(k - 1)]];
    if (u != v && w != v) return std::nullopt;
    chain.push_back(lm.link_of(pos[v], k));
  }
  if (!chain_holds(lm.model, chain)) return std::nullopt;
  return chain;
}

}  // namespace icmc
