#include "icmc/cuts.hpp"

namespace icmc {

ClassCut uniform_cut(const WeightedIntervalModel& m, Side side) { return ClassCut{std::vector<Side>(m.size(), side)}; }

namespace {

void check_cut(std::size_t classes, const ClassCut& cut) {
  if (cut.side.size() != classes) throw Error("cut does not assign every class");
}

[[noreturn]] void partial_error(const WeightedIntervalModel& m, std::size_t a, std::size_t b) {
  throw Error("uniform-adjacency violation between " + describe(m.classes[a].label) + " and " +
              describe(m.classes[b].label));
}

}  // namespace

CutEvaluator::CutEvaluator(const WeightedIntervalModel& m) : classes_(m.size()) {
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      const auto adj = class_adjacency(m.classes[a], m.classes[b]);
      if (adj == Adjacency::partial) partial_error(m, a, b);
      if (adj == Adjacency::full) {
        pairs_.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                          m.classes[a].mult * m.classes[b].mult});
      }
    }
  }
}

BigInt CutEvaluator::cut_size(const ClassCut& cut) const {
  check_cut(classes_, cut);
  BigInt total = 0;
  for (const auto& p : pairs_) {
    if (cut.side[p.a] != cut.side[p.b]) total += p.weight;
  }
  return total;
}

BigInt cut_size(const WeightedIntervalModel& m, const ClassCut& cut) { return CutEvaluator(m).cut_size(cut); }

AlternatingCheck is_alternating_partitioned(const ReductionModel& rm, const ClassCut& cut) {
  check_cut(rm.model.size(), cut);
  const int n = rm.n(), m = rm.m();
  auto fail = [](std::string prop, std::string detail) { return AlternatingCheck{false, std::move(prop), std::move(detail)}; };
  auto state = [&](int i, int j) { return partition_state(cut, rm.vertex_gadget(i, j)); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m + 1; ++j)
      if (state(i, j) == PartitionState::neither)
        return fail("I", "H(" + std::to_string(i) + "," + std::to_string(j) + ") is neither A- nor B-partitioned");
  for (int j = 1; j <= m; ++j) {
    const auto [h, h2] = rm.endpoints(j);
    const Side want12 = state(h, j) == PartitionState::A_partitioned ? Side::B : Side::A;
    if (cut.side[rm.c12(j)] != want12) return fail("II", "C12(" + std::to_string(j) + ") on the wrong side");
  }
  for (int j = 1; j <= m; ++j) {
    const auto [h, h2] = rm.endpoints(j);
    const auto s = state(h2, j);
    const Side want34 = s == PartitionState::A_partitioned ? Side::B : Side::A;
    if (cut.side[rm.c34(j)] != want34) return fail("III", "C34(" + std::to_string(j) + ") on the wrong side");
    if (partition_state(cut, rm.edge_gadget(j)) != s) {
      return fail("III", "E(" + std::to_string(j) + ") does not follow H(" + std::to_string(h2) + "," +
                             std::to_string(j) + ")");
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const auto s = state(i, j);
      const Side want = s == PartitionState::A_partitioned ? Side::B : Side::A;
      const std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (cut.side[rm.link(i, j)] != want) return fail("IV", "L" + where + " on the wrong side");
      if (state(i, j + 1) == s) return fail("IV", "H" + where + " and its successor share a state");
    }
  }
  return {};
}

VertexCut phi(const ReductionModel& rm, const ClassCut& cut) {
  const auto check = is_alternating_partitioned(rm, cut);
  if (!check.ok) throw Error("cut is not alternating partitioned (property " + check.property + ")");
  VertexCut vc;
  vc.in_x.assign(rm.instance.n(), false);
  for (int i = 1; i <= rm.n(); ++i) {
    vc.in_x[rm.instance.pi_v[static_cast<std::size_t>(i - 1)]] =
        partition_state(cut, rm.vertex_gadget(i, 1)) == PartitionState::A_partitioned;
  }
  return vc;
}

ClassCut phi_inverse(const ReductionModel& rm, const VertexCut& vc) {
  if (vc.in_x.size() != rm.instance.n()) throw Error("vertex cut size does not match instance");
  const int n = rm.n(), m = rm.m();
  ClassCut cut = uniform_cut(rm.model, Side::A);
  auto a_state = [&](int i, int j) {
    const bool x = vc.in_x[rm.instance.pi_v[static_cast<std::size_t>(i - 1)]];
    return x != (j % 2 == 0);
  };
  auto as_state = [](bool a) { return a ? PartitionState::A_partitioned : PartitionState::B_partitioned; };
  auto against = [](bool a) { return a ? Side::B : Side::A; };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m + 1; ++j) set_partition_state(cut, rm.vertex_gadget(i, j), as_state(a_state(i, j)));
    for (int j = 1; j <= m; ++j) cut.side[rm.link(i, j)] = against(a_state(i, j));
  }
  for (int j = 1; j <= m; ++j) {
    const auto [h, h2] = rm.endpoints(j);
    cut.side[rm.c12(j)] = against(a_state(h, j));
    cut.side[rm.c34(j)] = against(a_state(h2, j));
    set_partition_state(cut, rm.edge_gadget(j), as_state(a_state(h2, j)));
  }
  return cut;
}

std::string to_string(Category c) {
  static const char* names[kCategoryCount] = {"c11", "c12", "c13", "c14", "c15", "c21", "c22",
                                              "c23", "c31", "c32", "c33", "c34", "c35"};
  return names[static_cast<std::size_t>(c)];
}

BigInt CutBreakdown::total() const {
  BigInt t = 0;
  for (const auto& v : value) t += v;
  return t;
}

BigInt CutBreakdown::exact_part() const {
  BigInt t = 0;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(Category::c31); ++k) t += value[k];
  return t;
}

BigInt CutBreakdown::surplus() const { return total() - exact_part(); }

namespace {

bool is_connector(LabelKind k) { return k == LabelKind::connector12 || k == LabelKind::connector34; }

// Category of an adjacent pair, from labels alone; throws when the labels
// describe a pair that should not be adjacent.
Category categorize(const ReductionModel& rm, const Label& x, const Label& y) {
  const Label* a = &x;
  const Label* b = &y;
  // order by kind so each combination is handled once
  if (static_cast<int>(a->kind) > static_cast<int>(b->kind)) std::swap(a, b);
  const auto ka = a->kind, kb = b->kind;
  auto bad = [&]() -> Category {
    throw Error("unclassifiable adjacent pair " + describe(x) + " / " + describe(y));
  };

  if (ka == LabelKind::vertex_gadget && kb == LabelKind::vertex_gadget) {
    return (a->i == b->i && a->j == b->j) ? Category::c11 : bad();
  }
  if (ka == LabelKind::vertex_gadget && kb == LabelKind::link) {
    const int i = b->i, j = b->j;
    if (a->i == i && (a->j == j || a->j == j + 1)) return Category::c12;
    if ((a->i > i && a->j == j) || (a->i < i && a->j == j + 1)) return Category::c14;
    return bad();
  }
  if (ka == LabelKind::vertex_gadget && is_connector(kb)) {
    if (a->j != b->j) return bad();
    const auto [h, h2] = rm.endpoints(b->j);
    const int anchor = kb == LabelKind::connector12 ? h : h2;
    if (a->i == anchor) return Category::c13;
    if (a->i > anchor) return Category::c15;
    return bad();
  }
  if (ka == LabelKind::edge_gadget && kb == LabelKind::edge_gadget) return a->j == b->j ? Category::c21 : bad();
  if (ka == LabelKind::edge_gadget && kb == LabelKind::link) return a->j == b->j ? Category::c22 : bad();
  if (ka == LabelKind::edge_gadget && is_connector(kb)) return a->j == b->j ? Category::c23 : bad();
  if (ka == LabelKind::link && kb == LabelKind::link) {
    if (a->j == b->j) return Category::c32;
    if (a->j + 1 == b->j || b->j + 1 == a->j) return Category::c34;
    return bad();
  }
  if (ka == LabelKind::link && is_connector(kb)) {
    if (a->j == b->j) return Category::c33;
    if (a->j + 1 == b->j) return Category::c35;
    return bad();
  }
  if (is_connector(ka) && is_connector(kb)) {
    return (a->j == b->j && ka != kb) ? Category::c31 : bad();
  }
  return bad();
}

}  // namespace

BreakdownCounter::BreakdownCounter(const ReductionModel& rm) : rm_(&rm) {
  const auto& m = rm.model;
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      const auto adj = class_adjacency(m.classes[a], m.classes[b]);
      if (adj == Adjacency::partial) partial_error(m, a, b);
      if (adj == Adjacency::none) continue;
      pairs_.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                        m.classes[a].mult * m.classes[b].mult,
                        categorize(rm, m.classes[a].label, m.classes[b].label)});
    }
  }
}

CutBreakdown BreakdownCounter::breakdown(const ClassCut& cut) const {
  const auto check = is_alternating_partitioned(*rm_, cut);
  if (!check.ok) throw Error("breakdown needs an alternating partitioned cut (property " + check.property + ")");
  std::array<unsigned __int128, kCategoryCount> acc{};
  for (const auto& p : pairs_) {
    if (cut.side[p.a] != cut.side[p.b]) acc[static_cast<std::size_t>(p.category)] += p.weight;
  }
  CutBreakdown out;
  for (std::size_t k = 0; k < kCategoryCount; ++k) {
    const auto hi = static_cast<std::uint64_t>(acc[k] >> 64);
    const auto lo = static_cast<std::uint64_t>(acc[k]);
    out.value[k] = (BigInt(hi) << 64) + BigInt(lo);
  }
  return out;
}

BigInt BreakdownCounter::cut_size(const ClassCut& cut) const {
  check_cut(rm_->model.size(), cut);
  BigInt total = 0;
  for (const auto& p : pairs_) {
    if (cut.side[p.a] != cut.side[p.b]) total += p.weight;
  }
  return total;
}

CutBreakdown cut_breakdown(const ReductionModel& rm, const ClassCut& cut) { return BreakdownCounter(rm).breakdown(cut); }

CutBreakdown expected_breakdown(std::size_t n_, const ParameterSet& ps, std::int64_t k_) {
  const BigInt n = n_, k = k_, p = ps.p, q = ps.q, pe = ps.pe, qe = ps.qe;
  CutBreakdown e;
  e[Category::c11] = (3 * n * n / 2 + n) * (2 * p * q + q * q);
  e[Category::c12] = 6 * n * n * q;
  e[Category::c13] = 6 * n * q;
  e[Category::c14] = 3 * n * n * (n - 1) * (p + q);
  e[Category::c15] = 3 * n * (n - 1) * (p + q);
  e[Category::c21] = (3 * n / 2) * (2 * pe * qe + qe * qe);
  e[Category::c22] = 3 * n * n * (pe + qe);
  e[Category::c23] = 3 * n * ((k + 1) * qe + pe);
  e[Category::c31] = 4 * k;
  e[Category::c32] = 3 * n * n * n / 2;
  e[Category::c33] = 12 * n * n - 12 * n;
  e[Category::c34] = 3 * n * n * n - 5 * n * n + 2 * n;
  e[Category::c35] = 6 * n * n - 6 * n;
  return e;
}

BigInt exact_c23(std::size_t n, const ParameterSet& ps, std::int64_t k) {
  return 2 * BigInt(k) * BigInt(ps.qe) + 3 * BigInt(n) * BigInt(ps.pe);
}

Window cut_window(const ReductionModel& rm, const BreakdownCounter& counter, const VertexCut& vc) {
  Window w;
  const std::size_t n = rm.instance.n();
  w.k = cut_edges(rm.instance.graph, vc);
  w.size = counter.cut_size(phi_inverse(rm, vc));
  const auto k = static_cast<std::int64_t>(w.k);
  const BigInt bound = surplus_bound(n);
  w.f_k = f(n, rm.params, k);
  w.f_next = f(n, rm.params, k + 1);
  w.in_window = w.f_k <= w.size && w.size <= w.f_k + bound && w.f_k + bound < w.f_next;
  const BigInt lo = exact_alternating_floor(n, rm.params, k);
  const BigInt next = exact_alternating_floor(n, rm.params, k + 1);
  w.surplus_exact = w.size - lo;
  w.in_exact_window = lo <= w.size && w.size <= lo + bound && lo + bound < next;
  return w;
}

Window cut_window(const ReductionModel& rm, const VertexCut& vc) {
  return cut_window(rm, BreakdownCounter(rm), vc);
}

}  // namespace icmc
