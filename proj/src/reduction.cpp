#include "icmc/reduction.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace icmc {

void check_even_order(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw Error("invalid n: need an even n >= 4, got " + std::to_string(n));
}

ParameterSet parameters(std::size_t n) {
  check_even_order(n);
  const std::uint64_t c = static_cast<std::uint64_t>(n) * n * n;
  ParameterSet ps;
  ps.q = 28 * c + 1;
  ps.p = 2 * ps.q + 7 * n;
  ps.qe = 18 * c + 1;
  ps.pe = 2 * ps.qe + 5 * n;
  return ps;
}

const GrainedGadget& ReductionModel::vertex_gadget(int i, int j) const {
  if (i < 1 || i > n() || j < 1 || j > m() + 1) throw Error("vertex gadget index out of range");
  return vertex_gadgets_[static_cast<std::size_t>((i - 1) * (m() + 1) + (j - 1))];
}

const GrainedGadget& ReductionModel::edge_gadget(int j) const {
  if (j < 1 || j > m()) throw Error("edge gadget index out of range");
  return edge_gadgets_[static_cast<std::size_t>(j - 1)];
}

std::size_t ReductionModel::link(int i, int j) const {
  if (i < 1 || i > n() || j < 1 || j > m()) throw Error("link index out of range");
  return links_[static_cast<std::size_t>((i - 1) * m() + (j - 1))];
}

std::size_t ReductionModel::c12(int j) const {
  if (j < 1 || j > m()) throw Error("connector index out of range");
  return c12_[static_cast<std::size_t>(j - 1)];
}

std::size_t ReductionModel::c34(int j) const {
  if (j < 1 || j > m()) throw Error("connector index out of range");
  return c34_[static_cast<std::size_t>(j - 1)];
}

std::pair<int, int> ReductionModel::endpoints(int j) const {
  if (j < 1 || j > m()) throw Error("edge index out of range");
  return endpoints_[static_cast<std::size_t>(j - 1)];
}

namespace {

// value / 2
Rat halves(std::int64_t twice) { return Rat(BigInt(twice), BigInt(2)); }

Label lab(LabelKind kind, int i, int j, Group g = Group::none) { return Label{kind, i, j, g}; }

// Gadget whose longs are [a, mid] and [mid, b] (doubled units), with shorts
// in (ls_lo, ls_hi) and (rs_lo, rs_hi).
GrainedGadget push_gadget(WeightedIntervalModel& m, Label base, std::uint64_t x, std::uint64_t y,
                          std::int64_t a, std::int64_t mid, std::int64_t b, std::int64_t ls_lo,
                          std::int64_t ls_hi, std::int64_t rs_lo, std::int64_t rs_hi) {
  GrainedGadget h;
  h.x = x;
  h.y = y;
  auto tagged = [&](Group g) {
    Label l = base;
    l.group = g;
    return l;
  };
  h.ll = m.classes.size();
  m.classes.push_back(IntervalClass::twins(halves(a), halves(mid), y, tagged(Group::left_long)));
  h.ls = m.classes.size();
  m.classes.push_back(IntervalClass::points(halves(ls_lo), halves(ls_hi), x, tagged(Group::left_short)));
  h.rl = m.classes.size();
  m.classes.push_back(IntervalClass::twins(halves(mid), halves(b), y, tagged(Group::right_long)));
  h.rs = m.classes.size();
  m.classes.push_back(IntervalClass::points(halves(rs_lo), halves(rs_hi), x, tagged(Group::right_short)));
  return h;
}

std::vector<std::pair<int, int>> edge_endpoints(const CubicInstance& inst) {
  const auto pos = inst.vertex_positions();
  std::vector<std::pair<int, int>> out;
  for (auto idx : inst.pi_e) {
    const auto [u, v] = inst.graph.edges[idx];
    const int a = pos[u], b = pos[v];
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  return out;
}

}  // namespace

ReductionModel build_model(const CubicInstance& inst, const ParameterSet& params) {
  inst.validate();
  if (params.p == 0 || params.q == 0 || params.pe == 0 || params.qe == 0) {
    throw Error("parameters must be positive");
  }
  ReductionModel rm;
  rm.instance = inst;
  rm.params = params;
  const std::int64_t n = static_cast<std::int64_t>(inst.n());
  const std::int64_t m = static_cast<std::int64_t>(inst.m());
  rm.t = 6 * n - 5;
  rm.endpoints_ = edge_endpoints(inst);
  rm.vertex_gadgets_.resize(static_cast<std::size_t>(n * (m + 1)));
  rm.links_.resize(static_cast<std::size_t>(n * m));
  auto& model = rm.model;

  // Everything below is in doubled units: D(x) = 2x.
  auto vertex = [&](std::int64_t i, std::int64_t j) {
    const std::int64_t s2 = 2 * rm.t * (j - 1);
    const std::int64_t a = 4 * i - 4 + s2, mid = 4 * i - 3 + s2, b = 4 * i - 2 + s2;
    rm.vertex_gadgets_[static_cast<std::size_t>((i - 1) * (m + 1) + (j - 1))] =
        push_gadget(model, lab(LabelKind::vertex_gadget, int(i), int(j)), params.p, params.q, a, mid, b, a, mid,
                    mid, b);
  };

  for (std::int64_t j = 1; j <= m; ++j) {
    const std::int64_t s2 = 2 * rm.t * (j - 1);
    for (std::int64_t i = 1; i <= n; ++i) vertex(i, j);

    rm.edge_gadgets_.push_back(push_gadget(model, lab(LabelKind::edge_gadget, 0, int(j)), params.pe, params.qe,
                                           4 * n + s2, 12 * n - 12 + s2, 12 * n - 11 + s2, 8 * n - 8 + s2,
                                           8 * n - 6 + s2, 12 * n - 12 + s2, 12 * n - 11 + s2));

    const auto [h, h2] = rm.endpoints_[static_cast<std::size_t>(j - 1)];
    rm.c12_.push_back(model.size());
    model.classes.push_back(IntervalClass::twins(halves(4 * h - 2 + s2), halves(4 * h + 4 * n - 4 + s2), 2,
                                                 lab(LabelKind::connector12, 0, int(j))));
    rm.c34_.push_back(model.size());
    model.classes.push_back(IntervalClass::twins(halves(4 * h2 - 2 + s2), halves(4 * h2 + 8 * n - 14 + s2), 2,
                                                 lab(LabelKind::connector34, 0, int(j))));

    for (std::int64_t i = 1; i <= n; ++i) {
      rm.links_[static_cast<std::size_t>((i - 1) * m + (j - 1))] = model.size();
      model.classes.push_back(IntervalClass::twins(halves(4 * i - 2 + s2), halves(4 * i + 12 * n - 14 + s2), 2,
                                                   lab(LabelKind::link, int(i), int(j))));
    }
  }
  for (std::int64_t i = 1; i <= n; ++i) vertex(i, m + 1);

  model.validate();
  return rm;
}

ReductionModel index_model(WeightedIntervalModel model, const CubicInstance& inst, const ParameterSet& params) {
  inst.validate();
  model.validate();
  ReductionModel rm;
  rm.instance = inst;
  rm.params = params;
  const int n = static_cast<int>(inst.n());
  const int m = static_cast<int>(inst.m());
  rm.t = 6 * n - 5;
  rm.endpoints_ = edge_endpoints(inst);

  using Key = std::tuple<int, int, int, int>;
  std::map<Key, std::size_t> where;
  for (std::size_t k = 0; k < model.size(); ++k) {
    const auto& l = model.classes[k].label;
    Key key{static_cast<int>(l.kind), l.i, l.j, static_cast<int>(l.group)};
    if (!where.emplace(key, k).second) throw Error("duplicate label " + describe(l));
  }
  auto find = [&](LabelKind kind, int i, int j, Group g) {
    auto it = where.find(Key{static_cast<int>(kind), i, j, static_cast<int>(g)});
    if (it == where.end()) throw Error("model lacks class " + describe(Label{kind, i, j, g}));
    return it->second;
  };
  auto gadget = [&](LabelKind kind, int i, int j) {
    GrainedGadget h;
    h.ls = find(kind, i, j, Group::left_short);
    h.ll = find(kind, i, j, Group::left_long);
    h.rs = find(kind, i, j, Group::right_short);
    h.rl = find(kind, i, j, Group::right_long);
    h.x = model.classes[h.ls].mult;
    h.y = model.classes[h.ll].mult;
    return h;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m + 1; ++j) rm.vertex_gadgets_.push_back(gadget(LabelKind::vertex_gadget, i, j));
  for (int j = 1; j <= m; ++j) {
    rm.edge_gadgets_.push_back(gadget(LabelKind::edge_gadget, 0, j));
    rm.c12_.push_back(find(LabelKind::connector12, 0, j, Group::none));
    rm.c34_.push_back(find(LabelKind::connector34, 0, j, Group::none));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) rm.links_.push_back(find(LabelKind::link, i, j, Group::none));
  const std::size_t expected = static_cast<std::size_t>(m * (5 * n + 6) + 4 * n);
  if (model.size() != expected) throw Error("model has classes outside the reduction layout");
  rm.model = std::move(model);
  return rm;
}

namespace {

BigInt f_common(std::size_t n_, const ParameterSet& ps) {
  const BigInt n = n_, p = ps.p, q = ps.q, pe = ps.pe, qe = ps.qe;
  return (3 * n * n / 2 + n) * (2 * p * q + q * q) + (3 * n / 2) * (2 * pe * qe + qe * qe) +
         6 * n * q * (n + 1) + (3 * n * n + 3 * n) * (n - 1) * (p + q) + 3 * n * n * (pe + qe);
}

}  // namespace

BigInt f(std::size_t n, const ParameterSet& ps, std::int64_t k_) {
  const BigInt n_big = n, k = k_, pe = ps.pe, qe = ps.qe;
  return f_common(n, ps) + 3 * n_big * ((k + 1) * qe + pe) + 4 * k;
}

BigInt f(const CubicInstance& inst, std::int64_t k) {
  if (k < 0 || k > static_cast<std::int64_t>(inst.m())) throw Error("k out of range");
  return f(inst.n(), parameters(inst.n()), k);
}

BigInt exact_alternating_floor(std::size_t n, const ParameterSet& ps, std::int64_t k_) {
  const BigInt n_big = n, k = k_, pe = ps.pe, qe = ps.qe;
  return f_common(n, ps) + 2 * k * qe + 3 * n_big * pe + 4 * k;
}

BigInt surplus_bound(std::size_t n_) {
  const BigInt n = n_;
  return 9 * n * n * n / 2 + 13 * n * n - 16 * n;
}

bool StructureReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

std::vector<CheckResult> StructureReport::failures() const {
  std::vector<CheckResult> out;
  for (const auto& c : checks) {
    if (!c.ok) out.push_back(c);
  }
  return out;
}

std::string StructureReport::to_json() const {
  nlohmann::json doc;
  doc["ok"] = ok();
  doc["checks"] = checks.size();
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& c : failures()) {
    fails.push_back({{"check", c.name}, {"subject", c.subject}, {"detail", c.detail}});
  }
  doc["failures"] = fails;
  return doc.dump(2);
}

StructureReport verify_structure(const ReductionModel& rm) {
  StructureReport report;
  const auto& model = rm.model;
  const int n = rm.n(), m = rm.m();
  auto add = [&](std::string name, std::string subject, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), std::move(subject), ok, std::move(detail)});
  };
  auto name_of = [&](std::size_t k) { return describe(model.classes[k].label); };
  auto gadget_name = [&](const GrainedGadget& h) {
    Label l = model.classes[h.ll].label;
    l.group = Group::none;
    return describe(l);
  };

  // uniform adjacency over every pair of classes
  {
    std::string bad;
    std::size_t count = 0;
    for (std::size_t a = 0; a < model.size(); ++a) {
      for (std::size_t b = a + 1; b < model.size(); ++b) {
        if (class_adjacency(model.classes[a], model.classes[b]) == Adjacency::partial) {
          if (count++ < 5) bad += name_of(a) + "~" + name_of(b) + " ";
        }
      }
    }
    add("uniform_adjacency", "model", count == 0, bad);
  }

  std::vector<const GrainedGadget*> gadgets;
  for (const auto& h : rm.vertex_gadgets_) gadgets.push_back(&h);
  for (const auto& h : rm.edge_gadgets_) gadgets.push_back(&h);
  for (const auto* h : gadgets) {
    const std::string who = gadget_name(*h);
    const auto shape = gadget_shape_error(model, *h);
    add("gadget_shape", who, !shape, shape.value_or(""));
    const auto rs = respects_structure(model, *h);
    add("respects_structure", who, rs.ok, rs.offending ? "offending class " + name_of(*rs.offending) : "");
    if (!rs.ok) continue;
    const auto wv = well_valued(*h, rs.census);
    std::ostringstream census;
    census << "cov=" << rs.census.cov << " wl=" << rs.census.wl << " wr=" << rs.census.wr
           << " sl=" << rs.census.sl << " sr=" << rs.census.sr;
    add("well_valued.cond1", who, wv.cond1, census.str());
    add("well_valued.cond2", who, wv.cond2, census.str());
    add("well_valued.cond3", who, wv.cond3, census.str());
  }

  auto gadget_classes = [](const GrainedGadget& h) { return std::array<std::size_t, 4>{h.ls, h.ll, h.rs, h.rl}; };
  auto gadgets_disjoint = [&](const GrainedGadget& a, const GrainedGadget& b) {
    for (auto x : gadget_classes(a))
      for (auto y : gadget_classes(b))
        if (class_adjacency(model.classes[x], model.classes[y]) != Adjacency::none) return false;
    return true;
  };
  for (int j = 1; j <= m + 1; ++j) {
    std::vector<const GrainedGadget*> row;
    for (int i = 1; i <= n; ++i) row.push_back(&rm.vertex_gadget(i, j));
    if (j <= m) row.push_back(&rm.edge_gadget(j));
    for (std::size_t a = 0; a < row.size(); ++a)
      for (std::size_t b = a + 1; b < row.size(); ++b)
        add("row_disjoint", gadget_name(*row[a]) + "/" + gadget_name(*row[b]), gadgets_disjoint(*row[a], *row[b]));
  }

  auto expect = [&](const std::string& check, std::size_t cls, const GrainedGadget& h, Relation want) {
    const Relation got = classify(model.classes[cls], model, h);
    add(check, name_of(cls) + " vs " + gadget_name(h), got == want,
        got == want ? "" : "expected " + to_string(want) + ", got " + to_string(got));
  };

  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i <= n; ++i) {
      const std::size_t l = rm.link(i, j);
      expect("link_weak_right", l, rm.vertex_gadget(i, j), Relation::weak_right);
      expect("link_weak_left", l, rm.vertex_gadget(i, j + 1), Relation::weak_left);
      for (int i2 = i + 1; i2 <= n; ++i2) expect("link_covers", l, rm.vertex_gadget(i2, j), Relation::covers);
      for (int i2 = 1; i2 < i; ++i2) expect("link_covers", l, rm.vertex_gadget(i2, j + 1), Relation::covers);
      expect("link_covers_edge_gadget", l, rm.edge_gadget(j), Relation::covers);
    }

    const auto& e = rm.edge_gadget(j);
    for (std::size_t k = 0; k < model.size(); ++k) {
      if (e.owns(k) || k == rm.c12(j) || k == rm.c34(j)) continue;
      const Relation r = classify(model.classes[k], model, e);
      if (r == Relation::disjoint) continue;
      const auto& lk = model.classes[k].label;
      const bool ok = lk.kind == LabelKind::link && lk.j == j && r == Relation::covers;
      add("edge_gadget_neighbours", name_of(k) + " vs " + gadget_name(e), ok, ok ? "" : to_string(r));
    }

    const auto [h, h2] = rm.endpoints(j);
    expect("c12_weak_right", rm.c12(j), rm.vertex_gadget(h, j), Relation::weak_right);
    expect("c12_weak_left", rm.c12(j), e, Relation::weak_left);
    expect("c34_weak_right", rm.c34(j), rm.vertex_gadget(h2, j), Relation::weak_right);
    expect("c34_strong_left", rm.c34(j), e, Relation::strong_left);
    for (int i2 = h + 1; i2 <= n; ++i2) expect("c12_covers", rm.c12(j), rm.vertex_gadget(i2, j), Relation::covers);
    for (int i2 = h2 + 1; i2 <= n; ++i2)
      expect("c34_covers", rm.c34(j), rm.vertex_gadget(i2, j), Relation::covers);
  }
  return report;
}

std::set<Rat> expected_lengths(std::size_t n_) {
  const std::int64_t n = static_cast<std::int64_t>(n_);
  return {Rat(0), halves(1), Rat(2 * n - 1), Rat(4 * n - 6), Rat(6 * n - 6)};
}

IntervalCountFive verify_interval_count_five(const ReductionModel& rm) {
  IntervalCountFive out;
  out.lengths = length_set(rm.model);
  out.ok = out.lengths.size() == 5 && out.lengths == expected_lengths(rm.instance.n());
  return out;
}

}  // namespace icmc
