#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "icmc/cuts.hpp"
#include "icmc/maxcut.hpp"
#include "oracles.hpp"

using namespace icmc;

namespace {

const ReductionModel& k4_model() {
  static const ReductionModel rm = [] {
    const auto inst = make_instance(k4());
    return build_model(inst, parameters(4));
  }();
  return rm;
}

const ReductionModel& tiny_k4() {
  static const ReductionModel rm = build_model(make_instance(k4()), ParameterSet{2, 1, 2, 1});
  return rm;
}

}  // namespace

TEST_CASE("cut size of a lone gadget") {
  WeightedIntervalModel m;
  const auto h = append_gadget(m, Rat(0), 3, 2);
  ClassCut cut{std::vector<Side>(m.size(), Side::B)};
  set_partition_state(cut, h, PartitionState::A_partitioned);
  const auto mg = materialize(m, 20);
  CHECK(cut_size(m, cut) == oracle::materialized_cut(mg, cut));
  CHECK(cut_size(m, cut) == 2 * 3 * 2 + 2 * 2);
  CHECK(cut_size(m, uniform_cut(m, Side::A)) == 0);
  CHECK(cut_size(k4_model().model, uniform_cut(k4_model().model, Side::B)) == 0);
}

TEST_CASE("partial adjacency is rejected") {
  WeightedIntervalModel m;
  m.classes.push_back(IntervalClass::twins(Rat(0), Rat(2), 1));
  m.classes.push_back(IntervalClass::points(Rat(1), Rat(3), 2));
  CHECK_THROWS_AS(cut_size(m, ClassCut{{Side::A, Side::B}}), Error);
}

TEST_CASE("weighted counting matches the materialized graph") {
  const auto& rm = tiny_k4();
  const auto mg = materialize(rm.model, 300);
  const CutEvaluator eval(rm.model);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    ClassCut cut;
    for (std::size_t c = 0; c < rm.model.size(); ++c) cut.side.push_back(rng() & 1 ? Side::A : Side::B);
    const auto expect = oracle::materialized_cut(mg, cut);
    CHECK(cut_size(rm.model, cut) == expect);
    CHECK(eval.cut_size(cut) == expect);
  }
}

TEST_CASE("inverse map gives alternating cuts") {
  const auto& rm = k4_model();
  std::set<std::vector<Side>> seen;
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const auto vc = vertex_cut_from_mask(4, mask);
    const auto cut = phi_inverse(rm, vc);
    CHECK(is_alternating_partitioned(rm, cut).ok);
    CHECK(phi(rm, cut) == vc);
    seen.insert(cut.side);
  }
  CHECK(seen.size() == 16);
  // every vertex in X: all first-row gadgets A-partitioned, second row B
  const auto all = phi_inverse(rm, VertexCut{{true, true, true, true}});
  for (int i = 1; i <= 4; ++i) {
    CHECK(partition_state(all, rm.vertex_gadget(i, 1)) == PartitionState::A_partitioned);
    CHECK(partition_state(all, rm.vertex_gadget(i, 2)) == PartitionState::B_partitioned);
  }
}

TEST_CASE("flipping a vertex flips exactly its tied classes") {
  const auto& rm = k4_model();
  const auto base = phi_inverse(rm, vertex_cut_from_mask(4, 0b0101));
  const auto flip = phi_inverse(rm, vertex_cut_from_mask(4, 0b0100));
  // vertex at position 1 changed side
  for (int j = 1; j <= rm.m() + 1; ++j) {
    CHECK(partition_state(base, rm.vertex_gadget(1, j)) != partition_state(flip, rm.vertex_gadget(1, j)));
    CHECK(partition_state(base, rm.vertex_gadget(2, j)) == partition_state(flip, rm.vertex_gadget(2, j)));
  }
  for (int j = 1; j <= rm.m(); ++j) {
    CHECK(base.side[rm.link(1, j)] != flip.side[rm.link(1, j)]);
    CHECK(base.side[rm.link(3, j)] == flip.side[rm.link(3, j)]);
    const auto [h, h2] = rm.endpoints(j);
    CHECK((base.side[rm.c12(j)] != flip.side[rm.c12(j)]) == (h == 1));
    CHECK((base.side[rm.c34(j)] != flip.side[rm.c34(j)]) == (h2 == 1));
  }
}

TEST_CASE("broken properties are named") {
  const auto& rm = k4_model();
  auto cut = phi_inverse(rm, vertex_cut_from_mask(4, 0b0110));
  auto link_flipped = cut;
  link_flipped.side[rm.link(2, 3)] = opposite(link_flipped.side[rm.link(2, 3)]);
  auto r = is_alternating_partitioned(rm, link_flipped);
  CHECK_FALSE(r.ok);
  CHECK(r.property == "IV");
  CHECK_THROWS_AS(phi(rm, link_flipped), Error);

  auto edge_swapped = cut;
  const auto& e = rm.edge_gadget(2);
  for (auto c : {e.ls, e.ll, e.rs, e.rl}) edge_swapped.side[c] = opposite(edge_swapped.side[c]);
  r = is_alternating_partitioned(rm, edge_swapped);
  CHECK_FALSE(r.ok);
  CHECK(r.property == "III");

  auto c12_flipped = cut;
  c12_flipped.side[rm.c12(1)] = opposite(c12_flipped.side[rm.c12(1)]);
  CHECK(is_alternating_partitioned(rm, c12_flipped).property == "II");

  auto split = cut;
  const auto& h = rm.vertex_gadget(1, 1);
  split.side[h.ls] = split.side[h.ll];
  CHECK(is_alternating_partitioned(rm, split).property == "I");
}

TEST_CASE("category breakdown on K4") {
  const auto& rm = k4_model();
  const auto ps = rm.params;
  const BigInt p = ps.p, q = ps.q, pe = ps.pe, qe = ps.qe;
  const BreakdownCounter counter(rm);
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const auto vc = vertex_cut_from_mask(4, mask);
    const auto cut = phi_inverse(rm, vc);
    const auto b = counter.breakdown(cut);
    const std::int64_t k = cut_edges(rm.instance.graph, vc);
    CAPTURE(mask);
    CHECK(b.total() == cut_size(rm.model, cut));
    CHECK(b[Category::c11] == 28 * (2 * p * q + q * q));
    CHECK(b[Category::c12] == 6 * 16 * q);
    CHECK(b[Category::c13] == 6 * 4 * q);
    CHECK(b[Category::c14] == 3 * 16 * 3 * (p + q));
    CHECK(b[Category::c15] == 3 * 4 * 3 * (p + q));
    CHECK(b[Category::c21] == 6 * (2 * pe * qe + qe * qe));
    CHECK(b[Category::c22] == 3 * 16 * (pe + qe));
    CHECK(b[Category::c31] == 4 * k);
    // the edge-gadget/connector pairs: 2kq' + 3np', below the closed form
    CHECK(b[Category::c23] == 2 * k * qe + 12 * pe);
    CHECK(b[Category::c23] == exact_c23(4, ps, k));
    CHECK(expected_breakdown(4, ps, k)[Category::c23] - b[Category::c23] == qe * (12 * (k + 1) - 2 * k));
    for (auto c : {Category::c32, Category::c33, Category::c34, Category::c35}) {
      CHECK(b[c] >= 0);
      CHECK(b[c] <= expected_breakdown(4, ps, k)[c]);
    }
    CHECK(b.exact_part() == exact_alternating_floor(4, ps, k));
  }
  const auto four = phi_inverse(rm, vertex_cut_from_mask(4, 0b0011));
  CHECK(counter.breakdown(four)[Category::c31] == 16);
  // non-alternating cuts have no breakdown
  auto bad = four;
  bad.side[rm.link(1, 1)] = opposite(bad.side[rm.link(1, 1)]);
  CHECK_THROWS_AS(counter.breakdown(bad), Error);
}

TEST_CASE("category sums on the tiny model agree with materialized counting") {
  const auto& rm = tiny_k4();
  const auto mg = materialize(rm.model, 300);
  const BreakdownCounter counter(rm);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const auto cut = phi_inverse(rm, vertex_cut_from_mask(4, mask));
    const auto b = counter.breakdown(cut);
    CHECK(b.total() == oracle::materialized_cut(mg, cut));
    const std::int64_t k = cut_edges(rm.instance.graph, vertex_cut_from_mask(4, mask));
    CHECK(b[Category::c23] == exact_c23(4, rm.params, k));
  }
}

TEST_CASE("window around the target value") {
  const auto& rm = k4_model();
  const BreakdownCounter counter(rm);
  BigInt best = 0;
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const auto vc = vertex_cut_from_mask(4, mask);
    const auto w = cut_window(rm, counter, vc);
    CHECK(w.in_exact_window);
    // the published floor overshoots every cut
    CHECK_FALSE(w.in_window);
    CHECK(w.size < w.f_k);
    const auto b = counter.breakdown(phi_inverse(rm, vc));
    CHECK(w.surplus_exact == b.surplus());
    if (w.size > best) best = w.size;
  }
  CHECK(maxcut(k4()).k == 4);
  CHECK(exact_alternating_floor(4, rm.params, 4) <= best);
  CHECK(best < exact_alternating_floor(4, rm.params, 5));
}

TEST_CASE("larger cuts give larger lifted cuts") {
  const auto rm = build_model(make_instance(prism()), parameters(6));
  const BreakdownCounter counter(rm);
  std::map<std::uint64_t, std::pair<BigInt, BigInt>> range;
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    const auto w = cut_window(rm, counter, vertex_cut_from_mask(6, mask));
    auto [it, fresh] = range.try_emplace(w.k, w.size, w.size);
    if (!fresh) {
      it->second.first = std::min(it->second.first, w.size);
      it->second.second = std::max(it->second.second, w.size);
    }
  }
  for (auto it = range.begin(); std::next(it) != range.end(); ++it) {
    CHECK(it->second.second < std::next(it)->second.first);
  }
}
