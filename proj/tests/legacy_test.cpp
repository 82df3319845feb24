#include <doctest.h>

#include <set>

#include "icmc/legacy.hpp"

using namespace icmc;

namespace {

bool strictly_inside(const IntervalClass& inner, const IntervalClass& outer) {
  return outer.left < inner.left && inner.right < outer.right;
}

bool point_inside(const IntervalClass& pts, const IntervalClass& outer) {
  return outer.left <= pts.container->left && pts.container->right <= outer.right;
}

}  // namespace

TEST_CASE("legacy parameters") {
  const auto ps = legacy_parameters(4);
  CHECK(ps == ParameterSet{25630, 12801, 350, 161});
  CHECK(legacy_parameters(10).q == 200001);
  for (std::size_t n = 4; n <= 30; n += 2) CHECK(legacy_parameters(n).q % 2 == 1);
  CHECK_THROWS_AS(legacy_parameters(7), Error);
}

TEST_CASE("legacy size") {
  for (std::size_t n = 4; n <= 20; n += 2) {
    const auto ps = legacy_parameters(n);
    const BigInt m = 3 * n / 2;
    const BigInt census = n * (2 * BigInt(ps.p) + 2 * ps.q) + m * (2 * BigInt(ps.pe) + 2 * ps.qe) + 4 * m;
    CHECK(legacy_size(n) == census);
    // the quoted closed form is short by 10n^2
    CHECK(legacy_size(n) - legacy_size_polynomial(n) == 10 * n * n);
  }
  CHECK(legacy_size(4) == 313604);
  CHECK(legacy_size_polynomial(4) == 313444);
  CHECK(legacy_size_polynomial(10) == 12092710);
}

TEST_CASE("K4 legacy model") {
  const auto lm = legacy_build(make_instance(k4()));
  CHECK(lm.model.size() == 16 + 24 + 12);
  CHECK(lm.model.total_multiplicity() == legacy_size(4));
  CHECK(legacy_verify(lm).ok());
}

TEST_CASE("links relate to gadgets as prescribed") {
  for (const std::string name : {"k4", "prism", "petersen"}) {
    for (auto layout : {LegacyLayout::plain, LegacyLayout::length_sharing}) {
      const auto lm = legacy_build(make_instance(named_graph(name)), layout);
      CHECK_MESSAGE(legacy_verify(lm).ok(), name);
      for (int j = 1; j <= lm.m(); ++j) {
        const auto [h, h2] = lm.endpoints[j];
        for (int anchor : {h, h2}) {
          const auto& link = lm.model.classes[lm.link_of(anchor, j)];
          CHECK(link.mult == 2);
          for (int i = 1; i <= lm.n(); ++i) {
            const auto r = classify(link, lm.model, lm.vertex_gadgets[i]);
            if (i < anchor) CHECK(r == Relation::disjoint);
            if (i == anchor) CHECK(r == Relation::weak_right);
            if (i > anchor) CHECK(r == Relation::covers);
          }
          for (int e = 1; e <= lm.m(); ++e) {
            const auto r = classify(link, lm.model, lm.edge_gadgets[e]);
            if (e < j) CHECK(r == Relation::covers);
            if (e == j) CHECK(r == (anchor == h ? Relation::weak_left : Relation::strong_left));
            if (e > j) CHECK(r == Relation::disjoint);
          }
        }
      }
    }
  }
}

TEST_CASE("adversarial family nests its links") {
  for (std::size_t n : {8, 12}) {
    const auto lm = legacy_build(adversarial_instance(n));
    CHECK(legacy_verify(lm).ok());
    CHECK(nesting_chain_lower_bound(lm.model) >= n);
    const auto chain = adversarial_chain(lm);
    REQUIRE(chain);
    CHECK(chain->size() == n);
    for (std::size_t k = 0; k < chain->size(); ++k) {
      const auto& label = lm.model.classes[(*chain)[k]].label;
      CHECK((label.kind == LabelKind::legacy_link_weak || label.kind == LabelKind::legacy_link_strong));
      CHECK(label.j == static_cast<int>(k) + 1);
      if (k > 0) CHECK(strictly_inside(lm.model.classes[(*chain)[k - 1]], lm.model.classes[(*chain)[k]]));
    }
  }
  CHECK_THROWS_AS(adversarial_instance(6), Error);
}

TEST_CASE("matching orderings") {
  const auto pm = matching_orderings(petersen());
  CHECK(pm.cycles.size() == 2);
  for (const auto& c : pm.cycles) CHECK(c.size() == 5);
  CHECK(matching_orderings(k4()).cycles.size() == 1);
  const auto a = matching_orderings(prism());
  const auto b = matching_orderings(prism());
  CHECK(a.instance.pi_v == b.instance.pi_v);
  CHECK(a.instance.pi_e == b.instance.pi_e);
  CHECK((a.cycles.size() == 1 || a.cycles.size() == 2));

  // pi_V walks the cycles in order; pi_E ends with the matching by lower endpoint
  for (const std::string name : {"k4", "prism", "k33", "petersen", "moebius_kantor"}) {
    const auto mo = matching_orderings(named_graph(name));
    std::vector<std::uint32_t> walk;
    for (const auto& c : mo.cycles) walk.insert(walk.end(), c.begin(), c.end());
    CHECK(walk == mo.instance.pi_v);
    const auto pos = mo.instance.vertex_positions();
    const std::size_t n = mo.instance.n(), m = mo.instance.m();
    const std::set<Edge> matching(mo.matching.begin(), mo.matching.end());
    int last = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const auto e = mo.instance.graph.edges[mo.instance.pi_e[j]];
      CHECK((j >= m - n / 2) == (matching.count(e) == 1));
      if (j >= m - n / 2) {
        const int lower = std::min(pos[e.first], pos[e.second]);
        CHECK(lower > last);
        last = lower;
      }
    }
  }
  CHECK_THROWS_AS(matching_orderings(cycle(6)), Error);
}

TEST_CASE("interval count report") {
  const auto mo = matching_orderings(petersen());
  const auto lm = legacy_build(mo.instance, LegacyLayout::length_sharing);
  const auto r = legacy_ic_report(lm);
  CHECK_FALSE(r.hamiltonian);
  CHECK(r.upper_bound_target == 16);
  CHECK(r.measured_ic <= 16);
  CHECK(r.lower_bound >= 5);
  CHECK(r.upper_ok);
  CHECK(r.lower_ok);

  const auto k4r = legacy_ic_report(legacy_build(matching_orderings(k4()).instance, LegacyLayout::length_sharing));
  CHECK(k4r.upper_bound_target == 8);
  CHECK(k4r.measured_ic <= 8);
  CHECK(k4r.hamiltonian);

  for (const std::string name : {"k4", "prism", "k33", "petersen", "fig6:8"}) {
    for (auto layout : {LegacyLayout::plain, LegacyLayout::length_sharing}) {
      const auto rep = legacy_ic_report(legacy_build(make_instance(named_graph(name)), layout));
      CHECK(rep.lower_bound <= rep.measured_ic);
    }
  }
}

TEST_CASE("five-chain witness on Petersen") {
  const auto mo = matching_orderings(petersen());
  const auto lm = legacy_build(mo.instance, LegacyLayout::length_sharing);
  const auto chain = five_chain_witness(lm, mo);
  REQUIRE(chain);
  REQUIRE(chain->size() == 5);
  const auto& cls = lm.model.classes;
  CHECK(cls[(*chain)[0]].is_points());
  CHECK(point_inside(cls[(*chain)[0]], cls[(*chain)[1]]));
  for (std::size_t k = 2; k < 5; ++k) CHECK(strictly_inside(cls[(*chain)[k - 1]], cls[(*chain)[k]]));
  CHECK(cls[(*chain)[4]].left < cls[(*chain)[3]].left);
  CHECK(cls[(*chain)[2]].right < cls[(*chain)[3]].right);
}
