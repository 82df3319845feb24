#include <doctest.h>

#include <set>

#include "icmc/graphs.hpp"
#include "oracles.hpp"

using namespace icmc;

TEST_CASE("cubic validation") {
  CHECK(validate_cubic(k4()));
  CHECK_FALSE(validate_cubic(cycle(5)));
  CHECK_FALSE(validate_cubic(cycle(6)));
  CHECK(validate_cubic(petersen()));
  for (const auto& name : generator_names()) {
    if (name.rfind("fig6", 0) == 0) continue;
    CHECK_MESSAGE(validate_cubic(named_graph(name)), name);
  }
}

TEST_CASE("generator sizes") {
  CHECK(k4().n == 4);
  CHECK(k4().edges.size() == 6);
  CHECK(prism().n == 6);
  CHECK(k33().n == 6);
  CHECK(petersen().n == 10);
  CHECK(moebius_kantor().n == 16);
  for (std::size_t n : {8, 10, 12, 20}) {
    const auto g = fig6(n);
    CHECK(g.n == n);
    CHECK(g.edges.size() == n + n / 2);
    CHECK(validate_cubic(g));
  }
  const auto g = fig6(8);
  std::set<Edge> edges(g.edges.begin(), g.edges.end());
  for (std::uint32_t i = 0; i < 4; ++i) CHECK(edges.count({i, i + 4}));
  CHECK_THROWS_AS(fig6(6), Error);
  CHECK_THROWS_AS(fig6(9), Error);
  CHECK(named_graph("fig6:10").n == 10);
  CHECK_THROWS_AS(named_graph("dodecahedron"), Error);
}

TEST_CASE("bridges") {
  for (const std::string name : {"k4", "prism", "k33", "petersen", "moebius_kantor"}) {
    const auto g = named_graph(name);
    bool bridge = false;
    for (std::size_t e = 0; e < g.edges.size(); ++e) bridge = bridge || !oracle::connected_without(g, e);
    CHECK_MESSAGE(is_bridgeless(g) == !bridge, name);
    CHECK(is_bridgeless(g));
  }
  // two triangles joined by one edge
  const auto g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  CHECK_FALSE(is_bridgeless(g));
  CHECK_FALSE(validate_cubic(g));
}

TEST_CASE("hamiltonicity") {
  CHECK(is_hamiltonian(k4()));
  CHECK(is_hamiltonian(prism()));
  CHECK_FALSE(is_hamiltonian(petersen()));
  CHECK(oracle::hamiltonian(petersen()) == false);
  CHECK(is_hamiltonian(fig6(8)) == oracle::hamiltonian(fig6(8)));
}

TEST_CASE("perfect matchings are lexicographically least") {
  const auto m4 = perfect_matching(k4());
  REQUIRE(m4);
  CHECK(*m4 == std::vector<Edge>{{0, 1}, {2, 3}});
  for (const std::string name : {"prism", "k33", "petersen", "fig6:8", "fig6:10"}) {
    const auto g = named_graph(name);
    const auto m = perfect_matching(g);
    REQUIRE(m);
    CHECK_MESSAGE(*m == oracle::perfect_matchings(g).front(), name);
  }
  CHECK_FALSE(perfect_matching(cycle(5)));
  CHECK_THROWS_WITH_AS(perfect_matching(fig6(26)), "search bound exceeded", Error);
}

TEST_CASE("removing a perfect matching leaves a 2-regular graph") {
  for (const std::string name : {"k4", "prism", "k33", "petersen", "moebius_kantor"}) {
    const auto g = named_graph(name);
    const auto m = perfect_matching(g);
    REQUIRE(m);
    std::vector<int> covered(g.n, 0), degree(g.n, 0);
    for (const auto& [u, v] : *m) ++covered[u], ++covered[v];
    const std::set<Edge> in_m(m->begin(), m->end());
    for (const auto& e : g.edges) {
      if (!in_m.count(e)) ++degree[e.first], ++degree[e.second];
    }
    for (std::size_t v = 0; v < g.n; ++v) {
      CHECK(covered[v] == 1);
      CHECK(degree[v] == 2);
    }
  }
}

TEST_CASE("graph maximum cut") {
  CHECK(maxcut(k4()).k == 4);
  CHECK(maxcut(prism()).k == 7);
  CHECK(maxcut(make_graph(2, {{0, 1}})).k == 1);
  for (const std::string name : {"k4", "prism", "k33", "petersen", "fig6:8", "fig6:12", "moebius_kantor"}) {
    const auto g = named_graph(name);
    const auto r = maxcut(g);
    CHECK_MESSAGE(r.k == oracle::maxcut(g.n, g.edges), name);
    CHECK(cut_edges(g, r.cut) == r.k);
  }
}

TEST_CASE("instances and orderings") {
  auto inst = make_instance(k4());
  CHECK(inst.m() == 6);
  CHECK_NOTHROW(inst.validate());
  CHECK(inst.vertex_positions() == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(make_instance(k4(), {0, 1, 2, 2}, {0, 1, 2, 3, 4, 5}), Error);
  CHECK_THROWS_AS(make_instance(k4(), {0, 1, 2, 3}, {0, 1, 2, 3, 4}), Error);
  CHECK_THROWS_AS(make_instance(cycle(6)), Error);
  const auto adv = adversarial_instance(8);
  CHECK(adv.pi_v == std::vector<std::uint32_t>{7, 6, 5, 4, 3, 2, 1, 0});
  // the first n edges are the cycle edges
  for (std::size_t j = 0; j < 8; ++j) {
    const auto [u, v] = adv.graph.edges[adv.pi_e[j]];
    CHECK((v - u == 1 || (u == 0 && v == 7)));
  }
  CHECK_THROWS_AS(make_graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), Error);
}

TEST_CASE("vertex cuts") {
  const auto vc = vertex_cut_from_mask(4, 0b0011);
  CHECK(vc.in_x == std::vector<bool>{true, true, false, false});
  CHECK(cut_edges(k4(), vc) == 4);
}

TEST_CASE("graph formats round trip") {
  const auto g = petersen();
  const auto back = parse_dimacs(graph_to_dimacs(g));
  CHECK(back.n == g.n);
  CHECK(back.edges == g.edges);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), Error);

  const auto inst = make_instance(prism(), {5, 4, 3, 2, 1, 0}, {8, 7, 6, 5, 4, 3, 2, 1, 0});
  const auto again = parse_instance_json(instance_to_json(inst));
  CHECK(again.pi_v == inst.pi_v);
  REQUIRE(again.pi_e.size() == inst.pi_e.size());
  for (std::size_t j = 0; j < inst.pi_e.size(); ++j) {
    CHECK(again.graph.edges[again.pi_e[j]] == inst.graph.edges[inst.pi_e[j]]);
  }
  CHECK_THROWS_AS(parse_instance_json("{\"n\": 4}"), Error);
  CHECK_THROWS_AS(parse_instance_json("not json"), Error);
}
