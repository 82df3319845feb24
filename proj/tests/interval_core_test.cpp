#include <doctest.h>

#include "icmc/gadget.hpp"
#include "icmc/interval_model.hpp"
#include "oracles.hpp"

using namespace icmc;

namespace {

ClosedInterval iv(long long a, long long b, long long den = 1) { return {make_rat(a, den), make_rat(b, den)}; }

WeightedIntervalModel twins_model(std::initializer_list<std::pair<int, int>> spans) {
  WeightedIntervalModel m;
  for (auto [a, b] : spans) m.classes.push_back(IntervalClass::twins(Rat(a), Rat(b), 1));
  return m;
}

}  // namespace

TEST_CASE("rationals parse to canonical form") {
  CHECK(parse_rat("6/4") == make_rat(3, 2));
  CHECK(format_rat(parse_rat("6/4")) == "3/2");
  CHECK(format_rat(parse_rat("-10/5")) == "-2");
  CHECK(format_rat(parse_rat("+7")) == "7");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("1/-2"), Error);
  CHECK_THROWS_AS(parse_rat("x"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK(make_rat(1, 3) < make_rat(1, 2));
}

TEST_CASE("closed intervals intersect when they touch") {
  CHECK(intersects(iv(0, 1), iv(1, 2)));
  CHECK_FALSE(intersects(iv(0, 1), iv(2, 3)));
  // long intervals of the first vertex gadget, i = 3, in halves
  const int i = 3;
  CHECK(intersects(iv(4 * i - 3, 4 * i - 2, 2), iv(4 * i - 4, 4 * i - 3, 2)));
  CHECK(intersects(iv(2, 5), iv(2, 5)));
}

TEST_CASE("interval count") {
  CHECK(interval_count(twins_model({{0, 1}, {2, 3}})) == 1);
  CHECK(interval_count(twins_model({{0, 1}, {0, 2}})) == 2);
  WeightedIntervalModel m = twins_model({{0, 1}});
  m.classes.push_back(IntervalClass::points(Rat(3), Rat(4), 5));
  m.classes.push_back(IntervalClass::points(Rat(7), Rat(9), 2));
  CHECK(interval_count(m) == 2);
  CHECK_THROWS_WITH_AS(interval_count(WeightedIntervalModel{}), "empty model", Error);
}

TEST_CASE("nesting chain") {
  CHECK(nesting_chain_lower_bound(twins_model({{0, 3}, {1, 2}})) == 2);
  CHECK(nesting_chain_lower_bound(twins_model({{0, 1}, {2, 3}})) == 1);
  // sharing an endpoint is not strict nesting
  CHECK(nesting_chain_lower_bound(twins_model({{0, 3}, {0, 2}})) == 1);
  CHECK(nesting_chain_lower_bound(twins_model({{0, 10}, {1, 9}, {2, 8}, {3, 4}, {5, 6}})) == 4);
  WeightedIntervalModel m = twins_model({{0, 4}});
  m.classes.push_back(IntervalClass::points(Rat(1), Rat(2), 3));
  CHECK(nesting_chain_lower_bound(m) == 2);
  CHECK(nesting_chain_lower_bound(WeightedIntervalModel{}) == 0);
}

TEST_CASE("materialize a (2,1) gadget") {
  WeightedIntervalModel m;
  append_gadget(m, Rat(0), 2, 1);
  const auto mg = materialize(m, 100);
  CHECK(mg.graph.vertex_count == 6);
  // hand-placed copy: longs [0,3] and [3,6], left points in (1,2), right in (4,5)
  CHECK(mg.graph.edges.size() == oracle::count_intersections({{0, 3}, {3, 6}, {1.3, 1.3}, {1.6, 1.6}, {4.3, 4.3}, {4.6, 4.6}}));
  CHECK(mg.graph.edges.size() == 5);
}

TEST_CASE("materialize single classes") {
  WeightedIntervalModel clique;
  clique.classes.push_back(IntervalClass::twins(Rat(0), Rat(1), 3));
  CHECK(materialize(clique, 10).graph.edges.size() == 3);

  WeightedIntervalModel points;
  points.classes.push_back(IntervalClass::points(Rat(0), Rat(1), 3));
  const auto mg = materialize(points, 10);
  CHECK(mg.graph.vertex_count == 3);
  CHECK(mg.graph.edges.empty());
  for (const auto& p : mg.intervals) {
    CHECK(p.left == p.right);
    CHECK(Rat(0) < p.left);
    CHECK(p.left < Rat(1));
  }
  CHECK_THROWS_WITH_AS(materialize(points, 2), "model too large to materialize", Error);
}

TEST_CASE("uniform adjacency") {
  const auto seg = IntervalClass::twins(Rat(0), Rat(2), 1);
  CHECK(class_adjacency(seg, IntervalClass::points(Rat(0), Rat(1), 2)) == Adjacency::full);
  CHECK(class_adjacency(seg, IntervalClass::points(Rat(2), Rat(3), 2)) == Adjacency::none);
  CHECK(class_adjacency(seg, IntervalClass::points(Rat(1), Rat(3), 2)) == Adjacency::partial);
  CHECK(class_adjacency(IntervalClass::points(Rat(0), Rat(1), 2), IntervalClass::points(Rat(1), Rat(2), 2)) ==
        Adjacency::none);
  CHECK(class_adjacency(IntervalClass::points(Rat(0), Rat(2), 2), IntervalClass::points(Rat(1), Rat(3), 2)) ==
        Adjacency::partial);
}

TEST_CASE("model validation") {
  WeightedIntervalModel m;
  m.classes.push_back(IntervalClass::twins(Rat(2), Rat(1), 1));
  CHECK_THROWS_AS(m.validate(), Error);
  m.classes[0] = IntervalClass::twins(Rat(1), Rat(2), 0);
  CHECK_THROWS_AS(m.validate(), Error);
  m.classes[0] = IntervalClass::points(Rat(1), Rat(1), 2);
  CHECK_THROWS_AS(m.validate(), Error);
  m.classes[0] = IntervalClass::points(Rat(1), Rat(2), 2);
  CHECK_NOTHROW(m.validate());
}

TEST_CASE("dimacs export") {
  WeightedIntervalModel m;
  m.classes.push_back(IntervalClass::twins(Rat(0), Rat(1), 2));
  CHECK(to_dimacs(materialize(m, 10).graph) == "p edge 2 1\ne 1 2\n");
}
