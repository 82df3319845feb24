#pragma once

// The interval model M(G) built from a cubic instance, its parameter
// schedule, the target value f(G,k) and the structural verifier.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "icmc/gadget.hpp"
#include "icmc/graphs.hpp"
#include "icmc/interval_model.hpp"

namespace icmc {

struct ParameterSet {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t pe = 0;
  std::uint64_t qe = 0;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// q = 28n^3+1, p = 2q+7n, q' = 18n^3+1, p' = 2q'+5n. Requires n >= 4 even.
ParameterSet parameters(std::size_t n);

void check_even_order(std::size_t n);

struct ReductionModel {
  WeightedIntervalModel model;
  CubicInstance instance;
  ParameterSet params;
  std::int64_t t = 0;

  // H(i,j) for i in [1,n], j in [1,m+1]; everything else for j in [1,m].
  const GrainedGadget& vertex_gadget(int i, int j) const;
  const GrainedGadget& edge_gadget(int j) const;
  std::size_t link(int i, int j) const;
  std::size_t c12(int j) const;
  std::size_t c34(int j) const;
  /// 1-based positions (h, h') of the endpoints of e_j in pi_V, h < h'.
  std::pair<int, int> endpoints(int j) const;

  int n() const { return static_cast<int>(instance.n()); }
  int m() const { return static_cast<int>(instance.m()); }

  std::vector<GrainedGadget> vertex_gadgets_;
  std::vector<GrainedGadget> edge_gadgets_;
  std::vector<std::size_t> links_;
  std::vector<std::size_t> c12_;
  std::vector<std::size_t> c34_;
  std::vector<std::pair<int, int>> endpoints_;
};

ReductionModel build_model(const CubicInstance& inst, const ParameterSet& params);

/// Recovers the class index tables of a model read back from disk. Throws if
/// the labels do not describe a complete reduction model for `inst`.
ReductionModel index_model(WeightedIntervalModel model, const CubicInstance& inst, const ParameterSet& params);

/// The published closed form
/// (3n^2/2+n)(2pq+q^2) + 3n/2(2p'q'+q'^2) + 6nq(n+1) + (3n^2+3n)(n-1)(p+q)
///   + 3n^2(p'+q') + 3n((k+1)q'+p') + 4k.
BigInt f(std::size_t n, const ParameterSet& params, std::int64_t k);
BigInt f(const CubicInstance& inst, std::int64_t k);

/// Same sum with the edge-gadget/connector term replaced by its exact count
/// 2kq' + 3np'.
BigInt exact_alternating_floor(std::size_t n, const ParameterSet& params, std::int64_t k);

/// 9n^3/2 + 13n^2 - 16n.
BigInt surplus_bound(std::size_t n);

struct CheckResult {
  std::string name;
  std::string subject;
  bool ok = true;
  std::string detail;
};

struct StructureReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  std::vector<CheckResult> failures() const;
  std::string to_json() const;
};

StructureReport verify_structure(const ReductionModel& rm);

struct IntervalCountFive {
  bool ok = false;
  std::set<Rat> lengths;
};

/// Interval count 5 with lengths {0, 1/2, 2n-1, 4n-6, 6n-6}.
IntervalCountFive verify_interval_count_five(const ReductionModel& rm);

std::set<Rat> expected_lengths(std::size_t n);

}  // namespace icmc
