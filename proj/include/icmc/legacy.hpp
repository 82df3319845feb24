#pragma once

// The older reduction: one grained gadget per vertex and per edge, joined by
// twin link intervals, with no control over interval lengths.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icmc/gadget.hpp"
#include "icmc/graphs.hpp"
#include "icmc/reduction.hpp"

namespace icmc {

/// q = 200n^3+1, p = 2q+7n, q' = 10n^2+1, p' = 2q'+7n.
ParameterSet legacy_parameters(std::size_t n);

/// n(2p+2q) + m(2p'+2q') + 4m under the legacy schedule.
BigInt legacy_size(std::size_t n);

/// 1200n^4 + 90n^3 + 25n^2 + 21n, the closed form quoted for legacy_size.
BigInt legacy_size_polynomial(std::size_t n);

enum class LegacyLayout {
  // vertex cells every 2 units, then edge cells every 2 units
  plain,
  // edge cells placed greedily to reuse existing link lengths
  length_sharing,
};

struct LegacyModel {
  WeightedIntervalModel model;
  CubicInstance instance;
  ParameterSet params;
  LegacyLayout layout = LegacyLayout::plain;

  // by 1-based position; index 0 unused
  std::vector<GrainedGadget> vertex_gadgets;
  std::vector<GrainedGadget> edge_gadgets;
  std::vector<std::size_t> weak_links;
  std::vector<std::size_t> strong_links;
  std::vector<std::pair<int, int>> endpoints;
  std::vector<Rat> vertex_x;
  std::vector<Rat> edge_y;

  int n() const { return static_cast<int>(instance.n()); }
  int m() const { return static_cast<int>(instance.m()); }
  /// Link class joining the vertex at position i to edge j.
  std::size_t link_of(int i, int j) const;
};

LegacyModel legacy_build(const CubicInstance& inst, LegacyLayout layout = LegacyLayout::plain);
LegacyModel legacy_build(const CubicInstance& inst, const ParameterSet& params, LegacyLayout layout);

/// Gadget shapes, link relations and covering pattern.
StructureReport legacy_verify(const LegacyModel& lm);

struct MatchingOrderings {
  CubicInstance instance;
  std::vector<Edge> matching;
  // cycles of G minus the matching, as vertex sequences
  std::vector<std::vector<std::uint32_t>> cycles;
};

/// Orderings built from a perfect matching M: pi_V runs through the cycles of
/// G - M, pi_E lists each cycle's edges then M by lower endpoint position.
MatchingOrderings matching_orderings(const Graph& g);

struct LegacyIcReport {
  std::size_t measured_ic = 0;
  std::size_t lower_bound = 0;
  std::size_t upper_bound_target = 0;
  bool hamiltonian = false;
  bool upper_ok = false;
  // lower_bound >= 5, required only for non-Hamiltonian graphs
  bool lower_ok = false;
};

LegacyIcReport legacy_ic_report(const LegacyModel& lm);

/// The chain point < right long < three links for a non-Hamiltonian graph
/// under matching orderings. Class indices innermost first, or nullopt if the
/// nesting does not hold.
std::optional<std::vector<std::size_t>> five_chain_witness(const LegacyModel& lm, const MatchingOrderings& mo);

/// Links I(v_k, e_k) for k = 1..n of the adversarial fig6 instance, if they
/// form a strictly nested chain.
std::optional<std::vector<std::size_t>> adversarial_chain(const LegacyModel& lm);

}  // namespace icmc
