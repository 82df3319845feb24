#pragma once

// Exhaustive checks of maximum-cut behaviour of small gadgets: every maximum cut
// is inspected, either on the materialized graph or by enumerating how many
// members of each class sit on side A (exact, since members of a class share
// their neighbourhood outside the class).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "icmc/gadget.hpp"
#include "icmc/interval_model.hpp"

namespace icmc {

struct MicroSetup {
  WeightedIntervalModel model;
  GrainedGadget gadget;
  std::vector<std::size_t> coverers;
  RelationCensus census;
  WellValued conditions;
  std::string name;
};

/// Gadget on [0,6] plus weak-left [-1,0], strong-left [-1,2] and covering
/// [-1,7] twin classes of the given multiplicities (zero means absent).
MicroSetup micro_setup(std::uint64_t x, std::uint64_t y, std::uint64_t wl, std::uint64_t sl, std::uint64_t cov);

struct GadgetOutcome {
  std::uint64_t max_cut = 0;
  std::size_t maximum_cuts = 0;
  // shorts opposite longs on each side, in every maximum cut
  bool shorts_opposite = true;
  // gadget A- or B-partitioned in every maximum cut
  bool partitioned = true;
  // cut edges inside gadget + coverers unchanged by swapping the gadget
  bool swap_indifferent = true;
};

/// Brute force over the materialized graph (at most 30 vertices).
GadgetOutcome check_gadget_materialized(const MicroSetup& s);

/// Enumeration over per-class A-counts; fine while the product of
/// (multiplicity + 1) stays in the low millions.
GadgetOutcome check_gadget_by_counts(const MicroSetup& s);

}  // namespace icmc
