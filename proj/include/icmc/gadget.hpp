#pragma once

// (x,y)-grained gadgets inside a weighted interval model.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "icmc/interval_model.hpp"

namespace icmc {

/// Class indices of the four groups; LS/RS are point families of
/// multiplicity x, LL/RL twin classes of multiplicity y.
struct GrainedGadget {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::size_t ls = 0;
  std::size_t ll = 0;
  std::size_t rs = 0;
  std::size_t rl = 0;

  bool owns(std::size_t cls) const { return cls == ls || cls == ll || cls == rs || cls == rl; }
};

enum class Relation { disjoint, covers, weak_left, weak_right, strong_left, strong_right, invalid };

std::string to_string(Relation r);

struct RelationCensus {
  std::uint64_t cov = 0;
  std::uint64_t wl = 0;
  std::uint64_t wr = 0;
  std::uint64_t sl = 0;
  std::uint64_t sr = 0;

  friend bool operator==(const RelationCensus&, const RelationCensus&) = default;
};

/// Appends a gadget laid out on [left, left+6]: LL = [l, l+3], LS in (l+1, l+2),
/// RL = [l+3, l+6], RS in (l+4, l+5).
GrainedGadget append_gadget(WeightedIntervalModel& m, const Rat& left, std::uint64_t x, std::uint64_t y,
                            Label base = {});

/// Checks the four gadget properties (sizes, longs pairwise meet, shorts meet
/// only their own side's longs). Returns an error message or nullopt.
std::optional<std::string> gadget_shape_error(const WeightedIntervalModel& m, const GrainedGadget& h);

Relation classify(const IntervalClass& c, const WeightedIntervalModel& m, const GrainedGadget& h);

struct StructureCheck {
  bool ok = true;
  RelationCensus census;
  std::optional<std::size_t> offending;
};

StructureCheck respects_structure(const WeightedIntervalModel& m, const GrainedGadget& h);

struct WellValued {
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;

  bool all() const { return cond1 && cond2 && cond3; }
};

WellValued well_valued(const GrainedGadget& h, const RelationCensus& census);

enum class PartitionState { A_partitioned, B_partitioned, neither };

std::string to_string(PartitionState s);

PartitionState partition_state(const ClassCut& cut, const GrainedGadget& h);

/// Sets the four groups of h to the given state (must not be `neither`).
void set_partition_state(ClassCut& cut, const GrainedGadget& h, PartitionState s);

}  // namespace icmc
