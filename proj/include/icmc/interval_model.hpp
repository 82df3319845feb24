#pragma once

// Weighted interval models: classes of identical intervals (twin cliques) or
// of distinct points inside an open container (point families), with exact
// rational endpoints.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "icmc/numeric.hpp"

namespace icmc {

struct ClosedInterval {
  Rat left;
  Rat right;
};

struct OpenInterval {
  Rat left;
  Rat right;
};

/// True iff the closed intervals share at least one point (touching counts).
bool intersects(const ClosedInterval& a, const ClosedInterval& b);

enum class ClassKind { twin_clique, point_family };

enum class LabelKind {
  none,
  vertex_gadget,       // H(i,j)
  edge_gadget,         // E(j)
  link,                // L(i,j), the twins L_i^{2j-1}, L_i^{2j}
  connector12,         // C_j^1, C_j^2
  connector34,         // C_j^3, C_j^4
  legacy_vertex,       // G(v_i)
  legacy_edge,         // G(e_j)
  legacy_link_weak,    // I_{i,j} for the lower endpoint of e_j
  legacy_link_strong,  // I_{i',j} for the upper endpoint of e_j
};

enum class Group { none, left_short, left_long, right_short, right_long };

/// Structured tag; i and j are 1-based positions in the vertex / edge order.
struct Label {
  LabelKind kind = LabelKind::none;
  int i = 0;
  int j = 0;
  Group group = Group::none;

  friend bool operator==(const Label&, const Label&) = default;
};

std::string to_string(LabelKind kind);
std::string to_string(Group group);
std::string describe(const Label& label);
LabelKind parse_label_kind(const std::string& text);
Group parse_group(const std::string& text);

struct IntervalClass {
  // For a point family, left/right repeat the container bounds.
  Rat left;
  Rat right;
  std::uint64_t mult = 1;
  ClassKind kind = ClassKind::twin_clique;
  std::optional<OpenInterval> container;
  Label label;

  static IntervalClass twins(Rat left, Rat right, std::uint64_t mult, Label label = {});
  static IntervalClass points(Rat left_open, Rat right_open, std::uint64_t mult, Label label = {});

  bool is_points() const { return kind == ClassKind::point_family; }
  /// Length of every member: 0 for point families.
  Rat length() const;
  ClosedInterval span() const { return {left, right}; }
};

struct WeightedIntervalModel {
  std::vector<IntervalClass> classes;

  std::size_t size() const { return classes.size(); }
  bool empty() const { return classes.empty(); }
  BigInt total_multiplicity() const;
  /// Throws Error if a class is malformed (left > right, empty container, ...).
  void validate() const;
};

/// Adjacency between members of two distinct classes. `partial` means the
/// members would not all share the same neighbourhood (a point container
/// straddles an endpoint), which violates the uniform-adjacency rule.
enum class Adjacency { none, full, partial };

Adjacency class_adjacency(const IntervalClass& a, const IntervalClass& b);

/// True iff every member of `inner` lies inside the closed span of `outer`.
bool class_contained_in(const IntervalClass& inner, const IntervalClass& outer);

/// Distinct member lengths, point families contributing 0.
std::set<Rat> length_set(const WeightedIntervalModel& m);

/// Number of distinct lengths. Throws Error("empty model") on an empty model.
std::size_t interval_count(const WeightedIntervalModel& m);

/// Longest chain of class representatives, each strictly inside the next on
/// both sides. A point family's representative is one of its points.
std::size_t nesting_chain_lower_bound(const WeightedIntervalModel& m);

/// Same as above but returns the class indices of one longest chain, innermost first.
std::vector<std::size_t> longest_nesting_chain(const WeightedIntervalModel& m);

enum class Side : std::uint8_t { A, B };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

/// Side per class index. Classes are never split.
struct ClassCut {
  std::vector<Side> side;

  friend bool operator==(const ClassCut&, const ClassCut&) = default;
};

struct EdgeList {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct MaterializedGraph {
  EdgeList graph;
  std::vector<ClosedInterval> intervals;
  std::vector<std::size_t> class_of;
};

/// Expands every class to explicit intervals and builds the intersection
/// graph. Point families get evenly spaced points strictly inside their
/// container. Throws Error("model too large to materialize") beyond `limit`.
MaterializedGraph materialize(const WeightedIntervalModel& m, std::size_t limit);

/// Writes "p edge V E" followed by 1-indexed "e u v" lines.
std::string to_dimacs(const EdgeList& g);

}  // namespace icmc
