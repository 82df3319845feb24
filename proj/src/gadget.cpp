#include "icmc/gadget.hpp"

namespace icmc {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::disjoint: return "disjoint";
    case Relation::covers: return "covers";
    case Relation::weak_left: return "weak_left";
    case Relation::weak_right: return "weak_right";
    case Relation::strong_left: return "strong_left";
    case Relation::strong_right: return "strong_right";
    case Relation::invalid: return "invalid";
  }
  return "invalid";
}

std::string to_string(PartitionState s) {
  switch (s) {
    case PartitionState::A_partitioned: return "A_partitioned";
    case PartitionState::B_partitioned: return "B_partitioned";
    case PartitionState::neither: return "neither";
  }
  return "neither";
}

GrainedGadget append_gadget(WeightedIntervalModel& m, const Rat& left, std::uint64_t x, std::uint64_t y,
                            Label base) {
  GrainedGadget h;
  h.x = x;
  h.y = y;
  auto tagged = [&](Group g) {
    Label l = base;
    l.group = g;
    return l;
  };
  h.ll = m.classes.size();
  m.classes.push_back(IntervalClass::twins(left, left + 3, y, tagged(Group::left_long)));
  h.ls = m.classes.size();
  m.classes.push_back(IntervalClass::points(left + 1, left + 2, x, tagged(Group::left_short)));
  h.rl = m.classes.size();
  m.classes.push_back(IntervalClass::twins(left + 3, left + 6, y, tagged(Group::right_long)));
  h.rs = m.classes.size();
  m.classes.push_back(IntervalClass::points(left + 4, left + 5, x, tagged(Group::right_short)));
  return h;
}

std::optional<std::string> gadget_shape_error(const WeightedIntervalModel& m, const GrainedGadget& h) {
  for (auto idx : {h.ls, h.ll, h.rs, h.rl}) {
    if (idx >= m.size()) return "gadget class index out of range";
  }
  const auto& ls = m.classes[h.ls];
  const auto& ll = m.classes[h.ll];
  const auto& rs = m.classes[h.rs];
  const auto& rl = m.classes[h.rl];
  if (!ls.is_points() || !rs.is_points()) return "short groups must be point families";
  if (ll.is_points() || rl.is_points()) return "long groups must be twin classes";
  if (ls.mult != h.x || rs.mult != h.x) return "short group size differs from x";
  if (ll.mult != h.y || rl.mult != h.y) return "long group size differs from y";
  if (class_adjacency(ll, rl) != Adjacency::full) return "left and right long intervals do not intersect";
  if (class_adjacency(ls, ll) != Adjacency::full || class_adjacency(ls, rl) != Adjacency::none) {
    return "left shorts must meet exactly the left longs";
  }
  if (class_adjacency(rs, rl) != Adjacency::full || class_adjacency(rs, ll) != Adjacency::none) {
    return "right shorts must meet exactly the right longs";
  }
  if (class_adjacency(ls, rs) != Adjacency::none) return "left and right shorts intersect";
  return std::nullopt;
}

Relation classify(const IntervalClass& c, const WeightedIntervalModel& m, const GrainedGadget& h) {
  bool meets[4];
  const std::size_t groups[4] = {h.ls, h.ll, h.rs, h.rl};
  for (int g = 0; g < 4; ++g) {
    const auto a = class_adjacency(c, m.classes[groups[g]]);
    if (a == Adjacency::partial) return Relation::invalid;
    meets[g] = a == Adjacency::full;
  }
  const auto [ls, ll, rs, rl] = meets;
  if (!ls && !ll && !rs && !rl) return Relation::disjoint;
  if (ls && ll && rs && rl) {
    for (auto idx : groups) {
      if (!class_contained_in(m.classes[idx], c)) return Relation::invalid;
    }
    return Relation::covers;
  }
  if (!rs && !rl) {
    if (ll && !ls) return Relation::weak_left;
    if (ll && ls) return Relation::strong_left;
  }
  if (!ls && !ll) {
    if (rl && !rs) return Relation::weak_right;
    if (rl && rs) return Relation::strong_right;
  }
  return Relation::invalid;
}

StructureCheck respects_structure(const WeightedIntervalModel& m, const GrainedGadget& h) {
  StructureCheck out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (h.owns(k)) continue;
    const auto& c = m.classes[k];
    switch (classify(c, m, h)) {
      case Relation::disjoint: break;
      case Relation::covers: out.census.cov += c.mult; break;
      case Relation::weak_left: out.census.wl += c.mult; break;
      case Relation::weak_right: out.census.wr += c.mult; break;
      case Relation::strong_left: out.census.sl += c.mult; break;
      case Relation::strong_right: out.census.sr += c.mult; break;
      case Relation::invalid:
        out.ok = false;
        out.offending = k;
        return out;
    }
  }
  return out;
}

WellValued well_valued(const GrainedGadget& h, const RelationCensus& c) {
  const BigInt x = h.x, y = h.y;
  const BigInt cov = c.cov, wl = c.wl, wr = c.wr, sl = c.sl, sr = c.sr;
  WellValued w;
  w.cond1 = (y + sl + cov) % 2 == 1 && x > 2 * y - 1 + wl + sl + cov;
  w.cond2 = (y + sr + cov) % 2 == 1 && x > 2 * y - 1 + wr + sr + cov;
  w.cond3 = y * y > y * wr + (x - y) * (sr + cov);
  return w;
}

PartitionState partition_state(const ClassCut& cut, const GrainedGadget& h) {
  const Side ls = cut.side.at(h.ls), ll = cut.side.at(h.ll), rs = cut.side.at(h.rs), rl = cut.side.at(h.rl);
  if (ls == Side::A && rl == Side::A && rs == Side::B && ll == Side::B) return PartitionState::A_partitioned;
  if (ls == Side::B && rl == Side::B && rs == Side::A && ll == Side::A) return PartitionState::B_partitioned;
  return PartitionState::neither;
}

void set_partition_state(ClassCut& cut, const GrainedGadget& h, PartitionState s) {
  if (s == PartitionState::neither) throw Error("cannot assign the 'neither' partition state");
  const Side main = s == PartitionState::A_partitioned ? Side::A : Side::B;
  cut.side.at(h.ls) = main;
  cut.side.at(h.rl) = main;
  cut.side.at(h.rs) = opposite(main);
  cut.side.at(h.ll) = opposite(main);
}

}  // namespace icmc
