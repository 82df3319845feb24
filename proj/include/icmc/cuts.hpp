#pragma once

// Multiplicity-weighted cut counting on interval models and the cut
// correspondence between a cubic graph and its reduction model.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "icmc/graphs.hpp"
#include "icmc/interval_model.hpp"
#include "icmc/reduction.hpp"

namespace icmc {

ClassCut uniform_cut(const WeightedIntervalModel& m, Side side);

/// Sum of mult(a)*mult(b) over adjacent class pairs on opposite sides.
/// Throws Error on a partial (non-uniform) adjacency.
BigInt cut_size(const WeightedIntervalModel& m, const ClassCut& cut);

/// Precomputed adjacent class pairs for repeated counting on one model.
class CutEvaluator {
 public:
  explicit CutEvaluator(const WeightedIntervalModel& m);

  BigInt cut_size(const ClassCut& cut) const;

  struct Pair {
    std::uint32_t a;
    std::uint32_t b;
    std::uint64_t weight;
  };
  const std::vector<Pair>& pairs() const { return pairs_; }

 private:
  std::size_t classes_ = 0;
  std::vector<Pair> pairs_;
};

struct AlternatingCheck {
  bool ok = true;
  // "I", "II", "III" or "IV"; empty when ok
  std::string property;
  std::string detail;
};

AlternatingCheck is_alternating_partitioned(const ReductionModel& rm, const ClassCut& cut);

/// v in X iff H(pos(v),1) is A-partitioned. Throws unless the cut is alternating.
VertexCut phi(const ReductionModel& rm, const ClassCut& cut);

ClassCut phi_inverse(const ReductionModel& rm, const VertexCut& vc);

enum class Category { c11, c12, c13, c14, c15, c21, c22, c23, c31, c32, c33, c34, c35 };

inline constexpr std::size_t kCategoryCount = 13;

std::string to_string(Category c);

struct CutBreakdown {
  std::array<BigInt, kCategoryCount> value{};

  BigInt& operator[](Category c) { return value[static_cast<std::size_t>(c)]; }
  const BigInt& operator[](Category c) const { return value[static_cast<std::size_t>(c)]; }
  BigInt total() const;
  BigInt exact_part() const;
  BigInt surplus() const;
};

/// Adjacent class pairs of a reduction model, each tagged with its category.
class BreakdownCounter {
 public:
  explicit BreakdownCounter(const ReductionModel& rm);

  /// Requires an alternating cut.
  CutBreakdown breakdown(const ClassCut& cut) const;
  BigInt cut_size(const ClassCut& cut) const;

 private:
  const ReductionModel* rm_;
  struct Tagged {
    std::uint32_t a;
    std::uint32_t b;
    std::uint64_t weight;
    Category category;
  };
  std::vector<Tagged> pairs_;
};

CutBreakdown cut_breakdown(const ReductionModel& rm, const ClassCut& cut);

/// Closed forms for the exact categories as published; c32..c35 hold their
/// upper bounds.
CutBreakdown expected_breakdown(std::size_t n, const ParameterSet& ps, std::int64_t k);

/// 2kq' + 3np', the count the edge-gadget/connector category actually takes.
BigInt exact_c23(std::size_t n, const ParameterSet& ps, std::int64_t k);

struct Window {
  BigInt size;
  std::uint64_t k = 0;
  BigInt f_k;
  BigInt f_next;
  // f(G,k) <= size <= f(G,k) + bound < f(G,k+1), against the published f
  bool in_window = false;
  // the same test against exact_alternating_floor
  bool in_exact_window = false;
  BigInt surplus_exact;
};

Window cut_window(const ReductionModel& rm, const VertexCut& vc);
Window cut_window(const ReductionModel& rm, const BreakdownCounter& counter, const VertexCut& vc);

}  // namespace icmc
