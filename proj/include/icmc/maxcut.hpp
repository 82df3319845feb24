#pragma once

// Exhaustive MaxCut for small simple graphs.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "icmc/interval_model.hpp"

namespace icmc {

inline constexpr std::size_t kBruteForceMaxVertices = 30;

struct MaxCutResult {
  std::uint64_t size = 0;
  // bit v set iff vertex v is on side A
  std::uint64_t a_mask = 0;
};

/// Maximum cut by enumerating the 2^(V-1) bipartitions with the last vertex on
/// side B. Ties go to the numerically smallest A-mask. `threads` = 0 picks
/// ICMC_THREADS or the hardware concurrency.
MaxCutResult bruteforce_maxcut(const EdgeList& g, unsigned threads = 0);

/// Every A-mask (last vertex on side B) reaching the maximum, ascending.
std::vector<std::uint64_t> all_maximum_cuts(const EdgeList& g, std::uint64_t* best_size = nullptr);

/// Number of edges with endpoints on opposite sides of `a_mask`.
std::uint64_t cut_value(const EdgeList& g, std::uint64_t a_mask);

unsigned default_thread_count();

}  // namespace icmc
