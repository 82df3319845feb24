#include "icmc/maxcut.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

namespace icmc {

namespace {

std::vector<std::uint64_t> adjacency_masks(const EdgeList& g) {
  if (g.vertex_count > kBruteForceMaxVertices) throw Error("brute force bound exceeded");
  std::vector<std::uint64_t> adj(g.vertex_count, 0);
  for (const auto& [u, v] : g.edges) {
    if (u >= g.vertex_count || v >= g.vertex_count) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loop in brute-force input");
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;
    if (adj[u] & bv) throw Error("parallel edge in brute-force input");
    adj[u] |= bv;
    adj[v] |= bu;
  }
  return adj;
}

struct Best {
  std::uint64_t size = 0;
  std::uint64_t mask = 0;
  bool set = false;

  void offer(std::uint64_t s, std::uint64_t m) {
    if (!set || s > size || (s == size && m < mask)) {
      size = s;
      mask = m;
      set = true;
    }
  }
};

// Gray-code walk over indices [begin, end) of the free vertices.
Best scan(const std::vector<std::uint64_t>& adj, const EdgeList& g, std::uint64_t begin, std::uint64_t end) {
  Best best;
  if (begin >= end) return best;
  std::uint64_t mask = begin ^ (begin >> 1);
  std::int64_t value = static_cast<std::int64_t>(cut_value(g, mask));
  best.offer(static_cast<std::uint64_t>(value), mask);
  for (std::uint64_t k = begin + 1; k < end; ++k) {
    const int v = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << v;
    const std::uint64_t same = (mask & bit) ? (adj[v] & mask) : (adj[v] & ~mask);
    const int same_count = std::popcount(same);
    const int degree = std::popcount(adj[v]);
    value += same_count - (degree - same_count);
    mask ^= bit;
    best.offer(static_cast<std::uint64_t>(value), mask);
  }
  return best;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("ICMC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t cut_value(const EdgeList& g, std::uint64_t a_mask) {
  std::uint64_t value = 0;
  for (const auto& [u, v] : g.edges) {
    if (((a_mask >> u) & 1) != ((a_mask >> v) & 1)) ++value;
  }
  return value;
}

MaxCutResult bruteforce_maxcut(const EdgeList& g, unsigned threads) {
  const auto adj = adjacency_masks(g);
  if (g.vertex_count <= 1) return {};
  const std::uint64_t total = std::uint64_t{1} << (g.vertex_count - 1);
  if (threads == 0) threads = default_thread_count();
  if (total < (std::uint64_t{1} << 16)) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<Best> partial(threads);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = std::min(total, w * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    if (threads == 1) {
      partial[w] = scan(adj, g, begin, end);
    } else {
      pool.emplace_back([&, w, begin, end] { partial[w] = scan(adj, g, begin, end); });
    }
  }
  for (auto& t : pool) t.join();

  Best best;
  for (const auto& b : partial) {
    if (b.set) best.offer(b.size, b.mask);
  }
  return {best.size, best.mask};
}

std::vector<std::uint64_t> all_maximum_cuts(const EdgeList& g, std::uint64_t* best_size) {
  const auto adj = adjacency_masks(g);
  std::vector<std::uint64_t> masks;
  std::uint64_t best = 0;
  const std::uint64_t total = g.vertex_count == 0 ? 1 : std::uint64_t{1} << (g.vertex_count - 1);
  std::uint64_t mask = 0;
  std::int64_t value = 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    if (k > 0) {
      const int v = std::countr_zero(k);
      const std::uint64_t bit = std::uint64_t{1} << v;
      const std::uint64_t same = (mask & bit) ? (adj[v] & mask) : (adj[v] & ~mask);
      const int same_count = std::popcount(same);
      value += same_count - (std::popcount(adj[v]) - same_count);
      mask ^= bit;
    }
    const auto size = static_cast<std::uint64_t>(value);
    if (size > best) {
      best = size;
      masks.clear();
    }
    if (size == best) masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  if (best_size) *best_size = best;
  return masks;
}

}  // namespace icmc
