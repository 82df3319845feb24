#pragma once

// Deliberately naive reference computations for the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "icmc/graphs.hpp"
#include "icmc/interval_model.hpp"

namespace oracle {

// Tries every subset, no symmetry breaking.
inline std::uint64_t maxcut(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t k = 0;
    for (const auto& [u, v] : edges) k += ((mask >> u) & 1) != ((mask >> v) & 1);
    best = std::max(best, k);
  }
  return best;
}

inline bool connected_without(const icmc::Graph& g, std::size_t skip) {
  std::vector<std::vector<std::uint32_t>> adj(g.n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (e == skip) continue;
    adj[g.edges[e].first].push_back(g.edges[e].second);
    adj[g.edges[e].second].push_back(g.edges[e].first);
  }
  std::vector<bool> seen(g.n, false);
  std::queue<std::uint32_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const auto u = todo.front();
    todo.pop();
    for (auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        todo.push(v);
      }
    }
  }
  return count == g.n;
}

// Fixes vertex 0 and walks all permutations of the rest.
inline bool hamiltonian(const icmc::Graph& g) {
  std::vector<std::vector<bool>> a(g.n, std::vector<bool>(g.n, false));
  for (const auto& [u, v] : g.edges) a[u][v] = a[v][u] = true;
  std::vector<std::uint32_t> rest;
  for (std::uint32_t v = 1; v < g.n; ++v) rest.push_back(v);
  do {
    bool ok = a[0][rest.front()] && a[rest.back()][0];
    for (std::size_t k = 0; ok && k + 1 < rest.size(); ++k) ok = a[rest[k]][rest[k + 1]];
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// All perfect matchings as sorted edge lists, by subset enumeration.
inline std::vector<std::vector<icmc::Edge>> perfect_matchings(const icmc::Graph& g) {
  std::vector<std::vector<icmc::Edge>> out;
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  const std::size_t want = g.n / 2;
  std::vector<icmc::Edge> pick;
  std::vector<bool> used(g.n, false);
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (pick.size() == want) {
      out.push_back(pick);
      return;
    }
    for (std::size_t e = from; e < edges.size(); ++e) {
      const auto [u, v] = edges[e];
      if (used[u] || used[v]) continue;
      used[u] = used[v] = true;
      pick.push_back(edges[e]);
      go(e + 1);
      pick.pop_back();
      used[u] = used[v] = false;
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Explicit intervals, explicit pairwise test.
inline std::size_t count_intersections(const std::vector<std::pair<double, double>>& iv) {
  std::size_t k = 0;
  for (std::size_t a = 0; a < iv.size(); ++a) {
    for (std::size_t b = a + 1; b < iv.size(); ++b) {
      if (std::max(iv[a].first, iv[b].first) <= std::min(iv[a].second, iv[b].second)) ++k;
    }
  }
  return k;
}

// Edges of the materialized graph across a class cut.
inline std::uint64_t materialized_cut(const icmc::MaterializedGraph& mg, const icmc::ClassCut& cut) {
  std::uint64_t k = 0;
  for (const auto& [u, v] : mg.graph.edges) k += cut.side[mg.class_of[u]] != cut.side[mg.class_of[v]];
  return k;
}

}  // namespace oracle
