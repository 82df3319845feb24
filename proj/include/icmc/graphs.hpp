#pragma once

// Cubic source instances: graphs, orderings, generators and small exact
// searches (bridges, perfect matchings, Hamiltonian cycles, MaxCut).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icmc/interval_model.hpp"

namespace icmc {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v.
struct Graph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  std::vector<std::vector<std::uint32_t>> adjacency() const;
  EdgeList edge_list() const { return {n, edges}; }
};

/// Builds a graph, normalizing each edge to (min, max). Throws on loops,
/// parallel edges or out-of-range endpoints.
Graph make_graph(std::size_t n, const std::vector<Edge>& edges);

/// A cubic graph with vertex order pi_v (pi_v[pos] = vertex) and edge order
/// pi_e (pi_e[pos] = index into graph.edges).
struct CubicInstance {
  Graph graph;
  std::vector<std::uint32_t> pi_v;
  std::vector<std::uint32_t> pi_e;

  std::size_t n() const { return graph.n; }
  std::size_t m() const { return graph.edges.size(); }
  /// 1-based position of each vertex in pi_v.
  std::vector<int> vertex_positions() const;
  /// Throws Error unless the graph is cubic and both orderings are bijections.
  void validate() const;
};

/// Default orderings: vertices by label, edges lexicographically.
CubicInstance make_instance(Graph g);
CubicInstance make_instance(Graph g, std::vector<std::uint32_t> pi_v, std::vector<std::uint32_t> pi_e);

/// true = side X.
struct VertexCut {
  std::vector<bool> in_x;

  friend bool operator==(const VertexCut&, const VertexCut&) = default;
};

/// Cut whose X side is the set bits of `mask`.
VertexCut vertex_cut_from_mask(std::size_t n, std::uint64_t mask);
std::uint64_t cut_edges(const Graph& g, const VertexCut& cut);

bool validate_cubic(const Graph& g);

Graph k4();
Graph prism();
Graph k33();
Graph petersen();
Graph moebius_kantor();
/// Even cycle 0..n-1 plus the chords (i, i+n/2). Requires n even, n >= 8.
Graph fig6(std::size_t n);
Graph cycle(std::size_t n);

/// k4, prism, k33, petersen, moebius_kantor, fig6:<n>.
Graph named_graph(const std::string& name);
std::vector<std::string> generator_names();

bool is_bridgeless(const Graph& g);

/// Lexicographically least perfect matching in edge order (edges sorted), or
/// nullopt. Throws Error("search bound exceeded") for n > 24.
std::optional<std::vector<Edge>> perfect_matching(const Graph& g);

/// Exhaustive Hamiltonian-cycle search. Throws Error("search bound exceeded") for n > 24.
bool is_hamiltonian(const Graph& g);

struct GraphMaxCut {
  std::uint64_t k = 0;
  VertexCut cut;
};

GraphMaxCut maxcut(const Graph& g);

/// fig6(n) with pi_V = (v_n, ..., v_1) and the cycle edges first.
CubicInstance adversarial_instance(std::size_t n);

/// DIMACS "p edge" format, 1-indexed.
Graph parse_dimacs(const std::string& text);
std::string graph_to_dimacs(const Graph& g);

/// {"n": N, "adjacency": [[...], ...]} with optional "pi_v" / "pi_e" arrays.
CubicInstance parse_instance_json(const std::string& text);
std::string instance_to_json(const CubicInstance& inst);

/// Graph by generator name or from a .json / DIMACS file.
CubicInstance load_instance(const std::string& name_or_path);

}  // namespace icmc
