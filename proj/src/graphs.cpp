#include "icmc/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "icmc/maxcut.hpp"

namespace icmc {

using nlohmann::json;

std::vector<std::vector<std::uint32_t>> Graph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  Graph g;
  g.n = n;
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw Error("parallel edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
    }
    g.edges.push_back({u, v});
  }
  return g;
}

std::vector<int> CubicInstance::vertex_positions() const {
  std::vector<int> pos(graph.n, 0);
  for (std::size_t k = 0; k < pi_v.size(); ++k) pos[pi_v[k]] = static_cast<int>(k) + 1;
  return pos;
}

namespace {

bool is_permutation_of(const std::vector<std::uint32_t>& order, std::size_t size) {
  if (order.size() != size) return false;
  std::vector<bool> hit(size, false);
  for (auto x : order) {
    if (x >= size || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

}  // namespace

void CubicInstance::validate() const {
  if (!validate_cubic(graph)) throw Error("graph is not cubic (simple, 3-regular, n >= 4 even)");
  if (!is_permutation_of(pi_v, graph.n)) throw Error("vertex ordering is not a permutation");
  if (!is_permutation_of(pi_e, graph.edges.size())) throw Error("edge ordering is not a permutation");
}

CubicInstance make_instance(Graph g) {
  std::vector<std::uint32_t> pi_v(g.n);
  std::iota(pi_v.begin(), pi_v.end(), 0);
  std::vector<std::uint32_t> pi_e(g.edges.size());
  std::iota(pi_e.begin(), pi_e.end(), 0);
  std::stable_sort(pi_e.begin(), pi_e.end(), [&](auto a, auto b) { return g.edges[a] < g.edges[b]; });
  return make_instance(std::move(g), std::move(pi_v), std::move(pi_e));
}

CubicInstance make_instance(Graph g, std::vector<std::uint32_t> pi_v, std::vector<std::uint32_t> pi_e) {
  CubicInstance inst{std::move(g), std::move(pi_v), std::move(pi_e)};
  inst.validate();
  return inst;
}

VertexCut vertex_cut_from_mask(std::size_t n, std::uint64_t mask) {
  VertexCut cut;
  cut.in_x.resize(n);
  for (std::size_t v = 0; v < n; ++v) cut.in_x[v] = (mask >> v) & 1;
  return cut;
}

std::uint64_t cut_edges(const Graph& g, const VertexCut& cut) {
  if (cut.in_x.size() != g.n) throw Error("vertex cut size does not match graph");
  std::uint64_t k = 0;
  for (const auto& [u, v] : g.edges) {
    if (cut.in_x[u] != cut.in_x[v]) ++k;
  }
  return k;
}

bool validate_cubic(const Graph& g) {
  if (g.n < 4 || g.n % 2 != 0) return false;
  if (g.edges.size() != 3 * g.n / 2) return false;
  std::set<Edge> seen;
  std::vector<int> degree(g.n, 0);
  for (auto [u, v] : g.edges) {
    if (u >= g.n || v >= g.n || u == v) return false;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) return false;
    ++degree[u];
    ++degree[v];
  }
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; });
}

Graph k4() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph prism() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph k33() {
  std::vector<Edge> e;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 3; b < 6; ++b) e.push_back({a, b});
  return make_graph(6, e);
}

namespace {

Graph generalized_petersen(std::uint32_t k, std::uint32_t step) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < k; ++i) {
    e.push_back({i, (i + 1) % k});
    e.push_back({i, i + k});
    e.push_back({i + k, (i + step) % k + k});
  }
  return make_graph(2 * k, e);
}

}  // namespace

Graph petersen() { return generalized_petersen(5, 2); }

Graph moebius_kantor() { return generalized_petersen(8, 3); }

Graph fig6(std::size_t n) {
  if (n < 8 || n % 2 != 0) throw Error("fig6 requires an even n >= 8");
  std::vector<Edge> e;
  const auto k = static_cast<std::uint32_t>(n);
  for (std::uint32_t i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  for (std::uint32_t i = 0; i < k / 2; ++i) e.push_back({i, i + k / 2});
  return make_graph(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  const auto k = static_cast<std::uint32_t>(n);
  for (std::uint32_t i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  return make_graph(n, e);
}

Graph named_graph(const std::string& name) {
  if (name == "k4") return k4();
  if (name == "prism") return prism();
  if (name == "k33") return k33();
  if (name == "petersen") return petersen();
  if (name == "moebius_kantor") return moebius_kantor();
  if (name.rfind("fig6:", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(name.substr(5));
    } catch (const std::exception&) {
      throw Error("bad fig6 size in '" + name + "'");
    }
    return fig6(n);
  }
  throw Error("unknown graph '" + name + "'");
}

std::vector<std::string> generator_names() { return {"k4", "prism", "k33", "petersen", "moebius_kantor"}; }

bool is_bridgeless(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  int timer = 0;
  bool bridge = false;
  // parent edge is skipped by vertex; fine for simple graphs
  std::function<void(std::uint32_t, std::int64_t)> dfs = [&](std::uint32_t u, std::int64_t parent) {
    disc[u] = low[u] = timer++;
    for (auto v : adj[u]) {
      if (static_cast<std::int64_t>(v) == parent) continue;
      if (disc[v] >= 0) {
        low[u] = std::min(low[u], disc[v]);
      } else {
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] > disc[u]) bridge = true;
      }
    }
  };
  for (std::uint32_t u = 0; u < g.n; ++u) {
    if (disc[u] < 0) dfs(u, -1);
  }
  return !bridge;
}

std::optional<std::vector<Edge>> perfect_matching(const Graph& g) {
  if (g.n > 24) throw Error("search bound exceeded");
  if (g.n % 2 != 0) return std::nullopt;
  const auto adj = g.adjacency();
  std::vector<bool> used(g.n, false);
  std::vector<Edge> chosen;
  std::function<bool()> extend = [&]() -> bool {
    std::uint32_t u = 0;
    while (u < g.n && used[u]) ++u;
    if (u == g.n) return true;
    used[u] = true;
    for (auto v : adj[u]) {
      if (used[v]) continue;
      used[v] = true;
      chosen.push_back({u, v});
      if (extend()) return true;
      chosen.pop_back();
      used[v] = false;
    }
    used[u] = false;
    return false;
  };
  if (!extend()) return std::nullopt;
  return chosen;
}

bool is_hamiltonian(const Graph& g) {
  if (g.n > 24) throw Error("search bound exceeded");
  if (g.n < 3) return false;
  const auto adj = g.adjacency();
  std::vector<bool> seen(g.n, false);
  std::function<bool(std::uint32_t, std::size_t)> walk = [&](std::uint32_t u, std::size_t depth) -> bool {
    if (depth == g.n) return std::binary_search(adj[u].begin(), adj[u].end(), 0u);
    for (auto v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      if (walk(v, depth + 1)) return true;
      seen[v] = false;
    }
    return false;
  };
  seen[0] = true;
  return walk(0, 1);
}

GraphMaxCut maxcut(const Graph& g) {
  const auto r = bruteforce_maxcut(g.edge_list());
  return {r.size, vertex_cut_from_mask(g.n, r.a_mask)};
}

CubicInstance adversarial_instance(std::size_t n) {
  Graph g = fig6(n);
  std::vector<std::uint32_t> pi_v(n);
  for (std::size_t k = 0; k < n; ++k) pi_v[k] = static_cast<std::uint32_t>(n - 1 - k);
  // fig6 stores the n cycle edges first, then the chords
  std::vector<std::uint32_t> pi_e(g.edges.size());
  std::iota(pi_e.begin(), pi_e.end(), 0);
  return make_instance(std::move(g), std::move(pi_v), std::move(pi_e));
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  bool header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string tag;
    if (!(row >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      std::size_t m = 0;
      if (!(row >> fmt >> n >> m) || (fmt != "edge" && fmt != "col")) throw Error("bad DIMACS header");
      header = true;
    } else if (tag == "e") {
      long u = 0, v = 0;
      if (!header || !(row >> u >> v) || u < 1 || v < 1) throw Error("bad DIMACS edge line: " + line);
      edges.push_back({static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1)});
    } else {
      throw Error("unknown DIMACS line: " + line);
    }
  }
  if (!header) throw Error("missing DIMACS header");
  return make_graph(n, edges);
}

std::string graph_to_dimacs(const Graph& g) { return to_dimacs(g.edge_list()); }

CubicInstance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("bad graph JSON: ") + e.what());
  }
  try {
    const std::size_t n = doc.at("n").get<std::size_t>();
    const auto& rows = doc.at("adjacency");
    if (rows.size() != n) throw Error("adjacency has wrong number of rows");
    std::set<Edge> edges;
    for (std::uint32_t u = 0; u < n; ++u) {
      for (auto v : rows[u].get<std::vector<std::uint32_t>>()) {
        if (v >= n) throw Error("adjacency entry out of range");
        edges.insert({std::min(u, v), std::max(u, v)});
      }
    }
    Graph g = make_graph(n, {edges.begin(), edges.end()});
    if (!doc.contains("pi_v") && !doc.contains("pi_e")) return make_instance(std::move(g));
    CubicInstance base = make_instance(g);
    auto pi_v = doc.contains("pi_v") ? doc["pi_v"].get<std::vector<std::uint32_t>>() : base.pi_v;
    auto pi_e = base.pi_e;
    if (doc.contains("pi_e")) {
      pi_e.clear();
      for (const auto& pair : doc["pi_e"]) {
        auto uv = pair.get<std::vector<std::uint32_t>>();
        if (uv.size() != 2) throw Error("pi_e entries must be vertex pairs");
        Edge e{std::min(uv[0], uv[1]), std::max(uv[0], uv[1])};
        auto it = std::find(g.edges.begin(), g.edges.end(), e);
        if (it == g.edges.end()) throw Error("pi_e names a non-edge");
        pi_e.push_back(static_cast<std::uint32_t>(it - g.edges.begin()));
      }
    }
    return make_instance(std::move(g), std::move(pi_v), std::move(pi_e));
  } catch (const json::exception& e) {
    throw Error(std::string("bad graph JSON: ") + e.what());
  }
}

std::string instance_to_json(const CubicInstance& inst) {
  json doc;
  doc["n"] = inst.graph.n;
  json rows = json::array();
  for (const auto& row : inst.graph.adjacency()) rows.push_back(row);
  doc["adjacency"] = rows;
  doc["pi_v"] = inst.pi_v;
  json pe = json::array();
  for (auto idx : inst.pi_e) pe.push_back({inst.graph.edges[idx].first, inst.graph.edges[idx].second});
  doc["pi_e"] = pe;
  return doc.dump();
}

CubicInstance load_instance(const std::string& name_or_path) {
  std::ifstream in(name_or_path);
  if (!in) return make_instance(named_graph(name_or_path));
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_instance_json(text);
  return make_instance(parse_dimacs(text));
}

}  // namespace icmc
