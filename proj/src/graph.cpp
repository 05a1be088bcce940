#include "hitsets/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace hitsets {

Graph Graph::make(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw InputError("graph: n must be >= 0");
  Graph g;
  g.n = n;
  g.adj.assign(static_cast<size_t>(n), {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("graph: edge endpoint outside vertex set");
    if (u == v) throw InputError("graph: self loop");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw InputError("graph: duplicate edge");
    g.adj[static_cast<size_t>(u)].push_back(v);
    g.adj[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

int Graph::edge_count() const {
  size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

std::vector<std::vector<int>> components_impl(const Graph& g, const std::vector<int>& vertices) {
  std::vector<char> member(static_cast<size_t>(g.n), 0);
  for (int v : vertices) member[static_cast<size_t>(v)] = 1;
  std::vector<char> visited(static_cast<size_t>(g.n), 0);
  std::vector<std::vector<int>> out;
  for (int s : vertices) {
    if (visited[static_cast<size_t>(s)]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    visited[static_cast<size_t>(s)] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : g.adj[static_cast<size_t>(u)]) {
        if (!member[static_cast<size_t>(w)] || visited[static_cast<size_t>(w)]) continue;
        visited[static_cast<size_t>(w)] = 1;
        q.push(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> all(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) all[static_cast<size_t>(v)] = v;
  return components_impl(g, all);
}

std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& vertices) {
  return components_impl(g, vertices);
}

bool Graph::is_connected() const {
  if (n <= 1) return true;
  return components(*this).size() == 1;
}

bool Graph::is_tree() const {
  return is_connected() && edge_count() == n - 1;
}

bool is_connected_range(const Graph& g, const Range& r) {
  if (r.empty()) throw InputError("is_connected_range: empty vertex set");
  if (r.front() < 0 || r.back() >= g.n) throw InputError("is_connected_range: vertex outside graph");
  return components_impl(g, r).size() == 1;
}

Hypergraph connected_subgraph_hypergraph(const Graph& g) {
  if (g.n > 16) throw InputError("connected_subgraph_hypergraph: n <= 16 (exponential range count)");
  std::vector<Range> ranges;
  for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
    Range r;
    for (int v = 0; v < g.n; ++v)
      if (mask & (1u << v)) r.push_back(v);
    if (is_connected_range(g, r)) ranges.push_back(std::move(r));
  }
  return Hypergraph::make(g.n, std::move(ranges));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::make(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw InputError("star_graph: negative leaf count");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::make(leaves + 1, edges);
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InputError("grid_graph: dimensions must be >= 1");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::make(rows * cols, edges);
}

}  // namespace hitsets
