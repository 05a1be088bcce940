#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hitsets/hypergraph.hpp"

namespace hitsets {

/// Simple undirected graph with sorted adjacency lists.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  /// Validates endpoints, rejects loops and duplicate edges.
  static Graph make(int n, const std::vector<std::pair<int, int>>& edges);

  int edge_count() const;
  bool is_connected() const;
  bool is_tree() const;
  std::vector<std::pair<int, int>> edges() const;
};

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

/// Components of the subgraph induced by the given sorted vertex set.
std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& vertices);

/// True when the induced subgraph on r is connected. Empty r is rejected.
bool is_connected_range(const Graph& g, const Range& r);

/// Materializes the hypergraph whose ranges are the vertex sets of connected
/// induced subgraphs. Exponential in n; guarded to n <= 16 and meant for
/// oracles and tests. Algorithms query connectivity on demand instead.
Hypergraph connected_subgraph_hypergraph(const Graph& g);

Graph path_graph(int n);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);

}  // namespace hitsets
