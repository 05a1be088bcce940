#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hitsets/graph.hpp"
#include "hitsets/hypergraph.hpp"
#include "hitsets/online.hpp"

namespace hitsets {

/// Node of a decomposition forest: a range together with the point a
/// replayed black-box algorithm used to stab it.
struct ForestNode {
  Range range;                      ///< r_v
  PointId point = -1;               ///< x_v, a member of range
  int depth = 0;                    ///< root depth is 0
  std::vector<ForestNode> children;
};

struct DecompositionForest {
  std::vector<ForestNode> roots;
  int max_depth = -1;  ///< -1 for an empty forest
  int node_count = 0;
};

/// Ranges r with r contained in s such that no other range r' satisfies
/// r strictly inside r' inside s. Lexicographic order. s must be sorted.
std::vector<Range> s_maximal_ranges(const Hypergraph& h, const std::vector<PointId>& s);

/// Same query against the family of connected vertex sets of g, which is
/// never materialized: the maximal connected subsets of s are exactly the
/// connected components of the induced subgraph. Lexicographic order.
std::vector<Range> s_maximal_connected(const Graph& g, const std::vector<PointId>& s);

/// Builds the decomposition forest of alg over h. Roots are the maximal
/// ranges; each node's point label is recovered by resetting alg and feeding
/// the root-to-node range sequence; children are the maximal ranges inside
/// the node's range minus all point labels on its path. Requires alg to add
/// exactly one point per fed range. Sibling overlap (possible only when h is
/// not closed under union of intersecting ranges) is rejected.
DecompositionForest build_forest(const Hypergraph& h, OnlineAlgorithm& alg);

/// build_forest against the connected-subgraph family of g.
DecompositionForest build_forest_graph(const Graph& g, OnlineAlgorithm& alg);

/// Coloring with c(point label of v) = depth(v) and c(x) = rho for points
/// never used as labels. rho must exceed every node depth.
Coloring derive_unique_min(int n, const DecompositionForest& f, int rho);

/// c'(x) = k - c(x). Rejects colorings with a color below 0 or above k.
Coloring to_unique_max(const Coloring& c, int k);

/// Outcome of re-verifying the structural forest properties and the replay
/// consistency of the black box that built it.
struct ForestCheck {
  bool chain = true;                  ///< child range strictly inside parent, avoiding path labels
  bool sibling_disjoint = true;       ///< children of one node (and roots) pairwise disjoint
  bool incomparable_disjoint = true;  ///< non-ancestor node pairs have disjoint ranges
  bool labels_distinct = true;        ///< all point labels distinct
  bool replay = true;                 ///< replaying each path stabs each range once, ending at the label
  std::string detail;                 ///< first failure, empty when clean
  bool all_ok() const {
    return chain && sibling_disjoint && incomparable_disjoint && labels_distinct && replay;
  }
};

ForestCheck check_forest(const DecompositionForest& f, OnlineAlgorithm& alg);

}  // namespace hitsets
