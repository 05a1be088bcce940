#pragma once

#include <string>

#include "hitsets/graph.hpp"
#include "hitsets/hypergraph.hpp"

namespace hitsets {

enum class RankStrategy { path_ruler, tree_centroid, separator, exact };
enum class SeparatorStrategy { brute_min, centroid, greedy_degree };

std::string to_string(RankStrategy s);
std::string to_string(SeparatorStrategy s);

struct RankingResult {
  Coloring coloring;       // colors in 1..palette
  RankStrategy strategy;
};

/// Ruler coloring of the n-vertex path: the highest color goes to the
/// left-of-center position floor((len-1)/2) of each segment, then both halves
/// recurse. Uses exactly floor(log2(n)) + 1 colors.
RankingResult rank_path(int n);

/// A coloring is a valid ranking when, for every color g, each connected
/// component of the subgraph induced by colors <= g contains at most one
/// vertex of color g. Checked with a union-find sweep in ascending color
/// order.
bool is_vertex_ranking(const Graph& g, const Coloring& c);

/// Centroid decomposition ranking for trees: the centroid of each component
/// gets a color one above everything below it. Palette <= floor(log2(n)) + 1.
/// Rejects graphs that are not trees.
RankingResult rank_tree_centroid(const Graph& g);

/// Generic balanced-separator ranking. The separator vertices of each
/// component receive the top colors, components recurse independently.
///   brute_min:      smallest separator whose removal leaves components of
///                   at most half the size; exhaustive, guarded to n <= 16.
///   centroid:       single centroid vertex; trees only.
///   greedy_degree:  repeatedly add the highest-degree remaining vertex until
///                   every component has at most half the size.
RankingResult rank_by_separator(const Graph& g, SeparatorStrategy strategy);

/// Minimum-palette ranking via the elimination-height recurrence
///   h(C) = 1 + min over v of max over components K of C - v of h(K),
/// memoized over vertex subsets. Guarded to n <= 16.
RankingResult rank_exact(const Graph& g);

}  // namespace hitsets
