#include "hitsets/decomposition.hpp"

#include <algorithm>
#include <set>

#include "hitsets/errors.hpp"

namespace hitsets {

std::vector<Range> s_maximal_ranges(const Hypergraph& h, const std::vector<PointId>& s) {
  std::vector<Range> inside;
  for (const Range& r : h.ranges)
    if (range_subset(r, s)) inside.push_back(r);
  std::vector<Range> out;
  for (const Range& r : inside) {
    bool maximal = true;
    for (const Range& bigger : inside)
      if (r != bigger && range_subset(r, bigger)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Range> s_maximal_connected(const Graph& g, const std::vector<PointId>& s) {
  for (PointId p : s)
    if (p < 0 || p >= g.n) throw InputError("s_maximal_connected: point outside the graph");
  auto comps = components_within(g, s);
  std::sort(comps.begin(), comps.end());
  return comps;
}

namespace {

using RangeProvider = std::function<std::vector<Range>(const std::vector<PointId>&)>;

/// Feeds the root-to-node range sequence to a freshly reset alg, requiring
/// one new point per range, and returns the point stabbing the last range.
PointId replay_path(OnlineAlgorithm& alg, const std::vector<Range>& path_ranges) {
  alg.reset();
  PointId last = -1;
  for (const Range& r : path_ranges) {
    StepOutcome out = alg.feed(r);
    if (out.was_stabbed)
      throw InvariantViolation(
          "decomposition replay: a path range arrived already stabbed; "
          "the black box is not deterministic or the chain is broken");
    if (out.added.size() != 1)
      throw InvariantViolation(
          "decomposition replay: the black box added " + std::to_string(out.added.size()) +
          " points for one range; the construction requires exactly one");
    last = out.added.front();
  }
  return last;
}

void require_pairwise_disjoint(const std::vector<Range>& ranges) {
  for (size_t i = 0; i < ranges.size(); ++i)
    for (size_t j = i + 1; j < ranges.size(); ++j)
      if (ranges_intersect(ranges[i], ranges[j]))
        throw InputError(
            "build_forest: two maximal candidate ranges overlap; the family "
            "is not closed under union of intersecting ranges");
}

struct ForestBuilder {
  const RangeProvider& provider;
  OnlineAlgorithm& alg;
  int node_count = 0;
  int max_depth = -1;

  ForestNode build(std::vector<Range>& path_ranges, std::vector<PointId>& path_points, int depth) {
    const Range& r_v = path_ranges.back();
    PointId x_v = replay_path(alg, path_ranges);
    if (!range_contains(r_v, x_v))
      throw InvariantViolation("build_forest: the black box stabbed a range with a point outside it");
    ForestNode node;
    node.range = r_v;
    node.point = x_v;
    node.depth = depth;
    ++node_count;
    max_depth = std::max(max_depth, depth);

    path_points.push_back(x_v);
    std::vector<PointId> remaining;
    for (PointId p : r_v)
      if (std::find(path_points.begin(), path_points.end(), p) == path_points.end())
        remaining.push_back(p);
    std::vector<Range> child_ranges = provider(remaining);
    require_pairwise_disjoint(child_ranges);
    for (const Range& child : child_ranges) {
      path_ranges.push_back(child);
      node.children.push_back(build(path_ranges, path_points, depth + 1));
      path_ranges.pop_back();
    }
    path_points.pop_back();
    return node;
  }
};

DecompositionForest build_forest_impl(int n, const RangeProvider& provider, OnlineAlgorithm& alg) {
  std::vector<PointId> full(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) full[static_cast<size_t>(i)] = i;
  std::vector<Range> root_ranges = provider(full);
  require_pairwise_disjoint(root_ranges);

  DecompositionForest forest;
  ForestBuilder builder{provider, alg, 0, -1};
  for (const Range& r : root_ranges) {
    std::vector<Range> path_ranges{r};
    std::vector<PointId> path_points;
    forest.roots.push_back(builder.build(path_ranges, path_points, 0));
  }
  forest.max_depth = builder.max_depth;
  forest.node_count = builder.node_count;
  return forest;
}

}  // namespace

DecompositionForest build_forest(const Hypergraph& h, OnlineAlgorithm& alg) {
  RangeProvider provider = [&h](const std::vector<PointId>& s) { return s_maximal_ranges(h, s); };
  return build_forest_impl(h.n, provider, alg);
}

DecompositionForest build_forest_graph(const Graph& g, OnlineAlgorithm& alg) {
  RangeProvider provider = [&g](const std::vector<PointId>& s) { return s_maximal_connected(g, s); };
  return build_forest_impl(g.n, provider, alg);
}

namespace {

void collect_depths(const ForestNode& node, std::vector<int>& colors, int rho) {
  if (node.point < 0 || node.point >= static_cast<int>(colors.size()))
    throw InputError("derive_unique_min: forest label outside the ground set");
  if (node.depth >= rho)
    throw InputError("derive_unique_min: rho must exceed every node depth");
  colors[static_cast<size_t>(node.point)] = node.depth;
  for (const ForestNode& child : node.children) collect_depths(child, colors, rho);
}

}  // namespace

Coloring derive_unique_min(int n, const DecompositionForest& f, int rho) {
  if (n < 0 || rho < 0) throw InputError("derive_unique_min: negative size");
  std::vector<int> colors(static_cast<size_t>(n), rho);
  for (const ForestNode& root : f.roots) collect_depths(root, colors, rho);
  return Coloring{std::move(colors)};
}

Coloring to_unique_max(const Coloring& c, int k) {
  std::vector<int> out(static_cast<size_t>(c.size()));
  for (int i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] > k)
      throw InputError("to_unique_max: color " + std::to_string(c[i]) + " outside [0, " +
                       std::to_string(k) + "]");
    out[static_cast<size_t>(i)] = k - c[i];
  }
  return Coloring{std::move(out)};
}

namespace {

struct ForestChecker {
  OnlineAlgorithm& alg;
  ForestCheck report;
  std::vector<const ForestNode*> all_nodes;
  std::vector<std::pair<int, int>> spans;  // preorder in/out per node

  void fail(bool ForestCheck::* flag, const std::string& detail) {
    report.*flag = false;
    if (report.detail.empty()) report.detail = detail;
  }

  void walk(const ForestNode& node, std::vector<Range>& path_ranges,
            std::vector<PointId>& path_points, int depth) {
    int in = static_cast<int>(all_nodes.size());
    all_nodes.push_back(&node);
    spans.emplace_back(in, in);

    if (node.depth != depth) fail(&ForestCheck::chain, "node depth does not match its path length");
    if (!range_contains(node.range, node.point))
      fail(&ForestCheck::labels_distinct, "point label outside its range");
    for (PointId p : path_points)
      if (range_contains(node.range, p))
        fail(&ForestCheck::chain, "range contains an ancestor point label");
    if (!path_ranges.empty()) {
      const Range& parent = path_ranges.back();
      if (!(range_subset(node.range, parent) && node.range != parent))
        fail(&ForestCheck::chain, "child range is not strictly inside its parent");
    }

    // Replay the path through the black box.
    path_ranges.push_back(node.range);
    try {
      PointId got = replay_path(alg, path_ranges);
      if (got != node.point) fail(&ForestCheck::replay, "replayed stab differs from the stored label");
    } catch (const InvariantViolation& e) {
      fail(&ForestCheck::replay, e.what());
    }

    for (size_t i = 0; i < node.children.size(); ++i)
      for (size_t j = i + 1; j < node.children.size(); ++j)
        if (ranges_intersect(node.children[i].range, node.children[j].range))
          fail(&ForestCheck::sibling_disjoint, "two sibling ranges intersect");

    path_points.push_back(node.point);
    for (const ForestNode& child : node.children)
      walk(child, path_ranges, path_points, depth + 1);
    path_points.pop_back();
    path_ranges.pop_back();
    spans[static_cast<size_t>(in)].second = static_cast<int>(all_nodes.size()) - 1;
  }
};

}  // namespace

ForestCheck check_forest(const DecompositionForest& f, OnlineAlgorithm& alg) {
  ForestChecker checker{alg, {}, {}, {}};
  std::vector<Range> path_ranges;
  std::vector<PointId> path_points;
  for (size_t i = 0; i < f.roots.size(); ++i)
    for (size_t j = i + 1; j < f.roots.size(); ++j)
      if (ranges_intersect(f.roots[i].range, f.roots[j].range))
        checker.fail(&ForestCheck::sibling_disjoint, "two root ranges intersect");
  for (const ForestNode& root : f.roots) checker.walk(root, path_ranges, path_points, 0);

  std::vector<PointId> labels;
  for (const ForestNode* node : checker.all_nodes) labels.push_back(node->point);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    checker.fail(&ForestCheck::labels_distinct, "two nodes share a point label");

  // Two nodes are comparable exactly when their preorder spans nest.
  for (size_t i = 0; i < checker.all_nodes.size(); ++i)
    for (size_t j = i + 1; j < checker.all_nodes.size(); ++j) {
      auto [ai, ao] = checker.spans[i];
      auto [bi, bo] = checker.spans[j];
      bool comparable = (ai <= bi && bo <= ao) || (bi <= ai && ao <= bo);
      if (!comparable &&
          ranges_intersect(checker.all_nodes[i]->range, checker.all_nodes[j]->range))
        checker.fail(&ForestCheck::incomparable_disjoint,
                     "two incomparable nodes have intersecting ranges");
    }
  return checker.report;
}

}  // namespace hitsets
