#include "hitsets/ranking.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>

#include "hitsets/rational.hpp"

namespace hitsets {

std::string to_string(RankStrategy s) {
  switch (s) {
    case RankStrategy::path_ruler: return "path-ruler";
    case RankStrategy::tree_centroid: return "tree-centroid";
    case RankStrategy::separator: return "separator";
    case RankStrategy::exact: return "exact";
  }
  return "?";
}

std::string to_string(SeparatorStrategy s) {
  switch (s) {
    case SeparatorStrategy::brute_min: return "brute-min";
    case SeparatorStrategy::centroid: return "centroid";
    case SeparatorStrategy::greedy_degree: return "greedy-degree";
  }
  return "?";
}

RankingResult rank_path(int n) {
  if (n < 1) throw InputError("rank_path: n must be >= 1");
  std::vector<int> colors(static_cast<size_t>(n), 0);
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int len = hi - lo + 1;
    int mid = lo + (len - 1) / 2;
    colors[static_cast<size_t>(mid)] = floor_log2(len) + 1;
    if (mid - 1 >= lo) stack.emplace_back(lo, mid - 1);
    if (mid + 1 <= hi) stack.emplace_back(mid + 1, hi);
  }
  return {Coloring{std::move(colors)}, RankStrategy::path_ruler};
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

bool is_vertex_ranking(const Graph& g, const Coloring& c) {
  if (c.size() != g.n) throw InputError("coloring size does not match vertex count");
  // Vertices grouped by color, added in ascending color order; two vertices
  // of the current color sharing a component certify an unseparated pair.
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < g.n; ++v) by_color[c[v]].push_back(v);
  Dsu dsu(g.n);
  std::vector<char> added(static_cast<size_t>(g.n), 0);
  for (const auto& [color, verts] : by_color) {
    (void)color;
    for (int v : verts) {
      added[static_cast<size_t>(v)] = 1;
      for (int w : g.adj[static_cast<size_t>(v)])
        if (added[static_cast<size_t>(w)]) dsu.unite(v, w);
    }
    std::vector<int> roots;
    for (int v : verts) roots.push_back(dsu.find(v));
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) return false;
  }
  return true;
}

namespace {

/// Vertex of the tree component minimizing the largest piece left by its
/// removal; smallest id wins ties.
int tree_centroid(const Graph& g, const std::vector<int>& comp) {
  std::vector<char> member(static_cast<size_t>(g.n), 0);
  for (int v : comp) member[static_cast<size_t>(v)] = 1;
  int total = static_cast<int>(comp.size());
  std::vector<int> subtree(static_cast<size_t>(g.n), 0);
  std::vector<int> heavy(static_cast<size_t>(g.n), 0);
  // Iterative post-order from comp.front() over the induced tree.
  std::vector<std::pair<int, int>> stack{{comp.front(), -1}};
  std::vector<std::pair<int, int>> order;
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    order.emplace_back(v, parent);
    for (int w : g.adj[static_cast<size_t>(v)])
      if (w != parent && member[static_cast<size_t>(w)]) stack.emplace_back(w, v);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [v, parent] = *it;
    subtree[static_cast<size_t>(v)] += 1;
    heavy[static_cast<size_t>(v)] =
        std::max(heavy[static_cast<size_t>(v)], total - subtree[static_cast<size_t>(v)]);
    if (parent >= 0) {
      subtree[static_cast<size_t>(parent)] += subtree[static_cast<size_t>(v)];
      heavy[static_cast<size_t>(parent)] =
          std::max(heavy[static_cast<size_t>(parent)], subtree[static_cast<size_t>(v)]);
    }
  }
  int best = comp.front();
  for (int v : comp)
    if (heavy[static_cast<size_t>(v)] < heavy[static_cast<size_t>(best)]) best = v;
  return best;
}

int centroid_rank_rec(const Graph& g, const std::vector<int>& comp, std::vector<int>& colors) {
  if (comp.size() == 1) {
    colors[static_cast<size_t>(comp.front())] = 1;
    return 1;
  }
  int c = tree_centroid(g, comp);
  std::vector<int> rest;
  for (int v : comp)
    if (v != c) rest.push_back(v);
  int below = 0;
  for (const auto& piece : components_within(g, rest))
    below = std::max(below, centroid_rank_rec(g, piece, colors));
  colors[static_cast<size_t>(c)] = below + 1;
  return below + 1;
}

}  // namespace

RankingResult rank_tree_centroid(const Graph& g) {
  if (!g.is_tree()) throw InputError("rank_tree_centroid: input is not a tree");
  std::vector<int> colors(static_cast<size_t>(g.n), 0);
  if (g.n > 0) centroid_rank_rec(g, components(g).front(), colors);
  return {Coloring{std::move(colors)}, RankStrategy::tree_centroid};
}

namespace {

int degree_within(const Graph& g, int v, const std::vector<char>& member) {
  int d = 0;
  for (int w : g.adj[static_cast<size_t>(v)])
    if (member[static_cast<size_t>(w)]) ++d;
  return d;
}

/// Separator of the component under the chosen strategy. Every returned set
/// is nonempty, which guarantees the recursion shrinks.
std::vector<int> pick_separator(const Graph& g, const std::vector<int>& comp,
                                SeparatorStrategy strategy) {
  int n = static_cast<int>(comp.size());
  int half = n / 2;
  switch (strategy) {
    case SeparatorStrategy::centroid:
      return {tree_centroid(g, comp)};
    case SeparatorStrategy::brute_min: {
      if (n > 16) throw InputError("rank_by_separator: brute-min guarded to components of size <= 16");
      // Subsets in ascending size, lexicographic within a size.
      for (int size = 1; size <= n; ++size) {
        std::vector<int> pick(static_cast<size_t>(size));
        std::function<bool(int, int)> choose = [&](int from, int got) -> bool {
          if (got == size) {
            std::vector<int> rest;
            std::vector<char> sep(static_cast<size_t>(g.n), 0);
            for (int s : pick) sep[static_cast<size_t>(s)] = 1;
            for (int v : comp)
              if (!sep[static_cast<size_t>(v)]) rest.push_back(v);
            for (const auto& piece : components_within(g, rest))
              if (static_cast<int>(piece.size()) > half) return false;
            return true;
          }
          for (int i = from; i < n; ++i) {
            pick[static_cast<size_t>(got)] = comp[static_cast<size_t>(i)];
            if (choose(i + 1, got + 1)) return true;
          }
          return false;
        };
        if (choose(0, 0)) return pick;
      }
      return comp;  // unreachable: the full set always balances
    }
    case SeparatorStrategy::greedy_degree: {
      std::vector<char> member(static_cast<size_t>(g.n), 0);
      for (int v : comp) member[static_cast<size_t>(v)] = 1;
      std::vector<int> sep;
      std::vector<int> rest = comp;
      while (true) {
        bool balanced = true;
        for (const auto& piece : components_within(g, rest))
          if (static_cast<int>(piece.size()) > half) balanced = false;
        if (balanced && !sep.empty()) break;
        if (rest.empty()) break;
        if (balanced && sep.empty()) {
          // Already balanced: still take one vertex so recursion shrinks.
          sep.push_back(rest.front());
          member[static_cast<size_t>(rest.front())] = 0;
          rest.erase(rest.begin());
          break;
        }
        int best = rest.front();
        int best_deg = degree_within(g, best, member);
        for (int v : rest) {
          int d = degree_within(g, v, member);
          if (d > best_deg) {
            best = v;
            best_deg = d;
          }
        }
        member[static_cast<size_t>(best)] = 0;
        sep.push_back(best);
        rest.erase(std::find(rest.begin(), rest.end(), best));
      }
      std::sort(sep.begin(), sep.end());
      return sep;
    }
  }
  return comp;
}

int separator_rank_rec(const Graph& g, const std::vector<int>& comp,
                       SeparatorStrategy strategy, std::vector<int>& colors) {
  if (comp.size() == 1) {
    colors[static_cast<size_t>(comp.front())] = 1;
    return 1;
  }
  std::vector<int> sep = pick_separator(g, comp, strategy);
  std::vector<char> in_sep(static_cast<size_t>(g.n), 0);
  for (int s : sep) in_sep[static_cast<size_t>(s)] = 1;
  std::vector<int> rest;
  for (int v : comp)
    if (!in_sep[static_cast<size_t>(v)]) rest.push_back(v);
  int below = 0;
  for (const auto& piece : components_within(g, rest))
    below = std::max(below, separator_rank_rec(g, piece, strategy, colors));
  // Separator vertices take distinct colors above everything beneath them.
  int next = below + 1;
  for (int s : sep) colors[static_cast<size_t>(s)] = next++;
  return next - 1;
}

}  // namespace

RankingResult rank_by_separator(const Graph& g, SeparatorStrategy strategy) {
  if (strategy == SeparatorStrategy::centroid && !g.is_tree())
    throw InputError("rank_by_separator: centroid strategy requires a tree");
  std::vector<int> colors(static_cast<size_t>(g.n), 0);
  for (const auto& comp : components(g)) separator_rank_rec(g, comp, strategy, colors);
  return {Coloring{std::move(colors)}, RankStrategy::separator};
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> component_masks(const Graph& g, Mask mask) {
  std::vector<Mask> out;
  Mask left = mask;
  while (left) {
    int s = std::countr_zero(left);
    Mask comp = 0;
    Mask frontier = Mask{1} << s;
    while (frontier) {
      comp |= frontier;
      Mask next = 0;
      Mask f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        for (int w : g.adj[static_cast<size_t>(v)]) next |= Mask{1} << w;
      }
      frontier = next & mask & ~comp;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

struct EliminationDp {
  const Graph& g;
  std::vector<int> height;   // by mask; 0 = unknown
  std::vector<int> choice;   // chosen root vertex for connected masks

  explicit EliminationDp(const Graph& graph)
      : g(graph),
        height(size_t{1} << graph.n, 0),
        choice(size_t{1} << graph.n, -1) {}

  int solve(Mask mask) {
    if (mask == 0) return 0;
    if (height[mask]) return height[mask];
    auto comps = component_masks(g, mask);
    int h;
    if (comps.size() > 1) {
      h = 0;
      for (Mask c : comps) h = std::max(h, solve(c));
    } else if (std::popcount(mask) == 1) {
      h = 1;
      choice[mask] = std::countr_zero(mask);
    } else {
      h = g.n + 1;
      Mask m = mask;
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int sub = solve(mask & ~(Mask{1} << v));
        if (1 + sub < h) {
          h = 1 + sub;
          choice[mask] = v;
        }
      }
    }
    height[mask] = h;
    return h;
  }

  void paint(Mask mask, std::vector<int>& colors) {
    if (mask == 0) return;
    for (Mask c : component_masks(g, mask)) {
      int v = choice[c];
      colors[static_cast<size_t>(v)] = height[c];
      paint(c & ~(Mask{1} << v), colors);
    }
  }
};

}  // namespace

RankingResult rank_exact(const Graph& g) {
  if (g.n > 16) throw InputError("rank_exact: guarded to n <= 16");
  std::vector<int> colors(static_cast<size_t>(g.n), 0);
  if (g.n > 0) {
    EliminationDp dp(g);
    Mask full = (Mask{1} << g.n) - 1;
    dp.solve(full);
    dp.paint(full, colors);
  }
  return {Coloring{std::move(colors)}, RankStrategy::exact};
}

}  // namespace hitsets
