#pragma once

/// Brute-force reference oracles shared by the test suite. Everything here
/// is deliberately naive: small-n exhaustive searches used to cross-check
/// the real implementations.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hitsets/graph.hpp"
#include "hitsets/hypergraph.hpp"

namespace test_util {

using namespace hitsets;

/// Vertex-ranking check straight from the definition: every simple path
/// between two equal-colored vertices must pass through a strictly higher
/// color. Enumerates all simple paths; only usable for n <= 10 or so.
inline bool brute_vertex_ranking(const Graph& g, const Coloring& c) {
  const int n = g.n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (c[u] != c[v]) continue;
      std::vector<int> path{u};
      std::vector<char> used(static_cast<size_t>(n), 0);
      used[static_cast<size_t>(u)] = 1;
      std::function<bool(int)> dfs = [&](int x) -> bool {
        if (x == v) {
          for (size_t k = 1; k + 1 < path.size(); ++k)
            if (c[path[k]] > c[u]) return true;
          return false;
        }
        for (int w : g.adj[static_cast<size_t>(x)]) {
          if (used[static_cast<size_t>(w)]) continue;
          used[static_cast<size_t>(w)] = 1;
          path.push_back(w);
          bool ok = dfs(w);
          path.pop_back();
          used[static_cast<size_t>(w)] = 0;
          if (!ok) return false;
        }
        return true;
      };
      if (!dfs(u)) return false;
    }
  }
  return true;
}

/// Exhaustive minimum hitting set, lexicographically least point list among
/// the minimum-size solutions. n <= 20.
inline std::vector<int> brute_min_hitting(const std::vector<Range>& ranges, int n) {
  if (ranges.empty()) return {};
  std::vector<std::uint32_t> masks;
  masks.reserve(ranges.size());
  for (const Range& r : ranges) {
    std::uint32_t m = 0;
    for (PointId p : r) m |= 1u << p;
    masks.push_back(m);
  }
  std::vector<int> best;
  bool have = false;
  for (int k = 0; k <= n; ++k) {
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (std::popcount(s) != k) continue;
      bool ok = true;
      for (std::uint32_t m : masks) {
        if (!(m & s)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<int> v;
      for (int p = 0; p < n; ++p)
        if ((s >> p) & 1u) v.push_back(p);
      if (!have || v < best) {
        best = v;
        have = true;
      }
    }
    if (have) break;
  }
  return best;
}

/// Inclusion-maximal ranges contained in s, straight from the definition.
/// s must be sorted.
inline std::vector<Range> brute_s_maximal(const Hypergraph& h, const Range& s) {
  auto subset = [](const Range& a, const Range& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<Range> inside;
  for (const Range& r : h.ranges)
    if (subset(r, s)) inside.push_back(r);
  std::vector<Range> out;
  for (const Range& r : inside) {
    bool strictly_contained = false;
    for (const Range& r2 : inside) {
      if (r != r2 && subset(r, r2)) {
        strictly_contained = true;
        break;
      }
    }
    if (!strictly_contained) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Random coloring with colors in 1..max_color.
inline Coloring random_coloring(std::mt19937_64& rng, int n, int max_color) {
  Coloring c;
  c.colors.resize(static_cast<size_t>(n));
  for (int& x : c.colors) x = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_color));
  return c;
}

/// Random simple graph on n vertices with edge probability ~1/2.
inline Graph random_graph(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % 2 == 0) edges.push_back({u, v});
  return Graph::make(n, edges);
}

}  // namespace test_util
