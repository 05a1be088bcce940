#include "hitsets/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace hitsets {

Range make_range(std::vector<PointId> points) {
  if (points.empty()) throw InputError("range must be nonempty");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

bool ranges_intersect(const Range& a, const Range& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib) ++ia; else ++ib;
  }
  return false;
}

Range range_union(const Range& a, const Range& b) {
  Range out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool range_subset(const Range& inner, const Range& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool range_contains(const Range& r, PointId p) {
  return std::binary_search(r.begin(), r.end(), p);
}

Range range_difference(const Range& a, const Range& b) {
  Range out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Hypergraph Hypergraph::make(int n, std::vector<Range> ranges) {
  if (n < 0) throw InputError("hypergraph: n must be >= 0");
  for (Range& r : ranges) {
    r = make_range(std::move(r));
    if (r.front() < 0 || r.back() >= n)
      throw InputError("hypergraph: range member outside ground set");
  }
  std::sort(ranges.begin(), ranges.end());
  for (size_t i = 1; i < ranges.size(); ++i)
    if (ranges[i] == ranges[i - 1])
      throw InputError("hypergraph: duplicate range");
  return Hypergraph{n, std::move(ranges)};
}

bool Hypergraph::has_range(const Range& r) const {
  return std::binary_search(ranges.begin(), ranges.end(), r);
}

int Coloring::palette_size() const {
  std::set<int> used(colors.begin(), colors.end());
  return static_cast<int>(used.size());
}

int Coloring::max_color() const {
  if (colors.empty()) return 0;
  return *std::max_element(colors.begin(), colors.end());
}

bool HittingSet::contains(PointId p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

bool HittingSet::insert(PointId p) {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it != points.end() && *it == p) return false;
  points.insert(it, p);
  return true;
}

bool HittingSet::stabs(const Range& r) const {
  auto ip = points.begin();
  auto ir = r.begin();
  while (ip != points.end() && ir != r.end()) {
    if (*ip == *ir) return true;
    if (*ip < *ir) ++ip; else ++ir;
  }
  return false;
}

bool is_itype(const Hypergraph& h) {
  const auto& rs = h.ranges;
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = i + 1; j < rs.size(); ++j) {
      if (!ranges_intersect(rs[i], rs[j])) continue;
      if (!h.has_range(range_union(rs[i], rs[j]))) return false;
    }
  return true;
}

bool is_separable(const Hypergraph& h) {
  for (PointId p = 0; p < h.n; ++p)
    if (!h.has_range(Range{p})) return false;
  return true;
}

namespace {

/// cmp(best, other) selecting the extreme color; shared by the two
/// unique-extremum validators.
bool unique_extreme(const Hypergraph& h, const Coloring& c, bool want_max) {
  if (c.size() != h.n) throw InputError("coloring size does not match ground set");
  for (const Range& r : h.ranges) {
    int best = c[r.front()];
    int count = 1;
    for (size_t i = 1; i < r.size(); ++i) {
      int col = c[r[i]];
      bool better = want_max ? col > best : col < best;
      if (better) {
        best = col;
        count = 1;
      } else if (col == best) {
        ++count;
      }
    }
    if (count != 1) return false;
  }
  return true;
}

}  // namespace

bool is_unique_max(const Hypergraph& h, const Coloring& c) {
  return unique_extreme(h, c, true);
}

bool is_unique_min(const Hypergraph& h, const Coloring& c) {
  return unique_extreme(h, c, false);
}

bool verify_hitting(const std::vector<Range>& ranges, const HittingSet& hs) {
  for (const Range& r : ranges)
    if (!hs.stabs(r)) return false;
  return true;
}

std::optional<UmChromaticResult> um_chromatic_exact(const Hypergraph& h, int max_colors) {
  if (h.n > 16) throw InputError("um_chromatic_exact: ground set too large (n <= 16)");
  if (max_colors < 0) throw InputError("um_chromatic_exact: negative color bound");
  if (h.n == 0) return UmChromaticResult{0, Coloring{}};

  // Group ranges by their largest member so each range is checked exactly
  // once, at the moment it becomes fully colored.
  std::vector<std::vector<const Range*>> closing_at(static_cast<size_t>(h.n));
  for (const Range& r : h.ranges) closing_at[static_cast<size_t>(r.back())].push_back(&r);

  std::vector<int> colors(static_cast<size_t>(h.n), 0);
  std::function<bool(int, int)> assign = [&](int point, int k) -> bool {
    if (point == h.n) return true;
    for (int col = 1; col <= k; ++col) {
      colors[static_cast<size_t>(point)] = col;
      bool ok = true;
      for (const Range* r : closing_at[static_cast<size_t>(point)]) {
        int best = 0, count = 0;
        for (PointId p : *r) {
          int cp = colors[static_cast<size_t>(p)];
          if (cp > best) {
            best = cp;
            count = 1;
          } else if (cp == best) {
            ++count;
          }
        }
        if (count != 1) {
          ok = false;
          break;
        }
      }
      if (ok && assign(point + 1, k)) return true;
    }
    colors[static_cast<size_t>(point)] = 0;
    return false;
  };

  for (int k = 1; k <= max_colors; ++k) {
    if (assign(0, k)) {
      // First feasible k is the chromatic number: a witness using fewer
      // distinct colors would compact to a feasible smaller palette.
      return UmChromaticResult{k, Coloring{colors}};
    }
  }
  return std::nullopt;
}

Range make_interval(int lo, int hi) {
  if (lo > hi) throw InputError("make_interval: empty interval");
  Range r(static_cast<size_t>(hi - lo + 1));
  std::iota(r.begin(), r.end(), lo);
  return r;
}

Hypergraph make_intervals_hypergraph(int n) {
  if (n < 1) throw InputError("make_intervals_hypergraph: n must be >= 1");
  if (n > 64) throw InputError("make_intervals_hypergraph: n <= 64 (quadratic range count)");
  std::vector<Range> ranges;
  ranges.reserve(static_cast<size_t>(n) * (static_cast<size_t>(n) + 1) / 2);
  for (int lo = 0; lo < n; ++lo)
    for (int hi = lo; hi < n; ++hi) ranges.push_back(make_interval(lo, hi));
  return Hypergraph::make(n, std::move(ranges));
}

}  // namespace hitsets
