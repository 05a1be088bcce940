#pragma once

#include <optional>
#include <vector>

#include "hitsets/errors.hpp"

namespace hitsets {

using PointId = int;

/// A range is a nonempty set of points, stored sorted and duplicate-free.
using Range = std::vector<PointId>;

/// Sorts, deduplicates and validates a point list as a Range.
Range make_range(std::vector<PointId> points);

bool ranges_intersect(const Range& a, const Range& b);
Range range_union(const Range& a, const Range& b);
bool range_subset(const Range& inner, const Range& outer);
bool range_contains(const Range& r, PointId p);
Range range_difference(const Range& a, const Range& b);

/// Finite hypergraph over ground set {0..n-1}. Ranges are kept sorted
/// lexicographically and are pairwise distinct as sets.
struct Hypergraph {
  int n = 0;
  std::vector<Range> ranges;

  /// Validates members, normalizes each range and the range order, and
  /// rejects duplicate ranges.
  static Hypergraph make(int n, std::vector<Range> ranges);

  bool has_range(const Range& r) const;
};

/// Assignment of an integer color to every point. Validators never assume a
/// particular base; only relative order of colors matters.
struct Coloring {
  std::vector<int> colors;

  int size() const { return static_cast<int>(colors.size()); }
  int operator[](PointId p) const { return colors[static_cast<size_t>(p)]; }

  /// Number of distinct colors actually used.
  int palette_size() const;
  int max_color() const;
};

/// Monotone set of chosen points. Insertions only; sorted access for output.
struct HittingSet {
  std::vector<PointId> points;  // sorted, unique

  bool contains(PointId p) const;
  /// Returns false if p was already present.
  bool insert(PointId p);
  bool stabs(const Range& r) const;
  int size() const { return static_cast<int>(points.size()); }
};

/// Closed under unions of intersecting range pairs. The empty range family
/// qualifies vacuously.
bool is_itype(const Hypergraph& h);

/// Every singleton {x} is a range. With n == 0 this holds vacuously.
bool is_separable(const Hypergraph& h);

/// Every range attains its maximum color at exactly one point.
bool is_unique_max(const Hypergraph& h, const Coloring& c);

/// Every range attains its minimum color at exactly one point.
bool is_unique_min(const Hypergraph& h, const Coloring& c);

/// True when every listed range contains a chosen point.
bool verify_hitting(const std::vector<Range>& ranges, const HittingSet& hs);

struct UmChromaticResult {
  int chromatic = 0;   // least feasible palette size
  Coloring witness;    // colors in 1..chromatic
};

/// Least number of colors admitting a unique-max coloring, by ascending-k
/// exhaustive search with pruning on fully colored ranges. Returns nullopt
/// when no coloring with at most max_colors colors exists. Guarded to
/// n <= 16; intended for desk-scale ground sets.
std::optional<UmChromaticResult> um_chromatic_exact(const Hypergraph& h, int max_colors);

/// All n(n+1)/2 contiguous intervals over {0..n-1}. Guarded to n <= 64;
/// online interval games never materialize this.
Hypergraph make_intervals_hypergraph(int n);

/// The interval [lo, hi] as a Range.
Range make_interval(int lo, int hi);

}  // namespace hitsets
