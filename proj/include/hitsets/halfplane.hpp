#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitsets/geometry.hpp"
#include "hitsets/hypergraph.hpp"
#include "hitsets/online.hpp"

namespace hitsets {

enum class Side { below, above };
std::string to_string(Side side);

/// Closed half-plane against the line a*x + b*y = c: side below keeps the
/// points with a*x + b*y <= c, side above those with >= c. Queries are
/// normalized to b >= 0, so the tags carry their geometric meaning for
/// non-vertical lines; vertical lines (b = 0) are legal and routed by tag.
struct HalfPlaneQuery {
  Rational a, b, c;
  Side side = Side::below;
};

/// Rejects (a,b) = (0,0) and b < 0 (flip the signs of a, b, c to normalize).
void validate_query(const HalfPlaneQuery& q);

bool halfplane_contains(const HalfPlaneQuery& q, const RatPoint& p);

/// Vertices of the lower convex hull in ascending x, collinear middle points
/// excluded: exactly the points separable from the rest by a line below all
/// others. Rejects inputs with a shared x-coordinate.
std::vector<PointId> lower_extreme_points(const std::vector<RatPoint>& points);
std::vector<PointId> upper_extreme_points(const std::vector<RatPoint>& points);

struct HalfPlaneInstance {
  std::vector<RatPoint> points;
  std::vector<PointId> lower_extreme;  ///< ascending x
  std::vector<PointId> upper_extreme;  ///< ascending x
  Coloring lower_ranking;              ///< ruler ranking over envelope positions
  Coloring upper_ranking;

  static HalfPlaneInstance make(std::vector<RatPoint> pts);
};

/// All point ids inside the closed half-plane, ascending.
std::vector<PointId> halfplane_range(const HalfPlaneInstance& inst, const HalfPlaneQuery& q);

/// Positions (in the routed envelope's order) of the extreme points inside
/// q, or nothing when no extreme point is hit. The hits of a half-plane
/// along its envelope are always contiguous; a gap raises a diagnostic.
std::optional<std::pair<int, int>> halfplane_to_interval(const HalfPlaneInstance& inst,
                                                         const HalfPlaneQuery& q);

/// Game state: one shared hitting set for membership checks, one
/// ruler-coloring stabber per envelope for the color bookkeeping.
struct AlgPState {
  const HalfPlaneInstance* instance = nullptr;
  HittingSet chosen;       ///< point ids across both envelopes
  AlgCState lower_state;   ///< over lower envelope positions
  AlgCState upper_state;   ///< over upper envelope positions
};

AlgPState make_algp_state(const HalfPlaneInstance& inst);

/// Presents one half-plane. Returns the chosen point id; nothing when the
/// range was already stabbed or contains no points at all.
std::optional<PointId> algp_step(AlgPState& state, const HalfPlaneQuery& q);

}  // namespace hitsets
