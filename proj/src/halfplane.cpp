#include "hitsets/halfplane.hpp"

#include <algorithm>
#include <numeric>

#include "hitsets/errors.hpp"
#include "hitsets/ranking.hpp"

namespace hitsets {

std::string to_string(Side side) { return side == Side::below ? "below" : "above"; }

void validate_query(const HalfPlaneQuery& q) {
  if (q.a == 0 && q.b == 0) throw InputError("half-plane: (a, b) must not be (0, 0)");
  if (q.b < 0)
    throw InputError("half-plane: b must be >= 0; multiply a, b and c by -1 to normalize");
}

bool halfplane_contains(const HalfPlaneQuery& q, const RatPoint& p) {
  Rational value = q.a * p.x + q.b * p.y;
  return q.side == Side::below ? value <= q.c : value >= q.c;
}

namespace {

/// Point ids sorted by ascending x; rejects shared x-coordinates, which the
/// envelope order cannot break.
std::vector<PointId> x_order(const std::vector<RatPoint>& points) {
  std::vector<PointId> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&points](PointId a, PointId b) {
    return points[static_cast<size_t>(a)].x < points[static_cast<size_t>(b)].x;
  });
  for (size_t i = 1; i < order.size(); ++i)
    if (points[static_cast<size_t>(order[i - 1])].x == points[static_cast<size_t>(order[i])].x)
      throw InputError("half-plane instance: two points share an x-coordinate");
  return order;
}

/// Monotone chain keeping strict turns only. dir +1 builds the lower hull
/// (pop on cross <= 0), dir -1 the upper hull.
std::vector<PointId> hull_chain(const std::vector<RatPoint>& points, int dir) {
  std::vector<PointId> order = x_order(points);
  std::vector<PointId> hull;
  for (PointId id : order) {
    while (hull.size() >= 2) {
      int turn = orientation(points[static_cast<size_t>(hull[hull.size() - 2])],
                             points[static_cast<size_t>(hull.back())],
                             points[static_cast<size_t>(id)]);
      if (dir * turn <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(id);
  }
  return hull;
}

}  // namespace

std::vector<PointId> lower_extreme_points(const std::vector<RatPoint>& points) {
  return hull_chain(points, +1);
}

std::vector<PointId> upper_extreme_points(const std::vector<RatPoint>& points) {
  return hull_chain(points, -1);
}

HalfPlaneInstance HalfPlaneInstance::make(std::vector<RatPoint> pts) {
  if (pts.empty()) throw InputError("half-plane instance: needs at least one point");
  HalfPlaneInstance inst;
  inst.points = std::move(pts);
  inst.lower_extreme = lower_extreme_points(inst.points);
  inst.upper_extreme = upper_extreme_points(inst.points);
  inst.lower_ranking = rank_path(static_cast<int>(inst.lower_extreme.size())).coloring;
  inst.upper_ranking = rank_path(static_cast<int>(inst.upper_extreme.size())).coloring;
  return inst;
}

std::vector<PointId> halfplane_range(const HalfPlaneInstance& inst, const HalfPlaneQuery& q) {
  validate_query(q);
  std::vector<PointId> r;
  for (size_t i = 0; i < inst.points.size(); ++i)
    if (halfplane_contains(q, inst.points[i])) r.push_back(static_cast<PointId>(i));
  return r;
}

std::optional<std::pair<int, int>> halfplane_to_interval(const HalfPlaneInstance& inst,
                                                         const HalfPlaneQuery& q) {
  validate_query(q);
  const auto& envelope = q.side == Side::below ? inst.lower_extreme : inst.upper_extreme;
  int first = -1, last = -1, count = 0;
  for (size_t pos = 0; pos < envelope.size(); ++pos) {
    if (halfplane_contains(q, inst.points[static_cast<size_t>(envelope[pos])])) {
      if (first < 0) first = static_cast<int>(pos);
      last = static_cast<int>(pos);
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  if (count != last - first + 1)
    throw InvariantViolation(
        "half-plane hits a non-contiguous envelope stretch; the envelope order is broken");
  return std::make_pair(first, last);
}

AlgPState make_algp_state(const HalfPlaneInstance& inst) {
  AlgPState state;
  state.instance = &inst;
  state.lower_state = make_algc_state(inst.lower_ranking);
  state.upper_state = make_algc_state(inst.upper_ranking);
  return state;
}

std::optional<PointId> algp_step(AlgPState& state, const HalfPlaneQuery& q) {
  const HalfPlaneInstance& inst = *state.instance;
  std::vector<PointId> r = halfplane_range(inst, q);
  if (r.empty()) return std::nullopt;
  for (PointId p : r)
    if (state.chosen.contains(p)) return std::nullopt;

  auto interval = halfplane_to_interval(inst, q);
  if (!interval)
    throw InvariantViolation(
        "half-plane contains points but misses the routed envelope entirely");
  auto& algc = q.side == Side::below ? state.lower_state : state.upper_state;
  auto position = algc_step(algc, make_interval(interval->first, interval->second));
  if (!position)
    throw InvariantViolation(
        "half-plane unstabbed globally but already stabbed in its envelope state");
  const auto& envelope = q.side == Side::below ? inst.lower_extreme : inst.upper_extreme;
  PointId chosen = envelope[static_cast<size_t>(*position)];
  state.chosen.insert(chosen);
  return chosen;
}

}  // namespace hitsets
