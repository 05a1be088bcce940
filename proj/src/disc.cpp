#include "hitsets/disc.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hitsets/errors.hpp"
#include "hitsets/ranking.hpp"

namespace hitsets {

namespace {

/// Sound double-precision screen for exact predicates: all coordinates stay
/// at desk scale (|value| well under 10^3), so accumulated rounding error is
/// below 1e-11; verdicts farther than this margin from the boundary are
/// trusted, everything closer is confirmed with exact arithmetic.
constexpr double kPrefilterMargin = 1e-9;

/// Quadrant-center offsets from the tile center, in o^1..o^4 order:
/// SW, SE, NW, NE.
constexpr std::array<std::pair<int, int>, 4> kQuadSigns{{{-1, -1}, {1, -1}, {-1, 1}, {1, 1}}};

Rational abs_rat(const Rational& r) { return r < 0 ? Rational(-r) : r; }

bool coordinate_on_tile_boundary(const Rational& c, const Rational& off) {
  Rational scaled = 2 * (c - off);
  return boost::multiprecision::denominator(scaled) == 1;
}

}  // namespace

TileKey DiscInstance::tile_of(const RatPoint& p) const {
  return TileKey{rational_floor(2 * (p.x - offset_x)), rational_floor(2 * (p.y - offset_y))};
}

bool disc_meets_tile(const TileData& tile, const DiscQuery& d) {
  Rational quarter(1, 4);
  Rational gx = abs_rat(d.center.x - tile.center.x);
  Rational gy = abs_rat(d.center.y - tile.center.y);
  gx = gx <= quarter ? Rational(0) : Rational(gx - quarter);
  gy = gy <= quarter ? Rational(0) : Rational(gy - quarter);
  return gx * gx + gy * gy <= 1;
}

int type_of(const TileData& tile, const DiscQuery& d) {
  if (!disc_meets_tile(tile, d)) throw InputError("type_of: the disc misses the tile");
  for (int i = 0; i < 4; ++i)
    if (sqdist(d.center, tile.quad_centers[static_cast<size_t>(i)]) <= 1) return i + 1;
  throw InvariantViolation(
      "a disc meeting a tile contains no quadrant center of its enlarged square");
}

std::vector<PointId> disc_range(const DiscInstance& inst, const DiscQuery& d) {
  std::vector<PointId> r;
  for (size_t i = 0; i < inst.points.size(); ++i)
    if (sqdist(inst.points[i], d.center) <= 1) r.push_back(static_cast<PointId>(i));
  return r;
}

std::vector<TileKey> tiles_with_points(const DiscInstance& inst, const DiscQuery& d) {
  if (inst.tiles.empty()) return {};
  long long i_lo = rational_floor(2 * (d.center.x - 1 - inst.offset_x));
  long long i_hi = rational_floor(2 * (d.center.x + 1 - inst.offset_x));
  long long j_lo = rational_floor(2 * (d.center.y - 1 - inst.offset_y));
  long long j_hi = rational_floor(2 * (d.center.y + 1 - inst.offset_y));
  std::vector<TileKey> out;
  for (long long i = i_lo; i <= i_hi; ++i)
    for (long long j = j_lo; j <= j_hi; ++j) {
      auto it = inst.tiles.find(TileKey{i, j});
      if (it == inst.tiles.end()) continue;
      for (PointId id : it->second.sites)
        if (sqdist(inst.points[static_cast<size_t>(id)], d.center) <= 1) {
          out.push_back(it->first);
          break;
        }
    }
  return out;
}

const std::vector<PointId>& extreme_points(const DiscInstance& inst, TileKey key, int tau) {
  if (tau < 1 || tau > 4) throw InputError("extreme_points: tau must be in 1..4");
  auto it = inst.tiles.find(key);
  if (it == inst.tiles.end()) throw InputError("extreme_points: no such tile");
  return it->second.types[static_cast<size_t>(tau - 1)].extreme;
}

namespace {

/// Searches one tile for its extreme points. A candidate disc center
/// witnesses site x for type tau when exactly one tile site lies inside the
/// closed unit disc around it and tau is the least index whose quadrant
/// center it covers. Candidates: the sites themselves, twelve exact
/// unit-offset probes per site, every intersection point of the unit
/// circles around sites and quadrant centers, and tiny rational radial
/// displacements of those intersections (to land inside cells whose
/// boundary the intersection only touches). Every reported witness is
/// confirmed with exact arithmetic, so the search never overclaims; a miss
/// would surface later as a loud gap during a game step.
void compute_tile_extremes(const std::vector<RatPoint>& all, TileData& tile) {
  const std::vector<PointId>& sites = tile.sites;
  const size_t m = sites.size();

  std::vector<double> sx(m), sy(m);
  for (size_t i = 0; i < m; ++i) {
    sx[i] = to_double(all[static_cast<size_t>(sites[i])].x);
    sy[i] = to_double(all[static_cast<size_t>(sites[i])].y);
  }

  std::array<std::vector<char>, 4> marked;
  for (auto& v : marked) v.assign(m, 0);

  // Exact classification of a candidate center (with the double screen for
  // clearly-decided sites).
  auto consider = [&](const QPoint& cand) {
    double cx = cand.x_approx();
    double cy = cand.y_approx();
    int count = 0;
    size_t witness = m;
    for (size_t si = 0; si < m; ++si) {
      double dx = cx - sx[si];
      double dy = cy - sy[si];
      double dd = dx * dx + dy * dy;
      if (dd < 1 - kPrefilterMargin) {
        witness = si;
        if (++count > 1) return;
      } else if (dd <= 1 + kPrefilterMargin) {
        if (compare_sqdist(cand, all[static_cast<size_t>(sites[si])], 1) <= 0) {
          witness = si;
          if (++count > 1) return;
        }
      }
    }
    if (count != 1) return;
    int tau = 0;
    for (int i = 0; i < 4; ++i)
      if (compare_sqdist(cand, tile.quad_centers[static_cast<size_t>(i)], 1) <= 0) {
        tau = i + 1;
        break;
      }
    if (tau == 0)
      throw InvariantViolation(
          "a disc containing a tile point covers no quadrant center of the tile");
    marked[static_cast<size_t>(tau - 1)][witness] = 1;
  };

  // Quick screen for intersection points: probes displace by ~1e-12, so a
  // vertex with two sites clearly inside (or none possibly inside) cannot
  // spawn a witness and its probe family is skipped wholesale.
  auto worth_probing = [&](const QPoint& w) {
    double cx = w.x_approx();
    double cy = w.y_approx();
    int strict = 0;
    bool any = false;
    for (size_t si = 0; si < m; ++si) {
      double dx = cx - sx[si];
      double dy = cy - sy[si];
      double dd = dx * dx + dy * dy;
      if (dd < 1 - kPrefilterMargin && ++strict > 1) return false;
      if (dd <= 1 + kPrefilterMargin) any = true;
    }
    return any;
  };

  std::vector<RatPoint> centers;
  centers.reserve(m + 4);
  for (PointId id : sites) centers.push_back(all[static_cast<size_t>(id)]);
  for (const RatPoint& o : tile.quad_centers) centers.push_back(o);

  const Rational lambda(BigInt(1), BigInt(1) << 40);

  for (size_t a = 0; a < centers.size(); ++a)
    for (size_t b = a + 1; b < centers.size(); ++b)
      for (const QPoint& w : unit_circle_intersections(centers[a], centers[b])) {
        if (!worth_probing(w)) continue;
        consider(w);
        for (int s : {-1, +1}) {
          consider(w.displaced(centers[a], s * lambda));
          consider(w.displaced(centers[b], s * lambda));
        }
        for (int s1 : {-1, +1})
          for (int s2 : {-1, +1})
            consider(w.displaced(centers[a], s1 * lambda).displaced(centers[b], s2 * lambda));
      }

  // Unit-length rational offsets: axis directions and 3-4-5 slopes.
  static const std::array<std::pair<Rational, Rational>, 12> dirs = [] {
    std::array<std::pair<Rational, Rational>, 12> d;
    size_t t = 0;
    d[t++] = {Rational(1), Rational(0)};
    d[t++] = {Rational(-1), Rational(0)};
    d[t++] = {Rational(0), Rational(1)};
    d[t++] = {Rational(0), Rational(-1)};
    for (int sa : {-1, +1})
      for (int sb : {-1, +1}) {
        d[t++] = {Rational(3 * sa, 5), Rational(4 * sb, 5)};
        d[t++] = {Rational(4 * sa, 5), Rational(3 * sb, 5)};
      }
    return d;
  }();

  for (size_t si = 0; si < m; ++si) {
    const RatPoint& p = all[static_cast<size_t>(sites[si])];
    consider(QPoint::from_rational(p));
    for (const auto& [ux, uy] : dirs)
      consider(QPoint::from_rational(RatPoint{p.x + ux, p.y + uy}));
  }

  // Order each type's extreme points by angle around its quadrant center.
  // The whole tile sits inside one open quadrant of directions from any
  // quadrant center, so the cross-product comparator is a total order.
  for (int tau = 1; tau <= 4; ++tau) {
    std::vector<PointId> v;
    for (size_t si = 0; si < m; ++si)
      if (marked[static_cast<size_t>(tau - 1)][si]) v.push_back(sites[si]);
    const RatPoint& o = tile.quad_centers[static_cast<size_t>(tau - 1)];
    for (size_t a = 0; a < v.size(); ++a)
      for (size_t b = a + 1; b < v.size(); ++b)
        if (orientation(o, all[static_cast<size_t>(v[a])], all[static_cast<size_t>(v[b])]) == 0)
          throw InputError(
              "degenerate input: two tile points are collinear with a quadrant center");
    std::sort(v.begin(), v.end(), [&](PointId a, PointId b) {
      return orientation(o, all[static_cast<size_t>(a)], all[static_cast<size_t>(b)]) > 0;
    });
    TileTypeData& slot = tile.types[static_cast<size_t>(tau - 1)];
    slot.extreme = std::move(v);
    slot.ranking = slot.extreme.empty()
                       ? Coloring{{}}
                       : rank_path(static_cast<int>(slot.extreme.size())).coloring;
  }
}

}  // namespace

DiscInstance DiscInstance::make(std::vector<RatPoint> pts, ExecMode mode) {
  {
    std::vector<RatPoint> sorted = pts;
    std::sort(sorted.begin(), sorted.end(), [](const RatPoint& a, const RatPoint& b) {
      return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    for (size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i - 1] == sorted[i]) throw InputError("disc instance: duplicate point");
  }

  DiscInstance inst;
  inst.points = std::move(pts);

  // Deterministic tiling translation keeping every coordinate off the tile
  // boundaries: try 0, 1/8, 1/16, ... until clean. Each coordinate rules
  // out at most one candidate, so the loop terminates.
  Rational off(0);
  Rational next(1, 8);
  auto clean = [&inst](const Rational& o) {
    for (const RatPoint& p : inst.points)
      if (coordinate_on_tile_boundary(p.x, o) || coordinate_on_tile_boundary(p.y, o)) return false;
    return true;
  };
  size_t guard = 2 * inst.points.size() + 4;
  while (!clean(off)) {
    off = next;
    next /= 2;
    if (guard-- == 0) throw InvariantViolation("tiling offset search failed to terminate");
  }
  inst.offset_x = off;
  inst.offset_y = off;

  for (size_t id = 0; id < inst.points.size(); ++id) {
    TileKey key = inst.tile_of(inst.points[id]);
    inst.tiles[key].sites.push_back(static_cast<PointId>(id));
  }
  std::vector<TileData*> order;
  for (auto& [key, tile] : inst.tiles) {
    tile.key = key;
    tile.center = RatPoint{inst.offset_x + Rational(2 * key.i + 1, 4),
                           inst.offset_y + Rational(2 * key.j + 1, 4)};
    Rational five_eighths(5, 8);
    for (size_t q = 0; q < 4; ++q)
      tile.quad_centers[q] = RatPoint{tile.center.x + kQuadSigns[q].first * five_eighths,
                                      tile.center.y + kQuadSigns[q].second * five_eighths};
    order.push_back(&tile);
  }
  for_each_index(order.size(), mode,
                 [&](size_t t) { compute_tile_extremes(inst.points, *order[t]); });
  return inst;
}

DiscGameState make_algd_state(const DiscInstance& inst) {
  DiscGameState state;
  state.instance = &inst;
  return state;
}

DiscStepOutcome algd_step(DiscGameState& state, const DiscQuery& d) {
  const DiscInstance& inst = *state.instance;
  DiscStepOutcome out;
  std::vector<PointId> r = disc_range(inst, d);
  if (r.empty()) {
    out.was_stabbed = true;  // vacuously stabbed: nothing to hit
    return out;
  }
  for (PointId p : r)
    if (state.chosen.contains(p)) {
      out.was_stabbed = true;
      return out;
    }

  std::vector<TileKey> keys = tiles_with_points(inst, d);
  out.tiles_touched = static_cast<int>(keys.size());
  if (keys.size() > 25)
    throw InvariantViolation("unstabbed disc touches more than 25 tiles with range points");
  state.max_tiles_per_arrival = std::max(state.max_tiles_per_arrival, out.tiles_touched);

  for (const TileKey& key : keys) {
    const TileData& tile = inst.tiles.at(key);
    int tau = type_of(tile, d);
    const TileTypeData& tt = tile.types[static_cast<size_t>(tau - 1)];
    int first = -1, last = -1, count = 0;
    for (size_t pos = 0; pos < tt.extreme.size(); ++pos)
      if (sqdist(inst.points[static_cast<size_t>(tt.extreme[pos])], d.center) <= 1) {
        if (first < 0) first = static_cast<int>(pos);
        last = static_cast<int>(pos);
        ++count;
      }
    if (count == 0)
      throw InvariantViolation(
          "a tile holds range points but no extreme point of the arriving type is hit");
    if (count != last - first + 1)
      throw InvariantViolation("disc hits a non-contiguous stretch of the angular order");

    auto [it, created] = state.stabbers.try_emplace(std::make_pair(key, tau),
                                                    make_algc_state(tt.ranking));
    (void)created;
    auto position = algc_step(it->second, make_interval(first, last));
    if (!position)
      throw InvariantViolation("disc unstabbed globally but stabbed in its tile-type state");
    PointId pt = tt.extreme[static_cast<size_t>(*position)];
    state.chosen.insert(pt);
    out.added.push_back(pt);
    out.stabs.push_back(DiscStabRecord{key, tau, *position,
                                       tt.ranking[*position], pt});
  }
  return out;
}

bool pseudoline_check(const TileData& tile, int tau, const DiscQuery& d1, const DiscQuery& d2) {
  if (tau < 1 || tau > 4) throw InputError("pseudoline_check: tau must be in 1..4");
  if (type_of(tile, d1) != tau || type_of(tile, d2) != tau)
    throw InputError("pseudoline_check: both discs must have the given type for this tile");
  const RatPoint& apex = tile.quad_centers[static_cast<size_t>(tau - 1)];

  Rational quarter(1, 4);
  std::array<RatPoint, 4> dirs;
  size_t t = 0;
  for (int sx : {-1, +1})
    for (int sy : {-1, +1})
      dirs[t++] = RatPoint{tile.center.x + sx * quarter - apex.x,
                           tile.center.y + sy * quarter - apex.y};
  auto cross_rr = [](const RatPoint& u, const RatPoint& v) {
    return Rational(u.x * v.y - u.y * v.x).sign();
  };
  // The four corner directions span less than a quarter turn, so the pair
  // of angular extremes is well defined.
  RatPoint lo = dirs[0], hi = dirs[0];
  for (const RatPoint& u : dirs) {
    if (cross_rr(u, lo) > 0) lo = u;
    if (cross_rr(hi, u) > 0) hi = u;
  }

  int inside = 0;
  for (const QPoint& w : unit_circle_intersections(d1.center, d2.center))
    if (cross_sign_dir(apex, lo, w) >= 0 && cross_sign_dir(apex, hi, w) <= 0) ++inside;
  return inside <= 1;
}

}  // namespace hitsets
