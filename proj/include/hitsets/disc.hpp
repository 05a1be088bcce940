#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hitsets/geometry.hpp"
#include "hitsets/hypergraph.hpp"
#include "hitsets/online.hpp"
#include "hitsets/parallel.hpp"

namespace hitsets {

/// Unit-radius disc given by its center.
struct DiscQuery {
  RatPoint center;
};

struct TileKey {
  long long i = 0;
  long long j = 0;
  auto operator<=>(const TileKey&) const = default;
};

/// One (tile, type) slice: the points of the tile isolable by a disc of
/// that type, in angular order around the type's quadrant center, plus a
/// ruler ranking over the positions.
struct TileTypeData {
  std::vector<PointId> extreme;
  Coloring ranking;  ///< empty coloring when extreme is empty
};

struct TileData {
  TileKey key;
  RatPoint center;                       ///< center of the half-open 1/2 x 1/2 square
  std::array<RatPoint, 4> quad_centers;  ///< o^1..o^4 = center + (±5/8, ±5/8): SW, SE, NW, NE
  std::vector<PointId> sites;            ///< instance points inside this tile
  std::array<TileTypeData, 4> types;     ///< index tau - 1
};

/// Preprocessed unit-disc instance: a tiling translation keeping every
/// point interior to its tile, and per-tile extreme-point structures.
struct DiscInstance {
  std::vector<RatPoint> points;
  Rational offset_x, offset_y;
  std::map<TileKey, TileData> tiles;

  static DiscInstance make(std::vector<RatPoint> pts, ExecMode mode = ExecMode::serial);
  TileKey tile_of(const RatPoint& p) const;
};

/// Closed-square versus closed-disc intersection test.
bool disc_meets_tile(const TileData& tile, const DiscQuery& d);

/// Least i in 1..4 with quadrant center o^i inside the disc. Requires the
/// disc to meet the tile square; by construction some center is always
/// inside, and a miss raises an InvariantViolation.
int type_of(const TileData& tile, const DiscQuery& d);

/// All point ids inside the closed unit disc, ascending.
std::vector<PointId> disc_range(const DiscInstance& inst, const DiscQuery& d);

/// Tiles holding at least one instance point inside d, in ascending key
/// order, found by scanning the 5x5 tile block around the center.
std::vector<TileKey> tiles_with_points(const DiscInstance& inst, const DiscQuery& d);

/// Angular-ordered extreme points of one (tile, type). tau in 1..4.
const std::vector<PointId>& extreme_points(const DiscInstance& inst, TileKey key, int tau);

/// Per-tile detail of one stab, kept for transcript-level checks.
struct DiscStabRecord {
  TileKey tile;
  int tau = 0;
  int position = -1;  ///< stabbed position in the (tile, type) angular order
  int color = 0;      ///< ranking color of that position
  PointId point = -1;
};

struct DiscStepOutcome {
  bool was_stabbed = false;  ///< already hit on arrival, or an empty range
  std::vector<PointId> added;
  std::vector<DiscStabRecord> stabs;
  int tiles_touched = 0;  ///< tiles holding range points, unstabbed arrivals only
};

struct DiscGameState {
  const DiscInstance* instance = nullptr;
  HittingSet chosen;
  /// per-(tile, type) stabber over angular positions
  std::map<std::pair<TileKey, int>, AlgCState> stabbers;
  int max_tiles_per_arrival = 0;
};

DiscGameState make_algd_state(const DiscInstance& inst);

/// Presents one disc. An unstabbed arrival adds one point per tile holding
/// range points (so possibly several points). Hard cap: 25 tiles.
DiscStepOutcome algd_step(DiscGameState& state, const DiscQuery& d);

/// True when the two bounding circles cross at most once inside the cone
/// with apex at the tile's type-tau quadrant center spanned by the tile
/// square. Both discs must be of type tau for this tile.
bool pseudoline_check(const TileData& tile, int tau, const DiscQuery& d1, const DiscQuery& d2);

}  // namespace hitsets
