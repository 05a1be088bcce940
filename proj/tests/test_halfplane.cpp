#include <optional>
#include <vector>

#include "doctest.h"
#include "hitsets/arena.hpp"
#include "hitsets/errors.hpp"
#include "hitsets/halfplane.hpp"
#include "hitsets/hypergraph.hpp"

using namespace hitsets;

namespace {

std::vector<RatPoint> roof_points() {
  return {RatPoint{0, 0}, RatPoint{1, 1}, RatPoint{2, 0}};
}

/// Chord of the parabola through points i and j: y = -(i+j)x - ij flipped to
/// a*x + y <= c form for the points on or below it.
HalfPlaneQuery parabola_chord(int i, int j) {
  return HalfPlaneQuery{Rational(-(i + j)), 1, Rational(-i * j), Side::below};
}

}  // namespace

TEST_CASE("envelope extremes on a three-point roof") {
  std::vector<RatPoint> pts = roof_points();
  CHECK(lower_extreme_points(pts) == std::vector<PointId>{0, 2});
  CHECK(upper_extreme_points(pts) == std::vector<PointId>{0, 1, 2});
}

TEST_CASE("parabola points are all lower-extreme") {
  HalfPlaneInstance inst = make_parabola_instance(8);
  CHECK(inst.lower_extreme.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(inst.lower_extreme[static_cast<size_t>(i)] == i);
  // Upper envelope of a convex point set keeps only the two endpoints.
  CHECK(inst.upper_extreme == std::vector<PointId>{0, 7});
}

TEST_CASE("two points are extreme on both envelopes") {
  std::vector<RatPoint> pts = {RatPoint{0, 0}, RatPoint{1, 5}};
  CHECK(lower_extreme_points(pts) == std::vector<PointId>{0, 1});
  CHECK(upper_extreme_points(pts) == std::vector<PointId>{0, 1});
}

TEST_CASE("instances require distinct x coordinates") {
  CHECK_THROWS_AS(HalfPlaneInstance::make({RatPoint{0, 0}, RatPoint{0, 1}}), InputError);
  CHECK_THROWS_AS(HalfPlaneInstance::make({RatPoint{1, 2}, RatPoint{1, 2}}), InputError);
}

TEST_CASE("query normalization rejects degenerate and flipped forms") {
  CHECK_THROWS_AS(validate_query(HalfPlaneQuery{0, 0, 1, Side::below}), InputError);
  CHECK_THROWS_AS(validate_query(HalfPlaneQuery{1, -1, 0, Side::below}), InputError);
  validate_query(HalfPlaneQuery{1, 0, 0, Side::below});  // vertical is fine
  validate_query(HalfPlaneQuery{Rational(1, 2), 1, 0, Side::above});
}

TEST_CASE("half-plane membership is exact on the boundary") {
  HalfPlaneQuery below{1, 1, 1, Side::below};  // x + y <= 1
  CHECK(halfplane_contains(below, RatPoint{Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(halfplane_contains(below, RatPoint{1, 1}));
  HalfPlaneQuery above{1, 1, 1, Side::above};
  CHECK(halfplane_contains(above, RatPoint{Rational(1, 2), Rational(1, 2)}));
  CHECK(halfplane_contains(above, RatPoint{1, 1}));
  CHECK_FALSE(halfplane_contains(above, RatPoint{0, 0}));
}

TEST_CASE("chords of the parabola carve index intervals") {
  HalfPlaneInstance inst = make_parabola_instance(8);

  auto iv = halfplane_to_interval(inst, parabola_chord(2, 5));
  REQUIRE(iv.has_value());
  CHECK(iv->first == 2);
  CHECK(iv->second == 5);

  // A line below all points leaves an empty range.
  auto empty = halfplane_to_interval(inst, HalfPlaneQuery{0, 1, -1, Side::below});
  CHECK_FALSE(empty.has_value());

  // A line above all points takes the whole envelope.
  auto all = halfplane_to_interval(inst, HalfPlaneQuery{0, 1, 100, Side::below});
  REQUIRE(all.has_value());
  CHECK(all->first == 0);
  CHECK(all->second == 7);

  CHECK(halfplane_range(inst, parabola_chord(2, 5)) == make_interval(2, 5));
}

TEST_CASE("upper-side queries realize intervals of the upper envelope") {
  std::vector<RatPoint> pts = roof_points();
  HalfPlaneInstance inst = HalfPlaneInstance::make(pts);
  // Everything on or above y = 1/2: only the middle point.
  auto iv = halfplane_to_interval(inst, HalfPlaneQuery{0, 1, Rational(1, 2), Side::above});
  REQUIRE(iv.has_value());
  CHECK(iv->first == iv->second);
  CHECK(inst.upper_extreme[static_cast<size_t>(iv->first)] == 1);
}

TEST_CASE("the half-plane player stabs each new range once") {
  HalfPlaneInstance inst = make_parabola_instance(8);
  AlgPState st = make_algp_state(inst);

  auto p1 = algp_step(st, parabola_chord(0, 7));
  REQUIRE(p1.has_value());
  CHECK(st.chosen.size() == 1);

  // The same chord again: already stabbed, nothing added.
  auto p2 = algp_step(st, parabola_chord(0, 7));
  CHECK_FALSE(p2.has_value());
  CHECK(st.chosen.size() == 1);

  // An empty range: nothing to do, and no error.
  auto p3 = algp_step(st, HalfPlaneQuery{0, 1, -5, Side::below});
  CHECK_FALSE(p3.has_value());
  CHECK(st.chosen.size() == 1);
}

TEST_CASE("points chosen on one side also stab ranges on the other") {
  std::vector<RatPoint> pts = {RatPoint{0, 0}, RatPoint{1, 5}};
  HalfPlaneInstance inst = HalfPlaneInstance::make(pts);
  AlgPState st = make_algp_state(inst);

  auto first = algp_step(st, HalfPlaneQuery{0, 1, 0, Side::below});  // only point 0
  REQUIRE(first.has_value());
  CHECK(*first == 0);

  // An above-side query containing point 0 is already stabbed even though
  // the stab was booked on the lower envelope.
  auto second = algp_step(st, HalfPlaneQuery{0, 1, 0, Side::above});
  CHECK_FALSE(second.has_value());
  CHECK(st.chosen.size() == 1);
}

TEST_CASE("half-plane games replay identically and pass the color audit") {
  HalfPlaneCase c = random_halfplane_case(5, 30, 20);
  auto play = [&c] {
    HalfPlaneEngine engine(c.instance);
    FixedSource<HalfPlaneQuery> source(c.queries);
    return run_game(engine, source);
  };
  Transcript<HalfPlaneQuery> a = play();
  Transcript<HalfPlaneQuery> b = play();
  CHECK(a.final_set.points == b.final_set.points);
  std::string detail;
  bool audit = audit_halfplane_colors(c.instance, a, &detail);
  INFO(detail);
  CHECK(audit);
}
