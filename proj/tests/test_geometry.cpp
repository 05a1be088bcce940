#include <vector>

#include "doctest.h"
#include "hitsets/errors.hpp"
#include "hitsets/geometry.hpp"
#include "hitsets/rational.hpp"

using namespace hitsets;

TEST_CASE("rational parsing and formatting round-trip") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2.75") == Rational(-11, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(format_rational(Rational(3, 4)) == "3/4");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
  CHECK(parse_rational(format_rational(Rational(22, 7))) == Rational(22, 7));
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("rational floor and logarithm helpers") {
  CHECK(rational_floor(Rational(7, 2)) == 3);
  CHECK(rational_floor(Rational(-7, 2)) == -4);
  CHECK(rational_floor(Rational(4)) == 4);
  CHECK(floor_log2(1) == 0);
  CHECK(floor_log2(2) == 1);
  CHECK(floor_log2(1023) == 9);
  CHECK(floor_log2(1024) == 10);
  CHECK_THROWS_AS(floor_log2(0), InputError);
}

TEST_CASE("orientation and squared distance are exact") {
  RatPoint a{0, 0}, b{1, 0}, c{0, 1};
  CHECK(orientation(a, b, c) == 1);
  CHECK(orientation(a, c, b) == -1);
  CHECK(orientation(a, b, RatPoint{2, 0}) == 0);
  CHECK(sqdist(a, RatPoint{Rational(3, 5), Rational(4, 5)}) == Rational(1));
  CHECK(sqdist(RatPoint{Rational(1, 3), 0}, RatPoint{Rational(2, 3), 0}) == Rational(1, 9));
}

TEST_CASE("quadratic expressions decide signs exactly") {
  // 1 - sqrt(2) < 0 even though both terms are within 1 of zero.
  CHECK(QuadExpr{1, -1, 2}.sign() == -1);
  CHECK(QuadExpr{1, 1, 2}.sign() == 1);
  CHECK(QuadExpr{0, 0, 7}.sign() == 0);
  // 3 - 2*sqrt(2) > 0: squares are 9 versus 8.
  CHECK(QuadExpr{3, -2, 2}.sign() == 1);
  // 2 - 2*sqrt(1) == 0 exactly.
  CHECK(QuadExpr{2, -2, 1}.sign() == 0);
}

TEST_CASE("unit circles through rational centers intersect exactly") {
  // Centers distance 1 apart: intersections at x = 1/2, y^2 = 3/4.
  std::vector<QPoint> pts = unit_circle_intersections(RatPoint{0, 0}, RatPoint{1, 0});
  REQUIRE(pts.size() == 2);
  for (const QPoint& p : pts) {
    CHECK(compare_sqdist(p, RatPoint{0, 0}, 1) == 0);
    CHECK(compare_sqdist(p, RatPoint{1, 0}, 1) == 0);
  }

  // Tangency: a single intersection at the midpoint.
  std::vector<QPoint> tangent = unit_circle_intersections(RatPoint{0, 0}, RatPoint{2, 0});
  REQUIRE(tangent.size() == 1);
  CHECK(tangent[0].x_approx() == doctest::Approx(1.0));
  CHECK(compare_sqdist(tangent[0], RatPoint{0, 0}, 1) == 0);

  // Too far apart, or coincident: no usable intersection points.
  CHECK(unit_circle_intersections(RatPoint{0, 0}, RatPoint{3, 0}).empty());
  CHECK(unit_circle_intersections(RatPoint{0, 0}, RatPoint{0, 0}).empty());
}

TEST_CASE("membership predicates on intersection points are exact") {
  std::vector<QPoint> pts =
      unit_circle_intersections(RatPoint{0, 0}, RatPoint{Rational(1, 4), Rational(1, 4)});
  REQUIRE(pts.size() == 2);
  for (const QPoint& p : pts) {
    // Strictly inside a slightly larger circle, strictly outside a smaller one.
    CHECK(compare_sqdist(p, RatPoint{0, 0}, Rational(101, 100)) == -1);
    CHECK(compare_sqdist(p, RatPoint{0, 0}, Rational(99, 100)) == 1);
  }
}

TEST_CASE("radial displacement stays in the same field") {
  QPoint p = QPoint::from_rational(RatPoint{Rational(3, 5), Rational(4, 5)});
  // Push away from the origin: lands strictly outside the unit circle.
  QPoint out = p.displaced(RatPoint{0, 0}, Rational(1, 1000));
  CHECK(compare_sqdist(out, RatPoint{0, 0}, 1) == 1);
  // Pull toward the origin: strictly inside.
  QPoint in = p.displaced(RatPoint{0, 0}, Rational(-1, 1000));
  CHECK(compare_sqdist(in, RatPoint{0, 0}, 1) == -1);
}

TEST_CASE("directional cross products classify intersection points") {
  std::vector<QPoint> pts = unit_circle_intersections(RatPoint{0, 0}, RatPoint{1, 0});
  REQUIRE(pts.size() == 2);
  // Both intersection points sit on the vertical line x = 1/2, one on each
  // side of the horizontal axis through the origin.
  int above = 0, below = 0;
  for (const QPoint& p : pts) {
    int s = cross_sign_dir(RatPoint{0, 0}, RatPoint{1, 0}, p);
    if (s > 0) ++above;
    if (s < 0) ++below;
  }
  CHECK(above == 1);
  CHECK(below == 1);
}

TEST_CASE("exact point equality") {
  CHECK(RatPoint{Rational(1, 2), 0} == RatPoint{Rational(2, 4), 0});
  CHECK(RatPoint{1, 0} != RatPoint{0, 1});
}
