#pragma once

#include <vector>

#include "hitsets/rational.hpp"

namespace hitsets {

struct RatPoint {
  Rational x;
  Rational y;
};

bool operator==(const RatPoint& a, const RatPoint& b);
bool operator!=(const RatPoint& a, const RatPoint& b);

/// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
/// 0 collinear.
int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c);

Rational sqdist(const RatPoint& a, const RatPoint& b);

/// Number of the form a + b*sqrt(k) with rational a, b and rational k >= 0.
/// Signs are decided exactly: when a and b disagree in sign the comparison
/// reduces to a^2 versus b^2*k.
struct QuadExpr {
  Rational a;
  Rational b;
  Rational k;
  int sign() const;
};

/// Planar point whose coordinates live in Q(sqrt(k)) for one shared k >= 0:
/// x = ax + bx*sqrt(k), y = ay + by*sqrt(k). Circle-circle intersection
/// points have this form, which keeps every predicate on them exact.
struct QPoint {
  Rational ax, bx;
  Rational ay, by;
  Rational k;

  static QPoint from_rational(const RatPoint& p);
  double x_approx() const;
  double y_approx() const;
  /// p + t*(p - c) for rational t: radial displacement away from c (t > 0)
  /// or toward it (t < 0). Stays in the same field.
  QPoint displaced(const RatPoint& c, const Rational& t) const;
};

/// Sign of |p - c|^2 - rr.
int compare_sqdist(const QPoint& p, const RatPoint& c, const Rational& rr);

/// Sign of cross(u, p - apex) for a rational direction u.
int cross_sign_dir(const RatPoint& apex, const RatPoint& u, const QPoint& p);

/// Intersection points of the two unit circles centered at c1 and c2.
/// Empty when the centers coincide or lie more than 2 apart; a single
/// tangency point when they are exactly 2 apart.
std::vector<QPoint> unit_circle_intersections(const RatPoint& c1, const RatPoint& c2);

}  // namespace hitsets
