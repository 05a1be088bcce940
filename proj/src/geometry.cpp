#include "hitsets/geometry.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "hitsets/errors.hpp"

namespace hitsets {

// ---- rational helpers ----

long long rational_floor(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (q * den != num && num < 0) q -= 1;
  if (q > BigInt(std::numeric_limits<long long>::max()) ||
      q < BigInt(std::numeric_limits<long long>::min()))
    throw InputError("rational_floor: value out of machine range");
  return q.convert_to<long long>();
}

namespace {

BigInt parse_integer(const std::string& text, const std::string& original) {
  if (text.empty() || (text.size() == 1 && (text[0] == '+' || text[0] == '-')))
    throw InputError("invalid rational: '" + original + "'");
  size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  for (size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InputError("invalid rational: '" + original + "'");
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw InputError("invalid rational: empty string");

  size_t slash = t.find('/');
  if (slash != std::string::npos) {
    if (t.find('/', slash + 1) != std::string::npos || t.find('.') != std::string::npos)
      throw InputError("invalid rational: '" + text + "'");
    BigInt num = parse_integer(t.substr(0, slash), text);
    BigInt den = parse_integer(t.substr(slash + 1), text);
    if (den == 0) throw InputError("invalid rational: zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  size_t dot = t.find('.');
  if (dot != std::string::npos) {
    std::string head = t.substr(0, dot);
    std::string tail = t.substr(dot + 1);
    if (tail.empty() || t.find('.', dot + 1) != std::string::npos)
      throw InputError("invalid rational: '" + text + "'");
    bool negative = !head.empty() && head[0] == '-';
    if (head.empty() || head == "+" || head == "-") head += "0";
    BigInt whole = parse_integer(head, text);
    for (char ch : tail)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw InputError("invalid rational: '" + text + "'");
    BigInt frac(tail);
    BigInt scale = 1;
    for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    BigInt num = whole * scale + (negative ? -frac : frac);
    return Rational(num, scale);
  }
  return Rational(parse_integer(t, text), BigInt(1));
}

std::string format_rational(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

// ---- exact planar primitives ----

bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
bool operator!=(const RatPoint& a, const RatPoint& b) { return !(a == b); }

int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross.sign();
}

Rational sqdist(const RatPoint& a, const RatPoint& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

int QuadExpr::sign() const {
  if (k.sign() < 0) throw InputError("QuadExpr: negative radicand");
  int sa = a.sign();
  int sb = (k.sign() == 0) ? 0 : b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Signs disagree: |a| versus |b|*sqrt(k) decides, via squares.
  Rational lhs = a * a;
  Rational rhs = b * b * k;
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sa : sb;
}

QPoint QPoint::from_rational(const RatPoint& p) {
  return QPoint{p.x, Rational(0), p.y, Rational(0), Rational(0)};
}

double QPoint::x_approx() const { return to_double(ax) + to_double(bx) * std::sqrt(to_double(k)); }
double QPoint::y_approx() const { return to_double(ay) + to_double(by) * std::sqrt(to_double(k)); }

QPoint QPoint::displaced(const RatPoint& c, const Rational& t) const {
  Rational one_plus = 1 + t;
  return QPoint{one_plus * ax - t * c.x, one_plus * bx,
                one_plus * ay - t * c.y, one_plus * by, k};
}

int compare_sqdist(const QPoint& p, const RatPoint& c, const Rational& rr) {
  // (u + v*sqrt(k))^2 = u^2 + v^2*k + 2uv*sqrt(k), summed over coordinates.
  Rational ux = p.ax - c.x;
  Rational uy = p.ay - c.y;
  Rational rat = ux * ux + uy * uy + (p.bx * p.bx + p.by * p.by) * p.k - rr;
  Rational irr = 2 * (ux * p.bx + uy * p.by);
  return QuadExpr{rat, irr, p.k}.sign();
}

int cross_sign_dir(const RatPoint& apex, const RatPoint& u, const QPoint& p) {
  Rational vax = p.ax - apex.x;
  Rational vay = p.ay - apex.y;
  Rational rat = u.x * vay - u.y * vax;
  Rational irr = u.x * p.by - u.y * p.bx;
  return QuadExpr{rat, irr, p.k}.sign();
}

std::vector<QPoint> unit_circle_intersections(const RatPoint& c1, const RatPoint& c2) {
  Rational dd = sqdist(c1, c2);
  if (dd == 0 || dd > 4) return {};
  // Points: midpoint +- sqrt(1/dd - 1/4) * (-(dy), dx).
  Rational mx = (c1.x + c2.x) / 2;
  Rational my = (c1.y + c2.y) / 2;
  Rational dx = c2.x - c1.x;
  Rational dy = c2.y - c1.y;
  Rational k = Rational(1) / dd - Rational(1, 4);
  if (k == 0) return {QPoint{mx, Rational(0), my, Rational(0), Rational(0)}};
  return {QPoint{mx, -dy, my, dx, k}, QPoint{mx, dy, my, -dx, k}};
}

}  // namespace hitsets
