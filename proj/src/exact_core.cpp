#include "latcurve/exact_core.hpp"

#include <algorithm>

#include "latcurve/error.hpp"

namespace latcurve {

Integer cross(LatticeVec u, LatticeVec v) { return from_i128(cross_i128(u, v)); }

i128 cross_i128(LatticeVec u, LatticeVec v) {
  return static_cast<i128>(u.x) * v.y - static_cast<i128>(u.y) * v.x;
}

Rational cross(const RatVec& u, const RatVec& v) { return u.x * v.y - u.y * v.x; }

Rational doubled_area(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
  return cross(q - p, r - p);
}

namespace {

Integer lcm_den(std::initializer_list<const Rational*> values) {
  Integer out = 1;
  for (const Rational* v : values) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v->get_den_mpz_t());
  return out;
}

}  // namespace

Frame::Frame(RatPoint a, RatPoint b, RatPoint c, Rational s, bool swapped)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), s_(std::move(s)), swapped_(swapped) {
  const RatVec ac = c_ - a_;
  const RatVec cb = b_ - c_;
  // t1 = v x CB / S, t2 = AC x v / S.
  const Rational t1x = cb.y / s_;
  const Rational t1y = -cb.x / s_;
  const Rational t2x = -ac.y / s_;
  const Rational t2y = ac.x / s_;
  const Integer den = lcm_den({&t1x, &t1y, &t2x, &t2y});
  try {
    form_.t1x = to_int64(Integer(t1x * den));
    form_.t1y = to_int64(Integer(t1y * den));
    form_.t2x = to_int64(Integer(t2x * den));
    form_.t2y = to_int64(Integer(t2y * den));
    form_.den = to_int64(den);
    // Keep headroom for products with coordinates and thresholds.
    const std::int64_t limit = std::int64_t{1} << 40;
    form_ok_ = std::max({std::abs(form_.t1x), std::abs(form_.t1y), std::abs(form_.t2x),
                         std::abs(form_.t2y), form_.den}) < limit;
  } catch (const Error&) {
    form_ok_ = false;
  }
}

Frame Frame::make(RatPoint a, RatPoint b, RatPoint c) {
  Rational s = cross(c - a, b - c);
  if (s == 0) throw Error(ErrorKind::DegenerateTriangle, "frame vertices are collinear");
  if (s > 0) return Frame(std::move(a), std::move(b), std::move(c), std::move(s), false);
  return Frame(std::move(b), std::move(a), std::move(c), Rational(-s), true);
}

Rational Frame::girth(const RatVec& v) const {
  return (cross(v, cb()) + cross(ac(), v)) / s_;
}

Rational Frame::girth(LatticeVec v) const { return girth(RatVec(v)); }

std::pair<Rational, Rational> Frame::angle_coords(const RatVec& v) const {
  return {cross(v, cb()) / s_, cross(ac(), v) / s_};
}

bool Frame::in_angle(const RatVec& v) const {
  return sgn(cross(v, cb())) >= 0 && sgn(cross(ac(), v)) >= 0;
}

bool Frame::in_angle(LatticeVec v) const {
  if (form_ok_) return form_.t1_num(v) >= 0 && form_.t2_num(v) >= 0;
  return in_angle(RatVec(v));
}

bool Frame::in_angle_interior(LatticeVec v) const {
  if (form_ok_) return form_.t1_num(v) > 0 && form_.t2_num(v) > 0;
  const RatVec w(v);
  return sgn(cross(w, cb())) > 0 && sgn(cross(ac(), w)) > 0;
}

bool Frame::strictly_inside(const RatPoint& p) const {
  const auto [t1, t2] = angle_coords(p - a_);
  return sgn(t2) > 0 && t2 < t1 && t1 < 1;
}

const GirthForm& Frame::form() const {
  if (!form_ok_) throw Error(ErrorKind::Overflow, "frame coefficients exceed the integer fast path");
  return form_;
}

Rational segment_girth(const Frame& f, const RatPoint& p, const RatPoint& q) {
  return abs(f.girth(q - p));
}

Rational abc_radius(const Frame& f, const RatPoint& p, const RatPoint& q, const RatPoint& r) {
  const Rational area = abs(doubled_area(p, q, r));
  if (area == 0) throw Error(ErrorKind::DegenerateTriangle, "ABC-radius of a degenerate triangle");
  return segment_girth(f, p, q) * segment_girth(f, q, r) * segment_girth(f, p, r) / (2 * area);
}

bool on_lattice(const RatPoint& p, std::int64_t n) {
  const Rational x = p.x * n;
  const Rational y = p.y * n;
  return x.get_den() == 1 && y.get_den() == 1;
}

Integer segment_lattice_count(const RatPoint& p, const RatPoint& q, std::int64_t n) {
  if (n <= 0) throw Error(ErrorKind::Configuration, "lattice density must be positive");
  const RatPoint ps = Rational(n) * p;
  const RatPoint qs = Rational(n) * q;
  if (ps == qs) return on_lattice(p, n) ? 1 : 0;

  // Primitive integer direction (u, v) of the line.
  const RatVec d = qs - ps;
  Integer den;
  mpz_lcm(den.get_mpz_t(), d.x.get_den_mpz_t(), d.y.get_den_mpz_t());
  Integer u = Integer(d.x * den);
  Integer v = Integer(d.y * den);
  Integer g;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  u /= g;
  v /= g;

  // Integer points satisfy v*x - u*y = c; gcd(u, v) = 1, so they exist iff c is integral.
  const Rational c = Rational(v) * ps.x - Rational(u) * ps.y;
  if (c.get_den() != 1) return 0;
  const Integer ci = c.get_num();

  Integer s, t, g2;
  mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v.get_mpz_t(), u.get_mpz_t());
  // v*s + u*t = 1  =>  (x0, y0) = (s*c, -t*c).
  const Integer x0 = s * ci;
  const Integer y0 = -t * ci;

  auto param = [&](const RatPoint& pt) {
    return u != 0 ? Rational((pt.x - x0) / u) : Rational((pt.y - y0) / v);
  };
  Rational k0 = param(ps);
  Rational k1 = param(qs);
  if (k0 > k1) std::swap(k0, k1);
  const Integer lo = ceil(k0);
  const Integer hi = floor(k1);
  return hi >= lo ? Integer(hi - lo + 1) : Integer(0);
}

Integer polyline_lattice_count(std::span<const RatPoint> vertices, std::int64_t n) {
  if (vertices.empty()) return 0;
  if (vertices.size() == 1) return on_lattice(vertices.front(), n) ? 1 : 0;
  Integer total = 0;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    total += segment_lattice_count(vertices[i], vertices[i + 1], n);
  }
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i) {
    if (on_lattice(vertices[i], n)) total -= 1;
  }
  return total;
}

}  // namespace latcurve
