#include "latcurve/detail/raster.hpp"

#include <stdexcept>

namespace latcurve::detail {

void TRange::constrain(i128 a, i128 c, bool strict) {
  if (infeasible_) return;
  if (a == 0) {
    if (strict ? !(c > 0) : !(c >= 0)) infeasible_ = true;
    return;
  }
  if (a > 0) {
    // t >= -c/a  (strict: t > -c/a)
    const i128 bound = strict ? floor_div(-c, a) + 1 : ceil_div(-c, a);
    if (!lo_ || bound > *lo_) lo_ = bound;
  } else {
    // t <= c/(-a)  (strict: t < c/(-a))
    const i128 bound = strict ? ceil_div(c, -a) - 1 : floor_div(c, -a);
    if (!hi_ || bound < *hi_) hi_ = bound;
  }
  if (lo_ && hi_ && *lo_ > *hi_) infeasible_ = true;
}

void TRange::intersect(IntRange r) {
  if (infeasible_) return;
  if (r.empty()) {
    infeasible_ = true;
    return;
  }
  if (!lo_ || r.lo > *lo_) lo_ = r.lo;
  if (!hi_ || r.hi < *hi_) hi_ = r.hi;
  if (*lo_ > *hi_) infeasible_ = true;
}

IntRange TRange::range() const {
  if (infeasible_) return {};
  if (!bounded()) throw std::logic_error("unbounded lattice range");
  return {*lo_, *hi_};
}

IntRange row_range(std::span<const HalfPlane> planes, i128 y) {
  TRange r;
  for (const HalfPlane& h : planes) {
    r.constrain(h.a, h.b * y + h.c, h.strict);
    if (r.infeasible()) return {};
  }
  return r.range();
}

IntRange y_extent(std::span<const RatPoint> vertices) {
  if (vertices.empty()) return {};
  Rational lo = vertices.front().y;
  Rational hi = lo;
  for (const RatPoint& p : vertices) {
    if (p.y < lo) lo = p.y;
    if (p.y > hi) hi = p.y;
  }
  return {to_i128(floor(lo)), to_i128(ceil(hi))};
}

HalfPlane make_half_plane(const Rational& a, const Rational& b, const Rational& c, bool strict) {
  Integer den = 1;
  for (const Rational* v : {&a, &b, &c}) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v->get_den_mpz_t());
  return {to_i128(Integer(a * den)), to_i128(Integer(b * den)), to_i128(Integer(c * den)), strict};
}

HalfPlane left_of(const RatPoint& u, const RatPoint& v, bool strict) {
  const RatVec d = v - u;
  return make_half_plane(-d.y, d.x, d.y * u.x - d.x * u.y, strict);
}

}  // namespace latcurve::detail
