#include "latcurve/girth_enum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "latcurve/detail/raster.hpp"
#include "latcurve/error.hpp"

namespace latcurve {

namespace {

using detail::HalfPlane;

/// t1 >= 0, t2 >= 0, girth <= r (girth < r when strict).
std::vector<HalfPlane> girth_triangle(const GirthForm& g, const Rational& r, bool strict) {
  const i128 p = to_i128(r.get_num());
  const i128 q = to_i128(r.get_den());
  return {
      {g.t1x, g.t1y, 0, false},
      {g.t2x, g.t2y, 0, false},
      {-q * (g.t1x + g.t2x), -q * (g.t1y + g.t2y), static_cast<i128>(g.den) * p, strict},
  };
}

detail::IntRange girth_triangle_rows(const Frame& f, const Rational& r) {
  const RatPoint corners[] = {RatPoint(), r * f.ac(), r * f.cb()};
  return detail::y_extent(corners);
}

bool selected(const GirthForm& g, LatticeVec v, VectorSelection selection) {
  if (v.x == 0 && v.y == 0) return false;
  if (selection == VectorSelection::All) return true;
  if (!(g.t1_num(v) > 0 && g.t2_num(v) > 0)) return false;
  return std::gcd(v.x, v.y) == 1;
}

Rational initial_radius(const Frame& f, std::size_t k, VectorSelection selection) {
  // The sublevel set {[z] <= r} has area S r^2 / 2; primitive vectors have
  // density 6/pi^2.
  const double density = selection == VectorSelection::All ? 1.0 : 0.55;
  const double s = to_double(f.doubled_area());
  const double r = std::sqrt(2.0 * static_cast<double>(k) / (s * density)) * 1.05 + 1.0;
  return make_rational(static_cast<long>(std::ceil(r * 16.0)), 16);
}

}  // namespace

bool girth_less(const GirthForm& form, LatticeVec u, LatticeVec v) {
  const i128 gu = form.girth_num(u);
  const i128 gv = form.girth_num(v);
  if (gu != gv) return gu < gv;
  return cross_i128(u, v) > 0;
}

std::vector<LatticeVec> vectors_within_girth(const Frame& f, const Rational& r, bool strict,
                                             VectorSelection selection) {
  if (sgn(r) <= 0) return {};
  const GirthForm& g = f.form();
  const auto planes = girth_triangle(g, r, strict);
  std::vector<LatticeVec> out;
  detail::for_each_lattice_point(planes, girth_triangle_rows(f, r), [&](i128 x, i128 y) {
    const LatticeVec v{static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)};
    if (selected(g, v, selection)) out.push_back(v);
  });
  return out;
}

std::vector<LatticeVec> enumerate_by_girth(const Frame& f, std::size_t k, VectorSelection selection) {
  if (k == 0) return {};
  const GirthForm& g = f.form();
  Rational r = initial_radius(f, k, selection);
  for (int attempt = 0; attempt < 64; ++attempt, r *= 2) {
    std::vector<LatticeVec> pts = vectors_within_girth(f, r, false, selection);
    if (pts.size() < k) continue;
    auto less = [&](LatticeVec u, LatticeVec v) { return girth_less(g, u, v); };
    std::partial_sort(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k), pts.end(), less);
    pts.resize(k);
    return pts;
  }
  throw Error(ErrorKind::SearchExhausted, "girth enumeration did not reach the requested count");
}

Integer count_girth_below(const Frame& f, const Rational& r) {
  if (sgn(r) <= 0) throw Error(ErrorKind::Configuration, "girth threshold must be positive");
  const auto planes = girth_triangle(f.form(), r, true);
  const detail::IntRange rows = girth_triangle_rows(f, r);
  i128 total = 0;
  for (i128 y = rows.lo; y <= rows.hi; ++y) total += detail::row_range(planes, y).size();
  return from_i128(total - 1);  // the origin
}

std::vector<Rational> girth_prefix_sums(const Frame& f, std::size_t k) {
  const GirthForm& g = f.form();
  const std::vector<LatticeVec> vs = enumerate_by_girth(f, k);
  std::vector<Rational> out;
  out.reserve(vs.size());
  Integer running = 0;
  for (LatticeVec v : vs) {
    running += from_i128(g.girth_num(v));
    out.push_back(make_rational(running, g.den));
  }
  return out;
}

Rational girth_sum(const Frame& f, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::Configuration, "girth_sum needs k >= 1");
  return girth_prefix_sums(f, k).back();
}

double girth_sum_leading_term(const Frame& f, std::size_t k) {
  const double s = to_double(f.doubled_area());
  return 2.0 * std::sqrt(2.0) / 3.0 / std::sqrt(s) * std::pow(static_cast<double>(k), 1.5);
}

}  // namespace latcurve
