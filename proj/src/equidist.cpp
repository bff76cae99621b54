#include "latcurve/equidist.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "latcurve/detail/raster.hpp"
#include "latcurve/error.hpp"
#include "latcurve/girth_enum.hpp"
#include "latcurve/parallel.hpp"

namespace latcurve {

namespace {

using detail::HalfPlane;

/// Direction w lies in the half-open sector [u, v) of angle below pi.
bool in_half_open_sector(const RatVec& u, const RatVec& v, const RatVec& w) {
  const int cu = sgn(cross(u, w));
  if (cu == 0) return sgn(u.x * w.x + u.y * w.y) > 0;
  return cu > 0 && sgn(cross(w, v)) > 0;
}

struct ScaledTriangle {
  std::array<HalfPlane, 3> planes;
  detail::IntRange rows;
};

ScaledTriangle scale_triangle(const OriginTriangle& t, const Rational& n) {
  const RatPoint& u = t.u;
  const RatPoint& v = t.v;
  ScaledTriangle out;
  out.planes[0] = detail::make_half_plane(-u.y, u.x, Rational(0), !t.include_start_ray);
  out.planes[1] = detail::make_half_plane(v.y, -v.x, Rational(0), true);
  out.planes[2] = detail::make_half_plane(u.y - v.y, v.x - u.x, n * cross(u, v), false);
  const RatPoint corners[] = {RatPoint(), n * u, n * v};
  out.rows = detail::y_extent(corners);
  return out;
}

std::vector<ScaledTriangle> scale_domain(const StarDomain& omega, const Rational& n) {
  std::vector<ScaledTriangle> out;
  for (const OriginTriangle& t : omega.triangles()) out.push_back(scale_triangle(t, n));
  return out;
}

/// a s + b t = g = gcd(a, b) >= 0.
struct Bezout {
  i128 g, s, t;
};

Bezout ext_gcd(i128 a, i128 b) {
  i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const i128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Integer solutions y of x x y = m form y0 + tau * d; nullopt when none.
struct SolutionLine {
  i128 y0x, y0y, dx, dy;
};

std::optional<SolutionLine> solutions(i128 a, i128 b, i128 m) {
  const Bezout e = ext_gcd(a, b);
  if (e.g == 0 || m % e.g != 0) return std::nullopt;
  const i128 k = m / e.g;
  // a*(s k) - b*(-t k) = k (a s + b t) = m.
  return SolutionLine{-e.t * k, e.s * k, a / e.g, b / e.g};
}

i128 count_on_line(const SolutionLine& line, const std::vector<ScaledTriangle>& domain) {
  i128 total = 0;
  for (const ScaledTriangle& tri : domain) {
    detail::TRange r;
    for (const HalfPlane& h : tri.planes) {
      r.constrain(h.a * line.dx + h.b * line.dy, h.a * line.y0x + h.b * line.y0y + h.c, h.strict);
      if (r.infeasible()) break;
    }
    if (!r.infeasible()) total += r.range().size();
  }
  return total;
}

struct RowTask {
  std::size_t triangle;
  i128 y;
};

std::vector<RowTask> row_tasks(const std::vector<ScaledTriangle>& domain) {
  std::vector<RowTask> tasks;
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (i128 y = domain[i].rows.lo; y <= domain[i].rows.hi; ++y) tasks.push_back({i, y});
  return tasks;
}

double to_double_angle(const RatVec& v) { return std::atan2(to_double(v.y), to_double(v.x)); }

}  // namespace

StarDomain::StarDomain(std::vector<OriginTriangle> triangles) : triangles_(std::move(triangles)) {
  for (const OriginTriangle& t : triangles_) {
    if (sgn(cross(t.u, t.v)) <= 0) {
      throw Error(ErrorKind::Configuration, "domain triangles must be counterclockwise with positive area");
    }
  }
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    for (std::size_t j = i + 1; j < triangles_.size(); ++j) {
      const auto& a = triangles_[i];
      const auto& b = triangles_[j];
      if (in_half_open_sector(a.u, a.v, b.u) || in_half_open_sector(b.u, b.v, a.u)) {
        throw Error(ErrorKind::Configuration, "domain sectors overlap");
      }
    }
  }
}

StarDomain StarDomain::sector(const Rational& a) {
  if (sgn(a) <= 0) throw Error(ErrorKind::Configuration, "sector size must be positive");
  return StarDomain({{RatPoint(a, Rational(0)), RatPoint(a, a), false}});
}

StarDomain StarDomain::fan(const std::vector<RatPoint>& vertices) {
  if (vertices.size() < 2) throw Error(ErrorKind::Configuration, "fan needs at least two vertices");
  std::vector<OriginTriangle> tris;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) tris.push_back({vertices[i], vertices[i + 1], i > 0});
  return StarDomain(std::move(tris));
}

StarDomain StarDomain::parse(std::string_view spec) {
  auto fail = [&] { return Error(ErrorKind::Configuration, "bad domain spec: " + std::string(spec)); };
  if (spec.starts_with("tri:")) return sector(parse_rational(spec.substr(4)));
  if (!spec.starts_with("poly:")) throw fail();
  std::vector<RatPoint> vertices;
  std::string_view rest = spec.substr(5);
  while (!rest.empty()) {
    const std::size_t semi = rest.find(';');
    const std::string_view item = rest.substr(0, semi);
    const std::size_t comma = item.find(',');
    if (comma == std::string_view::npos) throw fail();
    vertices.emplace_back(parse_rational(item.substr(0, comma)), parse_rational(item.substr(comma + 1)));
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  return fan(vertices);
}

StarDomain StarDomain::transformed(const Mat2& m) const {
  if (m.det() != 1) throw Error(ErrorKind::Configuration, "domain maps must have determinant 1");
  std::vector<OriginTriangle> out;
  for (const OriginTriangle& t : triangles_) out.push_back({m.apply(t.u), m.apply(t.v), t.include_start_ray});
  return StarDomain(std::move(out));
}

StarDomain StarDomain::scaled(const Rational& factor) const {
  if (sgn(factor) <= 0) throw Error(ErrorKind::Configuration, "scale factor must be positive");
  std::vector<OriginTriangle> out;
  for (const OriginTriangle& t : triangles_) out.push_back({factor * t.u, factor * t.v, t.include_start_ray});
  return StarDomain(std::move(out));
}

bool StarDomain::contains(const RatPoint& p, const Rational& n) const {
  for (const OriginTriangle& t : triangles_) {
    const int start = sgn(cross(t.u, p));
    if (start < 0 || (start == 0 && !t.include_start_ray)) continue;
    if (sgn(cross(p, t.v)) <= 0) continue;
    if (cross(p, t.v) + cross(t.u, p) <= n * cross(t.u, t.v)) return true;
  }
  return false;
}

Rational StarDomain::doubled_area() const {
  Rational total = 0;
  for (const OriginTriangle& t : triangles_) total += cross(t.u, t.v);
  return total;
}

Rational StarDomain::radius() const {
  Rational r = 0;
  for (const OriginTriangle& t : triangles_)
    for (const Rational* c : {&t.u.x, &t.u.y, &t.v.x, &t.v.y}) r = std::max(r, Rational(abs(*c)));
  return r;
}

std::int64_t sigma(std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::Configuration, "sigma needs m >= 1");
  std::int64_t total = 0;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    total += d;
    if (d != m / d) total += m / d;
  }
  return total;
}

double chord_profile(const StarDomain& omega, double phi) {
  const double wx = std::cos(phi), wy = std::sin(phi);
  double total = 0;
  for (const double sign : {1.0, -1.0}) {
    const double x = sign * wx, y = sign * wy;
    for (const OriginTriangle& t : omega.triangles()) {
      const double ux = to_double(t.u.x), uy = to_double(t.u.y);
      const double vx = to_double(t.v.x), vy = to_double(t.v.y);
      if (ux * y - uy * x < 0 || x * vy - y * vx <= 0) continue;
      if (ux * y - uy * x == 0 && ux * x + uy * y <= 0) continue;
      const double uv = to_double(cross(t.u, t.v));
      total += uv / (x * (vy - uy) - y * (vx - ux));
    }
  }
  return total;
}

double profile_integral(const StarDomain& omega1, const StarDomain& omega2, double tol) {
  std::vector<double> breaks = {0.0, std::numbers::pi};
  for (const StarDomain* omega : {&omega1, &omega2}) {
    for (const OriginTriangle& t : omega->triangles()) {
      for (const RatVec* v : {&t.u, &t.v}) {
        double a = to_double_angle(*v);
        while (a < 0) a += std::numbers::pi;
        while (a >= std::numbers::pi) a -= std::numbers::pi;
        breaks.push_back(a);
      }
    }
  }
  std::sort(breaks.begin(), breaks.end());
  auto integrand = [&](double phi) { return chord_profile(omega1, phi) * chord_profile(omega2, phi); };
  double total = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (b - a < 1e-14) continue;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, a, b, 15, tol);
  }
  return total;
}

std::vector<LatticeVec> lattice_points(const StarDomain& omega, std::int64_t n) {
  std::vector<LatticeVec> out;
  for (const ScaledTriangle& tri : scale_domain(omega, Rational(n))) {
    detail::for_each_lattice_point(tri.planes, tri.rows, [&](i128 x, i128 y) {
      out.push_back({static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)});
    });
  }
  return out;
}

std::int64_t count_pairs_bruteforce(const StarDomain& omega1, const StarDomain& omega2, std::int64_t m,
                                    std::int64_t n) {
  const auto p1 = lattice_points(omega1, n);
  const auto p2 = lattice_points(omega2, n);
  std::int64_t count = 0;
  for (LatticeVec a : p1)
    for (LatticeVec b : p2)
      if (cross_i128(a, b) == m) ++count;
  return count;
}

std::int64_t count_pairs_fast(const StarDomain& omega1, const StarDomain& omega2, std::int64_t m, std::int64_t n) {
  if (m == 0) throw Error(ErrorKind::Configuration, "pseudoscalar product must be nonzero");
  if (n <= 0) throw Error(ErrorKind::Configuration, "scale must be positive");
  const auto d1 = scale_domain(omega1, Rational(n));
  const auto d2 = scale_domain(omega2, Rational(n));
  const auto tasks = row_tasks(d1);
  const auto partial = parallel_map<i128>(tasks.size(), [&](std::size_t i) {
    const RowTask& task = tasks[i];
    const detail::IntRange xs = detail::row_range(d1[task.triangle].planes, task.y);
    i128 sum = 0;
    for (i128 x = xs.lo; x <= xs.hi; ++x) {
      if (const auto line = solutions(x, task.y, m)) sum += count_on_line(*line, d2);
    }
    return sum;
  });
  i128 total = 0;
  for (i128 v : partial) total += v;
  return static_cast<std::int64_t>(total);
}

double pair_prediction(const StarDomain& omega1, const StarDomain& omega2, std::int64_t m, std::int64_t n) {
  if (m == 0) throw Error(ErrorKind::Configuration, "pseudoscalar product must be nonzero");
  const std::int64_t am = m < 0 ? -m : m;
  const double nn = static_cast<double>(n);
  return static_cast<double>(sigma(am)) / static_cast<double>(am) * 6.0 / (std::numbers::pi * std::numbers::pi) *
         profile_integral(omega1, omega2) * nn * nn;
}

double special_point_constant(std::int64_t m) {
  if (m == 0) throw Error(ErrorKind::Configuration, "pseudoscalar product must be nonzero");
  const std::int64_t am = m < 0 ? -m : m;
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  return static_cast<double>(sigma(am)) / static_cast<double>(am) / (2.0 * zeta2);
}

PairCount special_point_count(const Frame& f, std::int64_t m, std::int64_t big_n, const StarDomain& omega) {
  if (m == 0 || big_n <= 0) throw Error(ErrorKind::Configuration, "need m != 0 and N > 0");
  PairCount out{m, big_n, 0, 0.0};
  out.prediction = special_point_constant(m) * to_double(f.doubled_area()) * static_cast<double>(big_n) *
                   static_cast<double>(big_n) * to_double(omega.doubled_area());
  if (omega.empty()) return out;

  const GirthForm& g = f.form();
  const i128 den = g.den;
  const auto domain = scale_domain(omega, Rational(big_n));
  const Rational reach = Rational(big_n) * omega.radius();
  const auto xs = vectors_within_girth(f, reach, false);
  const auto partial = parallel_map<i128>(xs.size(), [&](std::size_t i) {
    const LatticeVec x = xs[i];
    const auto line = solutions(x.x, x.y, m);
    if (!line) return i128{0};
    const i128 gx = g.girth_num(x);
    const LatticeVec y0{static_cast<std::int64_t>(line->y0x), static_cast<std::int64_t>(line->y0y)};
    const LatticeVec d{static_cast<std::int64_t>(line->dx), static_cast<std::int64_t>(line->dy)};
    const i128 gy0 = g.girth_num(y0), gd = g.girth_num(d);
    i128 sum = 0;
    for (const ScaledTriangle& tri : domain) {
      detail::TRange r;
      r.constrain(g.t1_num(d), g.t1_num(y0), false);
      r.constrain(g.t2_num(d), g.t2_num(y0), false);
      // (p, q) = ([x], [y]) = (gx, gy0 + tau gd) / den.
      for (const HalfPlane& h : tri.planes) {
        r.constrain(h.b * gd, h.a * gx + h.b * gy0 + h.c * den, h.strict);
      }
      if (!r.infeasible()) sum += r.range().size();
    }
    return sum;
  });
  i128 total = 0;
  for (i128 v : partial) total += v;
  out.count = static_cast<std::int64_t>(total);
  return out;
}

std::int64_t special_point_count_bruteforce(const Frame& f, std::int64_t m, std::int64_t big_n,
                                            const StarDomain& omega) {
  const Rational reach = Rational(big_n) * omega.radius();
  const auto vs = vectors_within_girth(f, reach, false);
  std::int64_t count = 0;
  for (LatticeVec x : vs) {
    for (LatticeVec y : vs) {
      if (cross_i128(x, y) != m) continue;
      if (omega.contains(RatPoint(f.girth(x), f.girth(y)), Rational(big_n))) ++count;
    }
  }
  return count;
}

std::int64_t triangle_census(const Frame& f, std::int64_t n, std::int64_t m, const Rational& big_m,
                             const Rational& t1, const Rational& t2) {
  if (m < 1) throw Error(ErrorKind::Configuration, "census needs m >= 1");
  if (n < 1 || sgn(big_m) <= 0) throw Error(ErrorKind::Configuration, "census needs n >= 1 and M > 0");
  if (!(sgn(t1) > 0 && t1 < t2)) throw Error(ErrorKind::Configuration, "census needs 0 < t1 < t2");
  const GirthForm& g = f.form();
  const Rational& s = f.doubled_area();
  // ([u] + [w])^3 <= M^3 n / S bounds every girth by a cube root.
  const Rational cube_bound = big_m * big_m * big_m * Rational(n) / s;
  const Integer reach = ceil_cbrt(cube_bound);
  const Rational lo_r = 2 * Rational(n) * t1 / s;
  const Rational hi_r = 2 * Rational(n) * t2 / s;
  const Integer den(g.den);
  const Integer den3 = den * den * den;

  const auto us = vectors_within_girth(f, Rational(reach), false);
  const i128 reach_num = to_i128(reach) * g.den;
  const auto partial = parallel_map<std::int64_t>(us.size(), [&](std::size_t i) {
    const LatticeVec u = us[i];
    const i128 gu = g.girth_num(u);
    std::int64_t count = 0;
    for (std::int64_t j = 1; j <= m; ++j) {
      const auto line = solutions(u.x, u.y, j);
      if (!line) continue;
      const LatticeVec w0{static_cast<std::int64_t>(line->y0x), static_cast<std::int64_t>(line->y0y)};
      const LatticeVec d{static_cast<std::int64_t>(line->dx), static_cast<std::int64_t>(line->dy)};
      detail::TRange r;
      r.constrain(g.t1_num(d), g.t1_num(w0), false);
      r.constrain(g.t2_num(d), g.t2_num(w0), false);
      r.constrain(-g.girth_num(d), reach_num - gu - g.girth_num(w0), false);
      if (r.infeasible()) continue;
      const detail::IntRange taus = r.range();
      for (i128 tau = taus.lo; tau <= taus.hi; ++tau) {
        const LatticeVec w{static_cast<std::int64_t>(w0.x + tau * d.x), static_cast<std::int64_t>(w0.y + tau * d.y)};
        if (w == LatticeVec{}) continue;
        const Integer gsum = from_i128(gu + g.girth_num(w));
        if (make_rational(gsum * gsum * gsum, den3) > cube_bound) continue;
        const Rational radius = make_rational(from_i128(gu) * from_i128(g.girth_num(w)) * gsum, 2 * j * den3);
        if (lo_r < radius && radius < hi_r) ++count;
      }
    }
    return count;
  });
  std::int64_t total = 0;
  for (std::int64_t v : partial) total += v;
  return total;
}

}  // namespace latcurve
