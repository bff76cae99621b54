#include "latcurve/affine_length.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "latcurve/error.hpp"
#include "latcurve/parallel.hpp"

namespace latcurve {

namespace {

struct Vec2 {
  double x = 0, y = 0;
};

Vec2 to_vec2(const RatVec& v) { return {to_double(v.x), to_double(v.y)}; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// t with x = u + t (v - u), when x is on the line uv.
std::optional<Rational> line_param(const RatPoint& u, const RatPoint& v, const RatPoint& x) {
  const RatVec d = v - u;
  const RatVec w = x - u;
  if (latcurve::cross(d, w) != 0) return std::nullopt;
  return (d.x * w.x + d.y * w.y) / (d.x * d.x + d.y * d.y);
}

bool strictly_between(const std::optional<Rational>& t) { return t && sgn(*t) > 0 && *t < 1; }

double cbrt_ratio(const Rational& area, const Rational& s) { return std::cbrt(to_double(area / s)); }

/// Doubled-precision data of a chain for the supremum search.
class SupProblem {
 public:
  explicit SupProblem(const BrokenLine& gamma) {
    const Frame& f = gamma.frame;
    const auto& c = gamma.vertices;
    k_ = c.size() - 2;
    edges_.resize(k_ + 2);
    units_.resize(k_ + 2);
    for (std::size_t j = 1; j <= k_ + 1; ++j) {
      const RatVec e = c[j] - c[j - 1];
      const Rational g = f.girth(e);
      if (sgn(g) <= 0) throw Error(ErrorKind::Configuration, "chain edge outside the cone An");
      edges_[j] = to_vec2(e);
      units_[j] = to_vec2(Rational(1) / g * e);
    }
    start_ = to_vec2(f.ac());
    end_ = to_vec2(f.cb());
  }

  std::size_t k() const { return k_; }

  Vec2 support(const std::vector<double>& s, std::size_t i) const {
    if (i == 0) return start_;
    if (i == k_ + 1) return end_;
    const double t = s[i - 1];
    return {(1 - t) * units_[i].x + t * units_[i + 1].x, (1 - t) * units_[i].y + t * units_[i + 1].y};
  }

  /// Cube root of the doubled area cut off over edge j (1..k+1).
  double term(const std::vector<double>& s, std::size_t j) const {
    const Vec2 before = support(s, j - 1);
    const Vec2 after = support(s, j);
    const double area = cross(edges_[j], after) * cross(before, edges_[j]) / cross(before, after);
    return area > 0 ? std::cbrt(area) : 0.0;
  }

  double total(const std::vector<double>& s) const {
    double sum = 0;
    for (std::size_t j = 1; j <= k_ + 1; ++j) sum += term(s, j);
    return sum;
  }

  /// Terms touched by parameter i (1..k).
  double local(const std::vector<double>& s, std::size_t i) const { return term(s, i) + term(s, i + 1); }

 private:
  std::size_t k_ = 0;
  std::vector<Vec2> edges_, units_;
  Vec2 start_, end_;
};

struct AscentResult {
  double value;
  std::vector<double> params;
  int sweeps;
};

AscentResult coordinate_ascent(const SupProblem& problem, std::vector<double> s, const SupOptions& options) {
  constexpr double inv_phi = 0.6180339887498949;
  double value = problem.total(s);
  int sweeps = 0;
  while (sweeps < options.max_sweeps) {
    ++sweeps;
    double gained = 0;
    for (std::size_t i = 1; i <= problem.k(); ++i) {
      const double current = s[i - 1];
      const double before = problem.local(s, i);
      auto at = [&](double t) {
        s[i - 1] = t;
        return problem.local(s, i);
      };
      double a = 0, b = 1;
      double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
      double f1 = at(x1), f2 = at(x2);
      while (b - a > options.tol) {
        if (f1 < f2) {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + inv_phi * (b - a);
          f2 = at(x2);
        } else {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - inv_phi * (b - a);
          f1 = at(x1);
        }
      }
      const double candidate = f1 >= f2 ? x1 : x2;
      const double after = at(candidate);
      if (after > before) {
        gained += after - before;
      } else {
        s[i - 1] = current;
      }
    }
    value = problem.total(s);
    if (gained < options.tol) break;
  }
  return {value, std::move(s), sweeps};
}

}  // namespace

RelativeAffineLength affine_length_rel(const BrokenLine& gamma, const BrokenLine& gamma1) {
  const auto& c = gamma.vertices;
  const auto& d = gamma1.vertices;
  if (c.size() < 2 || d.size() != c.size() + 1 || !(d.front() == c.front()) || !(d.back() == c.back())) {
    throw Error(ErrorKind::CircumscriptionViolation, "circumscribed line must be A D_1 ... D_{k+1} B");
  }
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    const auto t = line_param(d[i], d[i + 1], c[i]);
    if (!t || sgn(*t) < 0 || *t > 1) {
      throw Error(ErrorKind::CircumscriptionViolation,
                  "vertex " + std::to_string(i) + " is not on segment D_" + std::to_string(i) + " D_" +
                      std::to_string(i + 1));
    }
  }
  RelativeAffineLength out;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rational area = doubled_area(c[i], d[i + 1], c[i + 1]);
    if (sgn(area) < 0) {
      throw Error(ErrorKind::CircumscriptionViolation,
                  "D_" + std::to_string(i + 1) + " lies on the inner side of edge " + std::to_string(i));
    }
    out.value += std::cbrt(to_double(area));
    out.areas.push_back(std::move(area));
  }
  return out;
}

BrokenLine chord_parallel_circumscription(const BrokenLine& gamma) {
  const Frame& f = gamma.frame;
  const auto& c = gamma.vertices;
  const std::size_t k = c.size() - 2;
  std::vector<RatVec> dirs(k + 2);
  dirs[0] = f.ac();
  dirs[k + 1] = f.cb();
  for (std::size_t i = 1; i <= k; ++i) dirs[i] = c[i + 1] - c[i - 1];
  BrokenLine out{{c.front()}, f, std::nullopt};
  for (std::size_t j = 1; j <= k + 1; ++j) {
    const RatVec e = c[j] - c[j - 1];
    const Rational alpha = latcurve::cross(e, dirs[j]) / latcurve::cross(dirs[j - 1], dirs[j]);
    out.vertices.push_back(c[j - 1] + alpha * dirs[j - 1]);
  }
  out.vertices.push_back(c.back());
  return out;
}

std::uint64_t multistart_seed(const SupOptions& options) {
  if (options.seed) return *options.seed;
  if (const char* env = std::getenv("LCL_SEED"); env && *env) return std::stoull(env);
  return 20240601;
}

double affine_length_at(const BrokenLine& gamma, const std::vector<double>& params) {
  const SupProblem problem(gamma);
  if (params.size() != problem.k()) throw Error(ErrorKind::Configuration, "one parameter per intermediate vertex");
  return problem.total(params);
}

SupResult affine_length_sup(const BrokenLine& gamma, const SupOptions& options) {
  if (gamma.vertices.size() < 2) throw Error(ErrorKind::Configuration, "broken line needs endpoints");
  const SupProblem problem(gamma);
  const int starts = std::max(1, options.multistarts);
  std::vector<std::vector<double>> initial(static_cast<std::size_t>(starts));
  std::mt19937_64 rng(multistart_seed(options));
  std::uniform_real_distribution<double> uniform(0.05, 0.95);
  for (std::size_t j = 0; j < initial.size(); ++j) {
    initial[j].resize(problem.k(), 0.5);
    if (j > 0)
      for (double& s : initial[j]) s = uniform(rng);
  }
  const auto runs = parallel_map<AscentResult>(initial.size(), [&](std::size_t j) {
    return coordinate_ascent(problem, initial[j], options);
  });
  SupResult out;
  std::size_t best = 0;
  double lo = runs[0].value;
  for (std::size_t j = 1; j < runs.size(); ++j) {
    if (runs[j].value > runs[best].value) best = j;
    lo = std::min(lo, runs[j].value);
  }
  out.value = runs[best].value;
  out.spread = out.value - lo;
  out.params = runs[best].params;
  out.sweeps = runs[best].sweeps;
  return out;
}

Lemma1Quantities lemma1_quantities(const Frame& f, const RatPoint& p, const RatPoint& r, const RatPoint& q) {
  const auto lambda = line_param(f.a(), f.c(), p);
  const auto rho = line_param(f.c(), f.b(), r);
  if (!strictly_between(lambda)) throw Error(ErrorKind::Configuration, "P must lie strictly inside side AC");
  if (!strictly_between(rho)) throw Error(ErrorKind::Configuration, "R must lie strictly inside side CB");
  const auto nu = line_param(p, r, q);
  if (!strictly_between(nu)) throw Error(ErrorKind::Configuration, "Q must lie strictly inside segment PR");

  Lemma1Quantities out;
  out.lambda = *lambda;
  out.rho = *rho;
  out.nu = *nu;
  const Rational& s = f.doubled_area();
  const Rational apq = abs(doubled_area(f.a(), p, q));
  const Rational bqr = abs(doubled_area(f.b(), q, r));
  out.err = 1.0 - cbrt_ratio(apq, s) - cbrt_ratio(bqr, s);

  // S(APQ)/S = lambda*nu*rho and S(BQR)/S is the product of the complements,
  // and the three complements sum to 3 minus the first three; so Err splits
  // into two AM-GM gaps, each evaluated through the cube-root identity.
  auto gap = [](double x, double y, double z) {
    const double a = std::cbrt(x), b = std::cbrt(y), c = std::cbrt(z);
    return (a + b + c) * ((a - b) * (a - b) + (b - c) * (b - c) + (c - a) * (c - a)) / 6.0;
  };
  const double l = to_double(out.lambda), n = to_double(out.nu), rr = to_double(out.rho);
  out.err_stable = gap(l, n, rr) + gap(1 - l, 1 - n, 1 - rr);

  const Rational ap = segment_girth(f, f.a(), p);
  const Rational pq = segment_girth(f, p, q);
  out.ratio_ap_pq = ap / pq;
  out.normalized_radius = s * abc_radius(f, f.a(), q, p);
  // In the frame APQ both AP and PQ have girth 1, and AP/AC = lambda.
  const Rational at_ap = out.lambda / ap;
  const Rational at_pq = out.lambda / pq;
  out.distortion_lo = std::min(at_ap, at_pq);
  out.distortion_hi = std::max(at_ap, at_pq);
  return out;
}

double cube_root_identity_residual(double x, double y, double z) {
  const double a = std::cbrt(x), b = std::cbrt(y), c = std::cbrt(z);
  const double lhs = 2 * (x + y + z) - 6 * std::cbrt(x * y * z);
  const double rhs = (a + b + c) * ((a - b) * (a - b) + (b - c) * (b - c) + (c - a) * (c - a));
  return std::abs(lhs - rhs);
}

namespace {

void check_quadrilateral(const Frame& f, const RatPoint& p, const RatPoint& s, const RatPoint& t, const RatPoint& r,
                         const RatPoint& q) {
  const std::array<RatPoint, 4> quad = {p, s, t, r};
  int sign = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const int turn = sgn(latcurve::cross(quad[(i + 1) % 4] - quad[i], quad[(i + 2) % 4] - quad[(i + 1) % 4]));
    if (turn == 0 || (sign != 0 && turn != sign)) {
      throw Error(ErrorKind::Configuration, "PSTR must be a strictly convex quadrilateral");
    }
    sign = turn;
  }
  if (!f.in_angle(s - p) || !f.in_angle(t - s) || !f.in_angle(r - t)) {
    throw Error(ErrorKind::Configuration, "PS, ST and TR must lie in An");
  }
  if (!strictly_between(line_param(s, t, q))) throw Error(ErrorKind::Configuration, "Q must lie strictly inside ST");
}

Rational area(const RatPoint& a, const RatPoint& b, const RatPoint& c) { return abs(doubled_area(a, b, c)); }

}  // namespace

Rational gauss_line_residual(const Frame& f, const RatPoint& p, const RatPoint& s, const RatPoint& t,
                             const RatPoint& r, const RatPoint& q) {
  check_quadrilateral(f, p, s, t, r, q);
  const Rational qr = segment_girth(f, q, r), sq = segment_girth(f, s, q);
  const Rational pq = segment_girth(f, p, q), qt = segment_girth(f, q, t);
  return area(p, q, r) - qr / sq * area(p, q, s) - pq / qt * area(r, q, t);
}

RadiusInterpolation radius_interpolation(const Frame& f, const RatPoint& p, const RatPoint& s, const RatPoint& t,
                                         const RatPoint& r, const RatPoint& q) {
  check_quadrilateral(f, p, s, t, r, q);
  RadiusInterpolation out;
  out.radius = abc_radius(f, p, q, r);
  out.u = segment_girth(f, p, q) / segment_girth(f, p, s) * abc_radius(f, p, q, s);
  out.v = segment_girth(f, q, r) / segment_girth(f, r, t) * abc_radius(f, q, t, r);
  out.holds = std::min(out.u, out.v) <= out.radius && out.radius <= std::max(out.u, out.v);
  return out;
}

DeficitProbe affine_deficit(const BrokenLine& gamma, const SupOptions& options) {
  const SupResult sup = affine_length_sup(gamma, options);
  DeficitProbe out;
  out.k = gamma.intermediate_count();
  out.l_a = sup.value;
  out.deficit = std::cbrt(to_double(gamma.frame.doubled_area())) - sup.value;
  out.spread = sup.spread;
  return out;
}

DeficitProbe affine_deficit_probe(const Frame& f, std::int64_t n, const Rational& c, const SupOptions& options) {
  return affine_deficit(build_chain(f, n, c), options);
}

}  // namespace latcurve
