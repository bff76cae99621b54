#pragma once

// Shared generators and oracles for the test suites. Every generator takes an
// explicit engine so each test case owns its seed.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "latcurve/equidist.hpp"
#include "latcurve/error.hpp"
#include "latcurve/exact_core.hpp"

namespace latcurve::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den) {
  Rational q(uniform_int(rng, -max_abs_num, max_abs_num), uniform_int(rng, 1, max_den));
  q.canonicalize();
  return q;
}

inline RatPoint random_point(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den) {
  return {random_rational(rng, max_abs_num, max_den), random_rational(rng, max_abs_num, max_den)};
}

inline LatticeVec random_vec(Rng& rng, std::int64_t bound) {
  return {uniform_int(rng, -bound, bound), uniform_int(rng, -bound, bound)};
}

inline Frame unit_frame() {
  return Frame::make(RatPoint(Rational(0), Rational(0)), RatPoint(Rational(0), Rational(1)),
                     RatPoint(Rational(1), Rational(0)));
}

/// Non-degenerate frame with integer vertices in [-bound, bound]^2.
inline Frame random_integer_frame(Rng& rng, std::int64_t bound) {
  for (;;) {
    const RatPoint a(random_vec(rng, bound));
    const RatPoint b(random_vec(rng, bound));
    const RatPoint c(random_vec(rng, bound));
    if (doubled_area(a, b, c) != 0) return Frame::make(a, b, c);
  }
}

/// Non-degenerate frame with small-denominator rational vertices.
inline Frame random_rational_frame(Rng& rng) {
  for (;;) {
    const RatPoint a = random_point(rng, 20, 6);
    const RatPoint b = random_point(rng, 20, 6);
    const RatPoint c = random_point(rng, 20, 6);
    if (doubled_area(a, b, c) != 0) return Frame::make(a, b, c);
  }
}

/// Uniform nonzero element of [0, 1) with denominator dividing 2^bits.
inline Rational random_dyadic_fraction(Rng& rng, unsigned bits) {
  for (;;) {
    Integer num = 0;
    for (unsigned done = 0; done < bits; done += 64) {
      num <<= 64;
      num += Integer(std::to_string(rng()));
    }
    num >>= (bits + 63) / 64 * 64 - bits;
    if (num == 0) continue;
    Rational q(num, Integer(1) << bits);
    q.canonicalize();
    return q;
  }
}

inline Rational Q(long p, long q) { return make_rational(p, q); }

inline RatPoint pt(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

/// Random origin-star fan: 2..4 lattice directions with coordinates in
/// [-2, 2], each scaled by 1/2, 3/4 or 1.
inline StarDomain random_star(Rng& rng) {
  for (;;) {
    const int k = static_cast<int>(uniform_int(rng, 2, 4));
    std::vector<LatticeVec> dirs;
    while (static_cast<int>(dirs.size()) < k) {
      const LatticeVec v = random_vec(rng, 2);
      if (!(v == LatticeVec{})) dirs.push_back(v);
    }
    const double base = std::atan2(static_cast<double>(dirs[0].y), static_cast<double>(dirs[0].x));
    auto rel = [&](LatticeVec v) {
      double a = std::atan2(static_cast<double>(v.y), static_cast<double>(v.x)) - base;
      while (a < 0) a += 2 * std::numbers::pi;
      return a;
    };
    std::sort(dirs.begin(), dirs.end(), [&](LatticeVec a, LatticeVec b) { return rel(a) < rel(b); });
    std::vector<RatPoint> vertices;
    for (LatticeVec d : dirs) vertices.push_back(Q(uniform_int(rng, 2, 4), 4) * RatPoint(d));
    try {
      return StarDomain::fan(vertices);
    } catch (const Error&) {
    }
  }
}

inline RatPoint lerp(const RatPoint& a, const RatPoint& b, const Rational& t) { return a + t * (b - a); }

inline Rational random_unit_open(Rng& rng, std::int64_t den = 997) { return Q(uniform_int(rng, 1, den - 1), den); }

/// Vector of the open cone of f.
inline RatVec random_cone_vec(Rng& rng, const Frame& f) {
  return random_unit_open(rng, 29) * f.ac() + random_unit_open(rng, 29) * f.cb();
}

/// Convex quadrilateral PSTR with edges in the open cone of f and Q inside ST.
struct QuadConfig {
  RatPoint p, s, t, r, q;
};

inline QuadConfig random_quad(Rng& rng, const Frame& f) {
  std::array<RatVec, 3> u;
  for (;;) {
    for (auto& v : u) v = random_cone_vec(rng, f);
    std::sort(u.begin(), u.end(), [](const RatVec& a, const RatVec& b) { return sgn(cross(a, b)) > 0; });
    if (cross(u[0], u[1]) != 0 && cross(u[1], u[2]) != 0) break;
  }
  QuadConfig c;
  c.p = random_point(rng, 30, 7);
  c.s = c.p + random_unit_open(rng, 13) * 3 * u[0];
  c.t = c.s + random_unit_open(rng, 13) * 3 * u[1];
  c.r = c.t + random_unit_open(rng, 13) * 3 * u[2];
  c.q = lerp(c.s, c.t, random_unit_open(rng, 101));
  return c;
}

}  // namespace latcurve::testing
