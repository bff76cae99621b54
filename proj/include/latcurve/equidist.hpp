#pragma once

// Counting integer vector pairs with a fixed pseudoscalar product in scaled
// star domains, and the asymptotic constants they are compared against.

#include <cstdint>
#include <string_view>
#include <vector>

#include "latcurve/exact_core.hpp"

namespace latcurve {

/// Triangle with a vertex at the origin: {a u + b v : a > 0, b > 0, a + b <= 1},
/// with u x v > 0. When include_start_ray is set the ray through u (b = 0)
/// belongs to the triangle as well, which lets fans share internal rays
/// without double counting.
struct OriginTriangle {
  RatPoint u, v;
  bool include_start_ray = false;
};

class StarDomain {
 public:
  StarDomain() = default;
  /// Throws Error(Configuration) if a triangle is degenerate or clockwise,
  /// or if two sectors overlap.
  explicit StarDomain(std::vector<OriginTriangle> triangles);

  /// {0 < y < x <= a}.
  static StarDomain sector(const Rational& a);
  /// Polygon O, v_1, ..., v_k (counterclockwise) split into the fan of
  /// triangles O v_i v_{i+1}; the rays through v_1 and v_k are excluded.
  static StarDomain fan(const std::vector<RatPoint>& vertices);
  /// Parses "tri:a" or "poly:x1,y1;x2,y2;...".
  static StarDomain parse(std::string_view spec);

  const std::vector<OriginTriangle>& triangles() const { return triangles_; }
  bool empty() const { return triangles_.empty(); }

  /// Image under an orientation-preserving unimodular map.
  StarDomain transformed(const Mat2& m) const;
  StarDomain scaled(const Rational& factor) const;

  /// Exact membership of p in the domain scaled by n.
  bool contains(const RatPoint& p, const Rational& n = Rational(1)) const;
  /// Doubled area.
  Rational doubled_area() const;
  /// Largest coordinate magnitude of a vertex.
  Rational radius() const;

 private:
  std::vector<OriginTriangle> triangles_;
};

/// Sum of positive divisors.
std::int64_t sigma(std::int64_t m);

/// Length of the domain's intersection with the full line through the
/// origin at angle phi; sectors are taken half-open at their start ray.
double chord_profile(const StarDomain& omega, double phi);

/// Integral over (0, pi) of the product of the two chord profiles, with
/// Gauss-Kronrod quadrature on each interval between ray angles.
double profile_integral(const StarDomain& omega1, const StarDomain& omega2, double tol = 1e-11);

/// Integer points of n * omega.
std::vector<LatticeVec> lattice_points(const StarDomain& omega, std::int64_t n);

/// #{(x1, x2) : x1 in n*omega1, x2 in n*omega2 integer, x1 x x2 = m} by a
/// double loop.
std::int64_t count_pairs_bruteforce(const StarDomain& omega1, const StarDomain& omega2, std::int64_t m,
                                    std::int64_t n);

/// Same count, walking the lattice line of solutions for each x1.
std::int64_t count_pairs_fast(const StarDomain& omega1, const StarDomain& omega2, std::int64_t m, std::int64_t n);

/// sigma(|m|)/|m| * (6/pi^2) * profile_integral * n^2.
double pair_prediction(const StarDomain& omega1, const StarDomain& omega2, std::int64_t m, std::int64_t n);

struct PairCount {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t count = 0;
  double prediction = 0;
};

/// (2 zeta(2))^(-1) sigma(|m|)/|m|.
double special_point_constant(std::int64_t m);

/// Pairs x, y in An with x x y = m and ([x], [y]) in N*omega; prediction
/// c(m) S N^2 S(omega) with S(omega) the doubled area of omega.
PairCount special_point_count(const Frame& f, std::int64_t m, std::int64_t big_n, const StarDomain& omega);

/// Direct double loop over girth-bounded vectors; oracle for small N.
std::int64_t special_point_count_bruteforce(const Frame& f, std::int64_t m, std::int64_t big_n,
                                            const StarDomain& omega);

/// Translation classes of triangles PQR with u = PQ and w = QR in An
/// integer, 1 <= u x w <= m, [PR] <= M (n/S)^(1/3) and
/// r(PQR) in (2 n t1/S, 2 n t2/S).
std::int64_t triangle_census(const Frame& f, std::int64_t n, std::int64_t m, const Rational& big_m,
                             const Rational& t1, const Rational& t2);

}  // namespace latcurve
