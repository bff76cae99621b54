#pragma once

// Exact planar primitives: integer and rational vectors, oriented frames and
// the girth functional they induce.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "latcurve/rational.hpp"

namespace latcurve {

struct LatticeVec {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
  friend LatticeVec operator+(LatticeVec a, LatticeVec b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticeVec operator-(LatticeVec a, LatticeVec b) { return {a.x - b.x, a.y - b.y}; }
  friend LatticeVec operator-(LatticeVec a) { return {-a.x, -a.y}; }
  friend LatticeVec operator*(std::int64_t k, LatticeVec a) { return {k * a.x, k * a.y}; }
};

/// Exact rational point; also used for rational vectors (differences of points).
struct RatPoint {
  Rational x;
  Rational y;

  RatPoint() = default;
  RatPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  explicit RatPoint(LatticeVec v) : x(v.x), y(v.y) {}

  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
  friend RatPoint operator+(const RatPoint& a, const RatPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend RatPoint operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend RatPoint operator-(const RatPoint& a) { return {-a.x, -a.y}; }
  friend RatPoint operator*(const Rational& k, const RatPoint& a) { return {k * a.x, k * a.y}; }
};

using RatVec = RatPoint;

/// Pseudoscalar product u.x*v.y - u.y*v.x.
Integer cross(LatticeVec u, LatticeVec v);
Rational cross(const RatVec& u, const RatVec& v);
i128 cross_i128(LatticeVec u, LatticeVec v);

/// (Q-P) x (R-P): signed doubled area, positive for counterclockwise PQR.
Rational doubled_area(const RatPoint& p, const RatPoint& q, const RatPoint& r);

/// Integer coefficients of the angle coordinates of a frame, sharing one
/// positive denominator: t1(v) = (t1x*v.x + t1y*v.y)/den and likewise t2,
/// where v = t1*AC + t2*CB. The girth of v is t1 + t2.
struct GirthForm {
  std::int64_t t1x = 0, t1y = 0;
  std::int64_t t2x = 0, t2y = 0;
  std::int64_t den = 1;

  i128 t1_num(LatticeVec v) const { return static_cast<i128>(t1x) * v.x + static_cast<i128>(t1y) * v.y; }
  i128 t2_num(LatticeVec v) const { return static_cast<i128>(t2x) * v.x + static_cast<i128>(t2y) * v.y; }
  i128 girth_num(LatticeVec v) const { return t1_num(v) + t2_num(v); }
};

/// Triangle ABC with positive orientation S = AC x CB > 0.
class Frame {
 public:
  /// Swaps A and B when the given orientation is negative; throws
  /// Error(DegenerateTriangle) for collinear input.
  static Frame make(RatPoint a, RatPoint b, RatPoint c);

  const RatPoint& a() const { return a_; }
  const RatPoint& b() const { return b_; }
  const RatPoint& c() const { return c_; }
  /// Doubled area S > 0.
  const Rational& doubled_area() const { return s_; }
  bool swapped() const { return swapped_; }

  RatVec ac() const { return c_ - a_; }
  RatVec cb() const { return b_ - c_; }

  /// [v] = (v x CB + AC x v) / S.
  Rational girth(const RatVec& v) const;
  Rational girth(LatticeVec v) const;

  /// Coordinates (t1, t2) with v = t1*AC + t2*CB.
  std::pair<Rational, Rational> angle_coords(const RatVec& v) const;

  /// v in the closed cone spanned by AC and CB.
  bool in_angle(const RatVec& v) const;
  bool in_angle(LatticeVec v) const;
  /// v in the open cone (both coordinates strictly positive).
  bool in_angle_interior(LatticeVec v) const;

  /// Strictly inside triangle ABC.
  bool strictly_inside(const RatPoint& p) const;

  /// Integer form of the angle coordinates; throws Error(Overflow) if the
  /// frame's denominators are too large for 64-bit coefficients.
  const GirthForm& form() const;

 private:
  Frame(RatPoint a, RatPoint b, RatPoint c, Rational s, bool swapped);

  RatPoint a_, b_, c_;
  Rational s_;
  bool swapped_ = false;
  GirthForm form_;
  bool form_ok_ = false;
};

/// Girth of segment PQ, i.e. |[Q - P]|.
Rational segment_girth(const Frame& f, const RatPoint& p, const RatPoint& q);

/// Product of side girths over quadruple area. Throws
/// Error(DegenerateTriangle) when PQR is collinear.
Rational abc_radius(const Frame& f, const RatPoint& p, const RatPoint& q, const RatPoint& r);

/// Number of points of (Z/n)^2 on the closed segment PQ.
Integer segment_lattice_count(const RatPoint& p, const RatPoint& q, std::int64_t n);

/// Number of points of (Z/n)^2 on a polyline, shared vertices counted once.
Integer polyline_lattice_count(std::span<const RatPoint> vertices, std::int64_t n);

/// n*p has integer coordinates.
bool on_lattice(const RatPoint& p, std::int64_t n);

/// Integer 2x2 matrix acting on column vectors.
struct Mat2 {
  std::int64_t a = 1, b = 0;
  std::int64_t c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  LatticeVec apply(LatticeVec v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  RatPoint apply(const RatPoint& v) const {
    return {Rational(a) * v.x + Rational(b) * v.y, Rational(c) * v.x + Rational(d) * v.y};
  }
};

}  // namespace latcurve
