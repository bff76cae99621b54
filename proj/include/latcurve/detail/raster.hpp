#pragma once

// Exact lattice-point scanning of convex regions cut out by half-planes with
// integer coefficients.

#include <optional>
#include <span>
#include <vector>

#include "latcurve/exact_core.hpp"

namespace latcurve::detail {

/// a*x + b*y + c >= 0, or > 0 when strict.
struct HalfPlane {
  i128 a = 0, b = 0, c = 0;
  bool strict = false;
};

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntRange {
  i128 lo = 0;
  i128 hi = -1;

  bool empty() const { return lo > hi; }
  i128 size() const { return empty() ? 0 : hi - lo + 1; }
};

/// Integer solutions t of a*t + c >= 0 (or > 0), intersected into [lo, hi].
/// `lo`/`hi` are nullopt while unbounded.
class TRange {
 public:
  void constrain(i128 a, i128 c, bool strict);
  void intersect(IntRange r);
  bool infeasible() const { return infeasible_; }
  bool bounded() const { return lo_.has_value() && hi_.has_value(); }
  /// Throws std::logic_error when unbounded.
  IntRange range() const;

 private:
  std::optional<i128> lo_, hi_;
  bool infeasible_ = false;
};

/// x-range of lattice points in row y.
IntRange row_range(std::span<const HalfPlane> planes, i128 y);

/// Integer y-extent of the rational points' bounding box.
IntRange y_extent(std::span<const RatPoint> vertices);

/// Half-plane (a, b, c) scaled from rational coefficients to integers,
/// preserving sign.
HalfPlane make_half_plane(const Rational& a, const Rational& b, const Rational& c, bool strict);

/// Points X left of the directed line U -> V: (V - U) x (X - U) >= 0.
HalfPlane left_of(const RatPoint& u, const RatPoint& v, bool strict);

template <class Fn>
void for_each_lattice_point(std::span<const HalfPlane> planes, IntRange rows, Fn&& fn) {
  for (i128 y = rows.lo; y <= rows.hi; ++y) {
    const IntRange xs = row_range(planes, y);
    for (i128 x = xs.lo; x <= xs.hi; ++x) fn(x, y);
  }
}

}  // namespace latcurve::detail
