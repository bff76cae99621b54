#pragma once

// Convex curves carrying many points of (Z/q)^2 for a prescribed sequence of
// scales: one Jarnik chain per tangent triangle of a rational circular arc.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latcurve/exact_core.hpp"
#include "latcurve/jarnik.hpp"

namespace latcurve {

struct TangentDecomposition {
  std::vector<RatPoint> touch_points;  // A_1, ..., A_{m+1}
  std::vector<RatPoint> apexes;        // B_1, ..., B_m
  std::vector<Frame> frames;           // (A_i, A_{i+1}, apex B_i)
  std::vector<Rational> tangent_params;  // t_i = tan(phi_i / 2) before scaling
  std::int64_t tangent_denominator = 0;
  Integer homothety = 1;
  double turning = 0;  // total angle between the first and last tangent
};

/// Points A_i on a circle at angles spread over (-0.49 pi, 0.49 pi) in
/// proportion to the c_i, with rational tan-half-angle parameters, and the
/// tangent apexes B_i. One integer homothety makes every doubled area
/// S_i >= 100 c_i^3. Throws DegenerateSeries when some c_i <= 0 or the prefix
/// is empty.
TangentDecomposition tangent_decomposition(const std::vector<Rational>& c_prefix);

/// Admissible scales. `all` accepts every positive integer; `list` a finite
/// sorted set; `predicate` scans at most `scan_limit` integers per query.
class AdmissibleSet {
 public:
  static AdmissibleSet all();
  static AdmissibleSet list(std::vector<std::int64_t> values);
  static AdmissibleSet predicate(std::function<bool(std::int64_t)> accept, std::int64_t scan_limit = 1 << 20);

  /// Least admissible q >= from, if any is reachable.
  std::optional<std::int64_t> next_at_least(std::int64_t from) const;
  bool contains(std::int64_t q) const;
  std::string describe() const;

 private:
  enum class Kind { All, List, Predicate };
  Kind kind_ = Kind::All;
  std::vector<std::int64_t> values_;
  std::function<bool(std::int64_t)> accept_;
  std::int64_t scan_limit_ = 0;
};

struct CurveStage {
  Frame frame;
  BrokenLine chain;
  std::int64_t q = 0;
  Rational c;
  std::size_t certified_count = 0;
  std::size_t attempts = 0;
};

struct Curve {
  std::vector<CurveStage> stages;
  std::vector<RatPoint> global_vertices;
  TangentDecomposition decomposition;
};

struct SynthOptions {
  std::size_t max_doublings = 64;
};

/// Stage i picks, along a doubling schedule seeded at
/// max(q_{i-1} + 1, ceil((5/c_i)^3 / S_i)), the first admissible q whose chain
/// has at least c_i q^(2/3) intermediate vertices (exact check). Throws
/// SearchExhausted with the attempted range, DegenerateSeries for bad c_i,
/// Configuration when the series is shorter than `stages`.
Curve synthesize(const std::vector<Rational>& series, const AdmissibleSet& admissible, std::size_t stages,
                 const SynthOptions& opts = {});

/// count^3 >= c^3 q^2, i.e. count >= c q^(2/3).
bool meets_certificate(const Integer& count, const Rational& c, std::int64_t q);

/// Consecutive edges of the vertex list turn strictly counterclockwise.
bool strictly_convex(const std::vector<RatPoint>& vertices);

/// Points of (Z/n)^2 on the piecewise-linear curve.
Integer count_on_curve(const Curve& curve, std::int64_t n);
Integer count_on_curve(const std::vector<RatPoint>& vertices, std::int64_t n);

/// c_k = ratio^k for k = 1..terms.
std::vector<Rational> geometric_series(const Rational& ratio, std::size_t terms);

}  // namespace latcurve
