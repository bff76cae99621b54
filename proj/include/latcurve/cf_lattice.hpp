#pragma once

// Continued fractions, convergent lattice geometry and the search for
// nearly isosceles, thin basic triangles along a ray y = alpha*x.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "latcurve/exact_core.hpp"

namespace latcurve {

/// Closed interval known to contain a real number. lo == hi for exact input.
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool is_exact() const { return lo == hi; }
};

RationalInterval exact_interval(const Rational& value);

/// Bracket of sqrt(x) of width at most 2^-bits (x >= 0).
RationalInterval sqrt_interval(const Rational& x, unsigned bits);

/// Accepts an exact rational ("2/5", "0.3"), "sqrt:X", "isqrt:X" (1/sqrt X)
/// or "golden" ((sqrt 5 - 1)/2). Irrationals are bracketed to `bits` bits.
RationalInterval parse_real(std::string_view text, unsigned bits = 256);

struct ContinuedFraction {
  std::vector<Integer> partial_quotients;               // a_1, a_2, ...
  std::vector<std::pair<Integer, Integer>> convergents;  // (p_k, q_k), k >= 1
  bool terminated = false;                               // exact value reached
};

/// Expansion of alpha = 1/(a_1 + 1/(a_2 + ...)), 0 < alpha < 1, to at most
/// `depth` quotients. Stops early when a rational terminates.
ContinuedFraction cf_expand(const Rational& alpha, std::size_t depth);

/// Same for an interval; throws PrecisionExhausted if fewer than `depth`
/// quotients are determined by the interval (and it has not terminated).
ContinuedFraction cf_expand(const RationalInterval& alpha, std::size_t depth);

/// Longest prefix (up to max_depth) shared by every number in the interval.
ContinuedFraction cf_expand_determined(const RationalInterval& alpha, std::size_t max_depth);

/// O, a, b with |a x b| = 1.
struct BasicTriangle {
  LatticeVec a;
  LatticeVec b;

  friend bool operator==(const BasicTriangle&, const BasicTriangle&) = default;
};

bool is_basic(const BasicTriangle& t);

/// True when every ray y = alpha*x, x > 0, with alpha in the interval passes
/// through the open angle aOb, hence through the open segment ab.
bool ray_crosses(LatticeVec a, LatticeVec b, const RationalInterval& alpha);

struct NosesStretch {
  BasicTriangle triangle;  // (B_{i-1}, B_i)
  std::int64_t index = 0;  // i >= 1
};

/// B_0 = b, B_i = B_{i-1} + a; returns the first i whose open segment
/// B_{i-1}B_i meets the ray. Throws NoCrossing when the ray is outside the
/// angle aOb or hits some B_i, PrecisionExhausted when the interval straddles
/// a B_i, Configuration when (a, b) is not basic.
NosesStretch noses_stretch(LatticeVec a, LatticeVec b, const RationalInterval& alpha);

struct Suitability {
  double side_ratio = 0;  // min(|a|,|b|)/max(|a|,|b|)
  double angle = 0;       // apex angle at O, radians
};

Suitability suitability(const BasicTriangle& t);
bool is_suitable(const BasicTriangle& t, double eps);

struct SuitableTriangle {
  BasicTriangle triangle;
  std::size_t convergent_index = 0;  // k of the pair (V_k, V_{k+1}); V_0 = (1, 0)
  std::int64_t stretch_index = 0;
  Suitability metrics;
};

struct SuitableSearch {
  std::optional<SuitableTriangle> found;
  std::size_t pairs_scanned = 0;
  bool precision_limited = false;  // ran out of determined quotients before the bound
};

/// Scans consecutive convergent vectors V_k = (q_k, p_k), V_0 = (1, 0), with
/// q_{k+1} <= bound, stretches each pair and returns the first eps-suitable
/// triangle whose interior meets the ray.
SuitableSearch find_suitable(const RationalInterval& alpha, double eps, std::int64_t bound);

}  // namespace latcurve
