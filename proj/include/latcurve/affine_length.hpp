#pragma once

// Generalized affine length of broken lines and the elementary identities
// and inequalities behind it.

#include <cstdint>
#include <optional>
#include <vector>

#include "latcurve/jarnik.hpp"

namespace latcurve {

struct RelativeAffineLength {
  double value = 0;
  /// Exact doubled areas S(C_i D_{i+1} C_{i+1}), i = 0..k.
  std::vector<Rational> areas;
};

/// Sum of cube roots of the triangles cut off by the circumscribed line
/// gamma1 = A D_1 ... D_{k+1} B. Throws Error(CircumscriptionViolation)
/// unless each C_i lies on the closed segment D_i D_{i+1} and every cut-off
/// triangle is positively oriented.
RelativeAffineLength affine_length_rel(const BrokenLine& gamma, const BrokenLine& gamma1);

/// Circumscribed line whose support line at each intermediate C_i is
/// parallel to the chord C_{i-1} C_{i+1}, with AC and CB at the ends.
BrokenLine chord_parallel_circumscription(const BrokenLine& gamma);

struct SupOptions {
  double tol = 1e-10;
  int multistarts = 8;
  int max_sweeps = 5000;
  /// Seed of the multistart generator; nullopt reads LCL_SEED or falls
  /// back to a fixed default.
  std::optional<std::uint64_t> seed;
};

struct SupResult {
  double value = 0;
  /// Largest minus smallest value over the multistarts.
  double spread = 0;
  /// Support-line parameters s_i in (0, 1) of the best start.
  std::vector<double> params;
  int sweeps = 0;
};

/// Approximates l_A(gamma) by coordinate ascent over one support direction
/// per intermediate vertex, d_i = (1 - s_i) e_i/[e_i] + s_i e_{i+1}/[e_{i+1}],
/// with golden-section line searches and several starts.
SupResult affine_length_sup(const BrokenLine& gamma, const SupOptions& options = {});

/// Objective of affine_length_sup at given parameters.
double affine_length_at(const BrokenLine& gamma, const std::vector<double>& params);

std::uint64_t multistart_seed(const SupOptions& options);

struct Lemma1Quantities {
  double err = 0;         // 1 - (S(APQ)/S)^(1/3) - (S(BQR)/S)^(1/3)
  double err_stable = 0;  // same value from the cube-root bracket identity
  Rational lambda, nu, rho;  // P = A + lambda AC, R = C + rho CB, Q = P + nu PR
  Rational ratio_ap_pq;      // [AP]/[PQ]
  Rational normalized_radius;  // S * r(AQP)
  /// ([x]_{APQ}/[x]) * (AP/AC) at x = AP and x = PQ, sorted; both equal 1
  /// in the equality case.
  Rational distortion_lo, distortion_hi;
};

/// Throws Error(Configuration) unless P lies strictly inside side AC, R
/// strictly inside side CB and Q strictly inside PR.
Lemma1Quantities lemma1_quantities(const Frame& f, const RatPoint& p, const RatPoint& r, const RatPoint& q);

/// |2(x+y+z) - 6(xyz)^(1/3) - (a+b+c)((a-b)^2+(b-c)^2+(c-a)^2)| with a, b, c
/// the cube roots.
double cube_root_identity_residual(double x, double y, double z);

/// S(PQR) - ([QR]/[SQ]) S(PQS) - ([PQ]/[QT]) S(RQT) with unsigned doubled
/// areas. Throws Error(Configuration) unless PSTR is a strictly convex
/// quadrilateral with PS, ST, TR in An and Q strictly inside ST.
Rational gauss_line_residual(const Frame& f, const RatPoint& p, const RatPoint& s, const RatPoint& t,
                             const RatPoint& r, const RatPoint& q);

struct RadiusInterpolation {
  Rational radius;  // r(PQR)
  Rational u;       // ([PQ]/[PS]) r(PQS)
  Rational v;       // ([QR]/[RT]) r(QTR)
  bool holds = false;
};

/// Same preconditions as gauss_line_residual.
RadiusInterpolation radius_interpolation(const Frame& f, const RatPoint& p, const RatPoint& s, const RatPoint& t,
                                         const RatPoint& r, const RatPoint& q);

struct DeficitProbe {
  std::size_t k = 0;
  double l_a = 0;
  double deficit = 0;  // S^(1/3) - l_a
  double spread = 0;
};

DeficitProbe affine_deficit(const BrokenLine& gamma, const SupOptions& options = {});

/// Builds the Jarnik chain for (f, n, c) and measures its deficit.
DeficitProbe affine_deficit_probe(const Frame& f, std::int64_t n, const Rational& c,
                                  const SupOptions& options = {});

}  // namespace latcurve
