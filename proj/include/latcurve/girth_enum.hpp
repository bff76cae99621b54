#pragma once

// Integer vectors of the frame cone An ordered by girth.

#include <cstddef>
#include <vector>

#include "latcurve/exact_core.hpp"

namespace latcurve {

enum class VectorSelection {
  All,                // every nonzero vector of the closed cone
  PrimitiveInterior,  // gcd 1 and strictly inside the cone
};

/// Strict weak order used everywhere vectors of one cone are ranked: girth
/// first, then counterclockwise angle from the AC ray.
bool girth_less(const GirthForm& form, LatticeVec u, LatticeVec v);

/// The k vectors of Z^2 ∩ An (minus the origin) with least girth, sorted by
/// (girth, angle). enumerate_by_girth(f, k) is a prefix of
/// enumerate_by_girth(f, k + 1).
std::vector<LatticeVec> enumerate_by_girth(const Frame& f, std::size_t k,
                                           VectorSelection selection = VectorSelection::All);

/// All nonzero vectors of Z^2 ∩ An with girth <= r (or < r when strict),
/// unordered.
std::vector<LatticeVec> vectors_within_girth(const Frame& f, const Rational& r, bool strict,
                                             VectorSelection selection = VectorSelection::All);

/// #{z in Z^2 ∩ An, z != 0 : [z] < r}, counted row by row without
/// materializing the points.
Integer count_girth_below(const Frame& f, const Rational& r);

/// Sum of the girths of enumerate_by_girth(f, k).
Rational girth_sum(const Frame& f, std::size_t k);

/// Prefix sums of girths over enumerate_by_girth(f, k): entry j is the sum
/// of the first j + 1 girths.
std::vector<Rational> girth_prefix_sums(const Frame& f, std::size_t k);

/// (2*sqrt(2)/3) * S^(-1/2) * k^(3/2), the leading term of the girth sum.
double girth_sum_leading_term(const Frame& f, std::size_t k);

}  // namespace latcurve
