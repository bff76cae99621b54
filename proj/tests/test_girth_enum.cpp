#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "latcurve/error.hpp"
#include "latcurve/girth_enum.hpp"
#include "support.hpp"

using namespace latcurve;
using namespace latcurve::testing;

namespace {

/// Scan of a bounding box of the sublevel set {z in An : [z] <= r}.
std::vector<LatticeVec> brute_force_within(const Frame& f, const Rational& r) {
  const RatPoint corners[] = {RatPoint(), r * f.ac(), r * f.cb()};
  Rational x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const RatPoint& c : corners) {
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  std::vector<LatticeVec> out;
  for (std::int64_t x = to_int64(floor(x0)) - 1; x <= to_int64(ceil(x1)) + 1; ++x) {
    for (std::int64_t y = to_int64(floor(y0)) - 1; y <= to_int64(ceil(y1)) + 1; ++y) {
      const LatticeVec v{x, y};
      if (v == LatticeVec{}) continue;
      if (f.in_angle(RatVec(v)) && f.girth(v) <= r) out.push_back(v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("unit frame enumeration") {
  const Frame f = unit_frame();
  const auto two = enumerate_by_girth(f, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == LatticeVec{1, 0});
  CHECK(two[1] == LatticeVec{-1, 1});
  // Girth 2 is shared by (2,0), (0,1) and (-2,2); the angle tie-break from
  // AC picks (2,0) first.
  const auto five = enumerate_by_girth(f, 5);
  CHECK(five[2] == LatticeVec{2, 0});
  CHECK(five[3] == LatticeVec{0, 1});
  CHECK(five[4] == LatticeVec{-2, 2});
  CHECK(f.girth(five[3]) == 2);
  CHECK(girth_sum(f, 2) == 2);
  CHECK(enumerate_by_girth(f, 1).front() == LatticeVec{1, 0});
}

TEST_CASE("count below threshold") {
  const Frame f = unit_frame();
  CHECK(count_girth_below(f, Rational(1)) == 0);
  CHECK(count_girth_below(f, Rational(2)) == 2);
  CHECK(count_girth_below(f, Rational(5, 2)) == 5);
  // #{[z] < R} for integer R on the unit frame is (R-1)(R+2)/2.
  for (long r = 1; r < 60; ++r) CHECK(count_girth_below(f, Rational(r)) == (r - 1) * (r + 2) / 2);
  const Rational big(200);
  const double ratio = to_double(Rational(count_girth_below(f, big))) / (to_double(big * big) / 2);
  CHECK(ratio == doctest::Approx(1.0).epsilon(0.05));
  CHECK_THROWS_AS(count_girth_below(f, Rational(0)), Error);
}

TEST_CASE("girth sum closed form on the unit frame") {
  // Vectors of girth exactly g number g + 1, so after all vectors of girth
  // <= R the sum is sum g(g+1) = R(R+1)(R+2)/3.
  const Frame f = unit_frame();
  for (long r = 1; r <= 30; ++r) {
    const std::size_t k = static_cast<std::size_t>(r * (r + 3) / 2);
    CHECK(girth_sum(f, k) == Q(r * (r + 1) * (r + 2), 3));
  }
}

TEST_CASE("enumeration matches a bounding-box oracle on random frames") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Frame f = trial % 2 ? random_integer_frame(rng, 6) : random_rational_frame(rng);
    const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, 200));
    const auto got = enumerate_by_girth(f, k);
    REQUIRE(got.size() == k);
    const Rational rk = f.girth(got.back());
    auto oracle = brute_force_within(f, rk);
    const GirthForm& g = f.form();
    std::sort(oracle.begin(), oracle.end(), [&](LatticeVec u, LatticeVec v) { return girth_less(g, u, v); });
    REQUIRE(oracle.size() >= k);
    oracle.resize(k);
    CHECK(got == oracle);
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(f.girth(got[i - 1]) <= f.girth(got[i]));
  }
}

TEST_CASE("enumeration is prefix stable") {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const Frame f = random_integer_frame(rng, 8);
    const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, 300));
    const auto a = enumerate_by_girth(f, k);
    const auto b = enumerate_by_girth(f, k + 1);
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
  }
}

TEST_CASE("primitive interior selection") {
  const Frame f = unit_frame();
  const auto vs = enumerate_by_girth(f, 50, VectorSelection::PrimitiveInterior);
  REQUIRE(vs.size() == 50);
  for (LatticeVec v : vs) {
    CHECK(f.in_angle_interior(v));
    CHECK(std::gcd(v.x, v.y) == 1);
  }
  CHECK(vs.front() == LatticeVec{0, 1});
}

TEST_CASE("girth sum asymptotics on random integer frames") {
  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const Frame f = random_integer_frame(rng, 10);
    const std::size_t k = 10000;
    const double ratio = to_double(girth_sum(f, k)) / girth_sum_leading_term(f, k);
    CHECK(ratio >= 0.95);
    CHECK(ratio <= 1.05);
  }
}
