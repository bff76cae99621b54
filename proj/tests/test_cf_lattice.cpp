#include <doctest.h>

#include <cmath>

#include "latcurve/cf_lattice.hpp"
#include "latcurve/error.hpp"
#include "support.hpp"

using namespace latcurve;
using namespace latcurve::testing;

namespace {

Integer det(const std::pair<Integer, Integer>& u, const std::pair<Integer, Integer>& v) {
  return u.first * v.second - v.first * u.second;
}

// Exact value of a finite expansion, rebuilt from the quotients.
Rational evaluate(const std::vector<Integer>& a) {
  Rational x = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) x = 1 / (Rational(*it) + x);
  return x;
}

// Independent oracle: walk the fan one step at a time.
std::int64_t stretch_index_by_walk(LatticeVec a, LatticeVec b, const Rational& alpha) {
  auto side = [&](LatticeVec v) { return sgn(Rational(alpha * v.x - v.y)); };
  int start = side(b);
  LatticeVec cur = b;
  for (std::int64_t i = 1; i < 1'000'000; ++i) {
    cur = cur + a;
    if (side(cur) != start) return i;
  }
  return -1;
}

}  // namespace

TEST_CASE("two fifths expands to [2,2]") {
  ContinuedFraction cf = cf_expand(Q(2, 5), 10);
  CHECK(cf.terminated);
  REQUIRE(cf.partial_quotients == std::vector<Integer>{2, 2});
  REQUIRE(cf.convergents.size() == 2);
  CHECK(cf.convergents[0] == std::pair<Integer, Integer>(1, 2));
  CHECK(cf.convergents[1] == std::pair<Integer, Integer>(2, 5));
}

TEST_CASE("depth caps the expansion of a rational") {
  ContinuedFraction cf = cf_expand(Q(13, 29), 2);
  CHECK(cf.partial_quotients.size() == 2);
  CHECK_FALSE(cf.terminated);
  CHECK(cf_expand(Q(13, 29), 100).terminated);
}

TEST_CASE("golden conjugate gives all ones and Fibonacci ratios") {
  RationalInterval g = parse_real("golden", 256);
  ContinuedFraction cf = cf_expand(g, 60);
  Integer f0 = 1, f1 = 1;  // q_k = F_{k+1}, p_k = F_k
  for (std::size_t k = 0; k < 60; ++k) {
    CHECK(cf.partial_quotients[k] == 1);
    CHECK(cf.convergents[k].second == f1);
    CHECK(cf.convergents[k].first == f0);
    Integer next = f0 + f1;
    f0 = f1;
    f1 = next;
  }
  CHECK_THROWS_AS(cf_expand(parse_real("golden", 32), 200), Error);
  try {
    cf_expand(parse_real("golden", 32), 200);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrecisionExhausted);
  }
}

TEST_CASE("sqrt brackets are tight and contain the root") {
  RationalInterval r = sqrt_interval(Rational(2), 64);
  CHECK(r.lo * r.lo <= 2);
  CHECK(r.hi * r.hi >= 2);
  CHECK(r.hi - r.lo <= make_rational(1, Integer(1) << 64));
  CHECK(sqrt_interval(Q(9, 4), 10).is_exact());
  RationalInterval inv = parse_real("isqrt:2", 128);
  CHECK(inv.lo * inv.lo * 2 <= 1);
  CHECK(inv.hi * inv.hi * 2 >= 1);
}

TEST_CASE("1/sqrt2 has quotients 1,2,2,2,...") {
  ContinuedFraction cf = cf_expand(parse_real("isqrt:2"), 40);
  CHECK(cf.partial_quotients[0] == 1);
  for (std::size_t k = 1; k < 40; ++k) CHECK(cf.partial_quotients[k] == 2);
}

TEST_CASE("expansion rejects alpha outside (0,1)") {
  CHECK_THROWS_AS(cf_expand(Rational(0), 3), Error);
  CHECK_THROWS_AS(cf_expand(Rational(1), 3), Error);
  CHECK_THROWS_AS(cf_expand(Q(3, 2), 3), Error);
}

TEST_CASE("property: convergent determinants are +-1 and rationals round-trip") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Rational alpha = random_dyadic_fraction(rng, 120);
    ContinuedFraction cf = cf_expand(alpha, 1000);
    REQUIRE(cf.terminated);
    CHECK(evaluate(cf.partial_quotients) == alpha);
    std::pair<Integer, Integer> prev(0, 1);
    for (std::size_t k = 0; k < cf.convergents.size(); ++k) {
      const auto& c = cf.convergents[k];
      Integer d = det(prev, c);
      CHECK((d == 1 || d == -1));
      if (k > 0) CHECK(c.second > prev.second);
      prev = c;
    }
    CHECK(make_rational(cf.convergents.back().first, cf.convergents.back().second) == alpha);
  }
}

TEST_CASE("noses stretch on the unit fan") {
  LatticeVec a{1, 0}, b{0, 1};
  NosesStretch ns = noses_stretch(a, b, exact_interval(Q(2, 5)));
  CHECK(ns.index == 3);
  CHECK(ns.triangle == BasicTriangle{{2, 1}, {3, 1}});

  NosesStretch first = noses_stretch(a, b, exact_interval(Q(3, 2)));
  CHECK(first.index == 1);
  CHECK(first.triangle == BasicTriangle{{0, 1}, {1, 1}});

  try {
    noses_stretch(a, b, exact_interval(Q(1, 2)));
    FAIL("ray through B_2 must not cross");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoCrossing);
  }
  try {
    noses_stretch(a, b, exact_interval(Q(-1, 2)));
    FAIL("ray outside the angle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoCrossing);
  }
  CHECK_THROWS_AS(noses_stretch({2, 0}, {0, 1}, exact_interval(Q(1, 3))), Error);
}

TEST_CASE("noses stretch index is nonincreasing in alpha") {
  LatticeVec a{1, 0}, b{0, 1};
  std::int64_t last = INT64_MAX;
  for (int j = 1; j <= 400; ++j) {
    Rational alpha = make_rational(2 * j - 1, 800);  // odd numerators avoid 1/i exactly
    if (Rational(1 / alpha).get_den() == 1) continue;
    std::int64_t i = noses_stretch(a, b, exact_interval(alpha)).index;
    CHECK(i <= last);
    last = i;
  }
}

TEST_CASE("property: noses stretch agrees with the walk oracle and is basic and crossing") {
  Rng rng(12);
  int checked = 0;
  while (checked < 400) {
    Rational alpha = random_dyadic_fraction(rng, 40);
    ContinuedFraction cf = cf_expand(alpha, 6);
    if (cf.convergents.size() < 3) continue;
    std::size_t k = static_cast<std::size_t>(uniform_int(rng, 0, cf.convergents.size() - 2));
    LatticeVec a{to_int64(cf.convergents[k].second), to_int64(cf.convergents[k].first)};
    LatticeVec b{to_int64(cf.convergents[k + 1].second), to_int64(cf.convergents[k + 1].first)};
    // Random orientation of the pair: both directions make a basic fan.
    if (rng() & 1) std::swap(a, b);
    if (!ray_crosses(a, b, exact_interval(alpha))) continue;
    NosesStretch ns;
    try {
      ns = noses_stretch(a, b, exact_interval(alpha));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoCrossing);
      continue;
    }
    CHECK(is_basic(ns.triangle));
    CHECK(ray_crosses(ns.triangle.a, ns.triangle.b, exact_interval(alpha)));
    CHECK(ns.index == stretch_index_by_walk(a, b, alpha));
    ++checked;
  }
}

TEST_CASE("suitability metrics") {
  Suitability s = suitability({{1, 0}, {0, 1}});
  CHECK(s.side_ratio == doctest::Approx(1.0));
  CHECK(s.angle == doctest::Approx(M_PI / 2));
  CHECK_FALSE(is_suitable({{1, 0}, {0, 1}}, 0.5));
  CHECK(is_suitable({{10, 1}, {11, 1}}, 0.2));
}

TEST_CASE("1/sqrt2 finds a 0.3-suitable triangle") {
  RationalInterval alpha = parse_real("isqrt:2");
  SuitableSearch r = find_suitable(alpha, 0.3, 1'000'000);
  REQUIRE(r.found);
  const BasicTriangle& t = r.found->triangle;
  CHECK(is_basic(t));
  CHECK(ray_crosses(t.a, t.b, alpha));
  CHECK(r.found->metrics.side_ratio > 0.7);
  CHECK(r.found->metrics.angle < 0.3);
  CHECK(t == BasicTriangle{{3, 2}, {4, 3}});
}

TEST_CASE("golden conjugate stays hard at small bounds") {
  SuitableSearch r = find_suitable(parse_real("golden"), 0.2, 1000);
  CHECK_FALSE(r.found);
  CHECK_FALSE(r.precision_limited);
  CHECK(r.pairs_scanned > 5);
}

TEST_CASE("coarse interval reports the precision limit") {
  SuitableSearch r = find_suitable(parse_real("golden", 16), 0.05, 10'000'000);
  CHECK_FALSE(r.found);
  CHECK(r.precision_limited);
}

TEST_CASE("property: every found triangle is basic, crossing and suitable") {
  Rng rng(13);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    RationalInterval alpha = exact_interval(random_dyadic_fraction(rng, 200));
    SuitableSearch r = find_suitable(alpha, 0.2, 10'000'000);
    if (!r.found) continue;
    ++found;
    const BasicTriangle& t = r.found->triangle;
    CHECK(is_basic(t));
    CHECK(ray_crosses(t.a, t.b, alpha));
    CHECK(is_suitable(t, 0.2));
  }
  CHECK(found >= 190);
}
