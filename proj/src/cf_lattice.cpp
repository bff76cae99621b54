#include "latcurve/cf_lattice.hpp"

#include <cmath>
#include <string>

#include "latcurve/error.hpp"

namespace latcurve {

namespace {

struct Expansion {
  ContinuedFraction cf;
  bool undetermined = false;
};

Expansion expand(Rational lo, Rational hi, std::size_t max_depth) {
  if (lo > hi) throw Error(ErrorKind::Configuration, "interval bounds out of order");
  if (lo <= 0 || hi >= 1) throw Error(ErrorKind::Configuration, "continued fraction needs 0 < alpha < 1");

  Expansion out;
  Integer p_prev = 1, q_prev = 0, p = 0, q = 1;
  while (out.cf.partial_quotients.size() < max_depth) {
    if (lo == hi && lo == 0) break;
    if (lo <= 0) {
      out.undetermined = true;
      break;
    }
    Integer a = floor(Rational(1 / hi));
    if (a != floor(Rational(1 / lo))) {
      out.undetermined = true;
      break;
    }
    Rational next_lo = 1 / hi - a;
    Rational next_hi = 1 / lo - a;
    lo = std::move(next_lo);
    hi = std::move(next_hi);

    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.cf.partial_quotients.push_back(std::move(a));
    out.cf.convergents.emplace_back(p, q);
  }
  out.cf.terminated = (lo == 0 && hi == 0);
  return out;
}

Rational slope_ratio(LatticeVec a, LatticeVec b, const Rational& alpha) {
  // With r = (1, alpha): B_i x r = b x r + i (a x r), so the sign flips at
  // i = (r x b)/(a x r).
  Rational r_cross_b = Rational(b.y) - alpha * b.x;
  Rational a_cross_r = alpha * a.x - Rational(a.y);
  return r_cross_b / a_cross_r;
}

bool ray_inside(LatticeVec a, LatticeVec b, const Rational& alpha) {
  int orient = sgn(cross(a, b));
  if (orient == 0) return false;
  int s1 = sgn(Rational(alpha * a.x - a.y));  // a x r
  int s2 = sgn(Rational(b.y - alpha * b.x));  // r x b
  return s1 == orient && s2 == orient;
}

std::int64_t checked(const Integer& z) { return to_int64(z); }

}  // namespace

RationalInterval exact_interval(const Rational& value) { return {value, value}; }

RationalInterval sqrt_interval(const Rational& x, unsigned bits) {
  if (x < 0) throw Error(ErrorKind::Configuration, "square root of a negative number");
  // sqrt(p/q) = sqrt(p*q)/q; scale by 2^bits before taking the integer root.
  Integer scale = Integer(1) << bits;
  Integer radicand = x.get_num() * x.get_den() * scale * scale;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
  Integer den = x.get_den() * scale;
  RationalInterval out{make_rational(s, den), make_rational(s, den)};
  if (s * s != radicand) out.hi = make_rational(s + 1, den);
  return out;
}

RationalInterval parse_real(std::string_view text, unsigned bits) {
  auto starts = [&](std::string_view prefix) { return text.substr(0, prefix.size()) == prefix; };
  if (text == "golden") {
    RationalInterval r5 = sqrt_interval(Rational(5), bits);
    return {(r5.lo - 1) / 2, (r5.hi - 1) / 2};
  }
  if (starts("sqrt:")) return sqrt_interval(parse_rational(text.substr(5)), bits);
  if (starts("isqrt:")) {
    RationalInterval r = sqrt_interval(parse_rational(text.substr(6)), bits);
    if (r.lo == 0) throw Error(ErrorKind::Configuration, "isqrt of zero");
    return {1 / r.hi, 1 / r.lo};
  }
  return exact_interval(parse_rational(text));
}

ContinuedFraction cf_expand(const Rational& alpha, std::size_t depth) { return expand(alpha, alpha, depth).cf; }

ContinuedFraction cf_expand(const RationalInterval& alpha, std::size_t depth) {
  Expansion e = expand(alpha.lo, alpha.hi, depth);
  if (e.undetermined && e.cf.partial_quotients.size() < depth) {
    throw Error(ErrorKind::PrecisionExhausted,
                "interval determines only " + std::to_string(e.cf.partial_quotients.size()) +
                    " partial quotients, " + std::to_string(depth) + " requested");
  }
  return e.cf;
}

ContinuedFraction cf_expand_determined(const RationalInterval& alpha, std::size_t max_depth) {
  return expand(alpha.lo, alpha.hi, max_depth).cf;
}

bool is_basic(const BasicTriangle& t) {
  i128 c = cross_i128(t.a, t.b);
  return c == 1 || c == -1;
}

bool ray_crosses(LatticeVec a, LatticeVec b, const RationalInterval& alpha) {
  return ray_inside(a, b, alpha.lo) && ray_inside(a, b, alpha.hi);
}

NosesStretch noses_stretch(LatticeVec a, LatticeVec b, const RationalInterval& alpha) {
  if (!is_basic({a, b})) throw Error(ErrorKind::Configuration, "noses stretch needs a basic pair");
  bool in_lo = ray_inside(a, b, alpha.lo);
  bool in_hi = ray_inside(a, b, alpha.hi);
  if (!in_lo && !in_hi) throw Error(ErrorKind::NoCrossing, "ray lies outside the angle aOb");
  if (!in_lo || !in_hi) throw Error(ErrorKind::PrecisionExhausted, "interval straddles a side of the angle");

  Rational t_lo = slope_ratio(a, b, alpha.lo);
  Rational t_hi = slope_ratio(a, b, alpha.hi);
  bool lo_int = t_lo.get_den() == 1;
  bool hi_int = t_hi.get_den() == 1;
  if (alpha.is_exact() && lo_int) {
    throw Error(ErrorKind::NoCrossing, "ray passes through B_" + t_lo.get_num().get_str());
  }
  if (lo_int || hi_int || floor(t_lo) != floor(t_hi)) {
    throw Error(ErrorKind::PrecisionExhausted, "interval straddles a vertex of the fan");
  }
  Integer i = floor(t_lo) + 1;
  Integer prev_x = Integer(b.x) + (i - 1) * a.x;
  Integer prev_y = Integer(b.y) + (i - 1) * a.y;
  LatticeVec prev{checked(prev_x), checked(prev_y)};
  LatticeVec next{checked(prev_x + a.x), checked(prev_y + a.y)};
  return {{prev, next}, checked(i)};
}

Suitability suitability(const BasicTriangle& t) {
  double la = std::hypot(static_cast<double>(t.a.x), static_cast<double>(t.a.y));
  double lb = std::hypot(static_cast<double>(t.b.x), static_cast<double>(t.b.y));
  double c = static_cast<double>(cross_i128(t.a, t.b));
  double d = static_cast<double>(t.a.x) * static_cast<double>(t.b.x) +
             static_cast<double>(t.a.y) * static_cast<double>(t.b.y);
  return {std::min(la, lb) / std::max(la, lb), std::atan2(std::abs(c), d)};
}

bool is_suitable(const BasicTriangle& t, double eps) {
  Suitability s = suitability(t);
  return s.side_ratio > 1 - eps && s.angle < eps;
}

SuitableSearch find_suitable(const RationalInterval& alpha, double eps, std::int64_t bound) {
  if (!(eps > 0 && eps < 1)) throw Error(ErrorKind::Configuration, "eps must lie in (0, 1)");
  if (bound < 1) throw Error(ErrorKind::Configuration, "search bound must be positive");

  // q_k grows at least like the Fibonacci numbers, so 100 quotients pass any
  // 64-bit bound.
  Expansion e = expand(alpha.lo, alpha.hi, 100);
  SuitableSearch out;
  LatticeVec prev{1, 0};
  std::size_t k = 0;
  for (; k < e.cf.convergents.size(); ++k) {
    const auto& [p, q] = e.cf.convergents[k];
    if (q > bound) return out;
    LatticeVec cur{checked(q), checked(p)};
    LatticeVec a = prev;
    prev = cur;
    if (!ray_crosses(a, cur, alpha)) continue;  // ray through the convergent itself
    ++out.pairs_scanned;
    NosesStretch ns;
    try {
      ns = noses_stretch(a, cur, alpha);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::PrecisionExhausted) {
        out.precision_limited = true;
        return out;
      }
      if (err.kind() == ErrorKind::Overflow) return out;
      throw;
    }
    Suitability s = suitability(ns.triangle);
    if (s.side_ratio > 1 - eps && s.angle < eps) {
      out.found = SuitableTriangle{ns.triangle, k, ns.index, s};
      return out;
    }
  }
  out.precision_limited = e.undetermined;
  return out;
}

}  // namespace latcurve
