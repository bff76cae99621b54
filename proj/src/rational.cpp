#include "latcurve/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

#include "latcurve/error.hpp"

namespace latcurve {

namespace {

Rational parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    const std::string exp_text(text.substr(e + 1));
    if (exp_text.empty()) throw Error(ErrorKind::Configuration, "bad number: " + std::string(text));
    std::size_t used = 0;
    exponent = std::stol(exp_text, &used);
    if (used != exp_text.size()) throw Error(ErrorKind::Configuration, "bad number: " + std::string(text));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char ch : mantissa) {
    if (ch == '.') {
      if (seen_point) throw Error(ErrorKind::Configuration, "bad number: " + std::string(text));
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++frac_digits;
    } else {
      throw Error(ErrorKind::Configuration, "bad number: " + std::string(text));
    }
  }
  if (digits.empty()) throw Error(ErrorKind::Configuration, "bad number: " + std::string(text));
  Integer num(digits, 10);
  Integer den = 1;
  const long shift = exponent - frac_digits;
  Integer ten = 10;
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0) {
    num *= power;
  } else {
    den = power;
  }
  Rational out(negative ? Integer(-num) : num, den);
  out.canonicalize();
  return out;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::Configuration, "zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::Configuration, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(text.substr(0, slash));
    const Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::Configuration, "zero denominator: " + std::string(text));
    return num / den;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::Configuration, "non-finite value");
  Rational out;
  mpq_set_d(out.get_mpq_t(), value);
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) {
    throw Error(ErrorKind::Overflow, "integer does not fit in 64 bits: " + z.get_str());
  }
  return z.get_si();
}

i128 to_i128(const Integer& z) {
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > 125) {
    throw Error(ErrorKind::Overflow, "integer does not fit in 128 bits: " + z.get_str());
  }
  Integer mag = abs(z);
  i128 out = 0;
  const Integer low_mask = (Integer(1) << 62) - 1;
  int shift = 0;
  while (mag != 0) {
    const Integer part = mag & low_mask;
    out |= static_cast<i128>(part.get_ui()) << shift;
    mag >>= 62;
    shift += 62;
  }
  return sgn(z) < 0 ? -out : out;
}

Integer from_i128(i128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  const auto hi = static_cast<unsigned long>(mag >> 64);
  const auto lo = static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL);
  Integer out = Integer(hi);
  out <<= 64;
  out += Integer(lo);
  return negative ? Integer(-out) : out;
}

Integer floor_cbrt(const Rational& x) {
  if (sgn(x) < 0) throw Error(ErrorKind::Configuration, "cube root of negative value");
  const Integer n = floor(x);
  Integer root;
  mpz_root(root.get_mpz_t(), n.get_mpz_t(), 3);
  return root;
}

Integer ceil_cbrt(const Rational& x) {
  Integer root = floor_cbrt(x);
  if (Rational(root * root * root) < x) root += 1;
  return root;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace latcurve
