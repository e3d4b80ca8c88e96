#pragma once

// Exact integer/rational helpers shared by every module.

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace movcone {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_perfect_square(const Integer& x) {
  return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

/// floor(sqrt(x)) for x >= 0.
inline Integer isqrt(const Integer& x) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
  return root;
}

inline Integer ceil_sqrt(const Integer& x) {
  Integer root = isqrt(x);
  if (root * root != x) ++root;
  return root;
}

inline Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer numerator_of(const Rational& q) { return q.get_num(); }
inline Integer denominator_of(const Rational& q) { return q.get_den(); }

inline std::int64_t to_int64(const Integer& x) {
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_fraction_string(const Rational& q) { return q.get_str(); }

inline Integer pow10(unsigned places) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, places);
  return p;
}

namespace detail {

inline std::string format_scaled(Integer scaled, unsigned places) {
  bool negative = sgn(scaled) < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

}  // namespace detail

/// Decimal rendering rounded half-to-even at `places` digits. Display only.
inline std::string to_decimal(const Rational& q, unsigned places = 3) {
  Integer scale = pow10(places);
  Integer num = q.get_num() * scale;
  Integer den = q.get_den();
  Integer floor_q = floor_div(num, den);
  Integer twice_rem = 2 * (num - floor_q * den);
  if (twice_rem > den || (twice_rem == den && mpz_odd_p(floor_q.get_mpz_t()))) ++floor_q;
  return detail::format_scaled(floor_q, places);
}

/// sqrt(n) rounded half-to-even at `places` digits. An irrational root never ties.
inline std::string sqrt_decimal(const Integer& n, unsigned places = 3) {
  Integer scale = pow10(places);
  Integer target = n * scale * scale;
  Integer root = isqrt(target);
  Integer upper = 2 * root + 1;
  if (upper * upper < 4 * target) ++root;
  return detail::format_scaled(root, places);
}

/// Orders the rational `q` against sqrt(x) for x >= 0, without leaving Q.
inline std::strong_ordering compare_with_sqrt(const Rational& q, const Rational& x) {
  if (sgn(q) < 0) return std::strong_ordering::less;
  if (sgn(x) == 0) return sgn(q) == 0 ? std::strong_ordering::equal : std::strong_ordering::greater;
  Rational sq = q * q;
  int c = cmp(sq, x);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace movcone
