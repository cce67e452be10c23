#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace subpowers {

// Exact arithmetic backing for the whole library. Int is an
// arbitrary-precision integer, Rational an always-reduced fraction with
// positive denominator (gmp keeps both invariants through arithmetic).
using Int = mpz_class;
using Rational = mpq_class;

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// base^exp for exponents of either sign; 0 to a negative power is rejected.
inline Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0)
    throw std::domain_error("pow_rational: zero base with negative exponent");
  const unsigned long mag =
      exp < 0 ? -static_cast<unsigned long>(exp) : static_cast<unsigned long>(exp);
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), mag);
  // powers of a canonical fraction are canonical
  if (exp < 0) mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  return r;
}

// a / b when b divides a exactly; anything else signals a kernel bug.
inline Int exact_div(const Int& a, const Int& b, const char* context) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::logic_error(std::string(context) + ": inexact division");
  return a / b;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p/q", or just "p" for integral values
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

}  // namespace subpowers
