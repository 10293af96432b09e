#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "assoform/errors.hpp"

namespace assoform {

/// Exact rational scalar. GMP keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den", or "num" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "int" or "int/posint" (optional leading sign).
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](std::string_view v, bool allow_sign) {
    if (allow_sign && !v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char c : v)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw ParseError("invalid rational '" + s + "'", 0);
    if (s.front() == '+') s.erase(0, 1);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num, true)) throw ParseError("invalid numerator in '" + s + "'", 0);
  if (!valid_int(den, false)) throw ParseError("invalid denominator in '" + s + "'", slash + 1);
  if (num.front() == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'", slash + 1);
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

/// num/den in canonical form.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational power(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace assoform
