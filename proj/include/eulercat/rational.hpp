#pragma once

#include <gmpxx.h>

#include <string>

namespace eulercat {

// Exact scalars. mpq_class keeps every value reduced (gcd 1) with a
// positive denominator, which is the canonical form all serialized
// output relies on.
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace eulercat
