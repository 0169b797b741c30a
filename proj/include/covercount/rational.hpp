#pragma once

#include <gmpxx.h>

#include <string>

namespace covercount {

// Exact arithmetic throughout: counts are big integers, invariants are
// rationals kept in lowest terms with positive denominator (GMP maintains
// this canonical form automatically).
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);

// Multinomial-style helper: n! / (n-k)!  (falling factorial), used by
// conjugacy class sizes.  Requires k <= n.
Integer falling_factorial(unsigned long n, unsigned long k);

// "15" or "1/2"; the canonical form GMP keeps means this is unambiguous.
std::string rational_to_string(const Rational& q);

// Inverse of rational_to_string; accepts "num" and "num/den".
Rational parse_rational(const std::string& text);

} // namespace covercount
