#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sigsurf {

// Exact arithmetic backing the invariant layer.  alpha and r grow like n^2,
// the commutator sum like n^4, and scans reach n ~ 200, so everything that
// accumulates is kept in arbitrary precision.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonical form: gcd(num, den) = 1, den > 0, "p/q" with "/1" omitted.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts both "p" and "p/q"; canonicalizes the result.
Rational rational_from_string(std::string_view text);
Integer integer_from_string(std::string_view text);

double to_double(const Rational& value);

}  // namespace sigsurf
