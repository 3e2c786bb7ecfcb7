#pragma once

#include <gmpxx.h>

#include <string>

namespace ehz {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a", "-a" or "a/b"; the result is canonicalized.
Rational parse_rational(const std::string& s);

// Integer power with possibly negative exponent.
Rational rpow(const Rational& base, long e);
Integer ipow(const Integer& base, unsigned long e);

Integer floor_div(const Rational& x);
Integer ceil_div(const Rational& x);

inline std::string to_string(const Rational& r) { return r.get_str(); }

long binomial(long n, long k);

}  // namespace ehz
