#pragma once

#include <gmpxx.h>

#include <string>

namespace urn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact decimal rendering: "p" for integers, "p/q" otherwise (q > 0, gcd 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses the format produced by to_string. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned n);

}  // namespace urn
