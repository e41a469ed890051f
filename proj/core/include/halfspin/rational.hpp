#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace halfspin {

// All scalar arithmetic is exact; Rational is GMP-backed and always canonical.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal digits). Throws std::invalid_argument.
Rational rational_from_string(const std::string& s);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

/// Exact square test over Q. On success optionally yields the nonnegative root.
bool rational_is_square(const Rational& q, Rational* root = nullptr);

}  // namespace halfspin
