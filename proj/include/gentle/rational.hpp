#pragma once

#include <gmpxx.h>

#include <string>

namespace gentle {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" text form; integers print without a denominator.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q".  Throws Error(SyntaxError) on malformed input.
Rational parse_rational(const std::string& text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace gentle
