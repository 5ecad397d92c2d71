#pragma once

// Arbitrary-precision integers and rationals (GMP-backed).
// Rat is kept canonical: reduced, positive denominator, zero = 0/1.

#include <gmpxx.h>

#include <string>

#include "reflect96/errors.hpp"

namespace reflect96 {

using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Int& n);
std::string to_string(const Rat& q);  // "3", "-3/2", "0"

// Strict parser for the rendering above; throws parse_error.
Rat parse_rat(const std::string& s);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Throws arithmetic_error when q is not integral.
Int to_integer(const Rat& q);

// Throws arithmetic_error on overflow.
long long to_int64(const Int& n);

Int int_pow(const Int& base, unsigned long e);

// Negative exponent inverts; base must then be nonzero.
Rat rat_pow(const Rat& base, long e);

inline Rat make_rat(long num, long den) {
  if (den == 0) throw arithmetic_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace reflect96
