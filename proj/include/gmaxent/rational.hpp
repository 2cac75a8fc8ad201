#pragma once

#include <gmpxx.h>

#include <string>

#include "gmaxent/errors.hpp"

namespace gmaxent {

// Exact rational scalar. All group/lattice/polynomial arithmetic runs on
// these; doubles only appear at the solver boundary.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || (r.get_den() == 0))
    throw ValidationError("bad rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational pow_rational(Rational base, unsigned e) {
  Rational out(1);
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

}  // namespace gmaxent
