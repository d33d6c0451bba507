#pragma once

#include <gmpxx.h>

#include <string>

namespace otwb {

// Exact rational coefficient field.  mpq_class keeps values canonical
// (lowest terms, positive denominator), which is the invariant every
// module here relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace otwb
