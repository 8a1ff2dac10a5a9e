#ifndef NOETHER_RATIONAL_HPP
#define NOETHER_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace noether {

// Exact rational coefficients. GMP does the heavy lifting; this header only
// adds the few helpers the rest of the library needs.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "a" or "a/b" with optional sign, as produced by to_string.
inline Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw ParseError("invalid rational literal '" + text + "'", 0);
  q.canonicalize();
  return q;
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

// n (n-1) ... (n-k+1), the coefficient picked up by k-fold differentiation.
inline Rational falling_factorial(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= static_cast<int>(n - i);
  return r;
}

}  // namespace noether

#endif
