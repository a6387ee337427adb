#pragma once

// Gaussian integers Z[i]: factorization through the norm and divisor
// enumeration. Internal to the root finder.

#include <gmpxx.h>

#include <vector>

namespace specfactor::detail {

struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  mpz_class norm() const { return re * re + im * im; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
};

GaussInt operator*(const GaussInt& a, const GaussInt& b);

/// Returns true and sets q when b divides a exactly.
bool divides(const GaussInt& b, const GaussInt& a, GaussInt& q);

/// Euclidean gcd (defined up to a unit).
GaussInt gcd(GaussInt a, GaussInt b);

/// Prime factorization of a rational integer n > 0: (prime, exponent) pairs.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

/// Gaussian prime factorization of a nonzero a, units dropped.
std::vector<std::pair<GaussInt, unsigned>> factor(const GaussInt& a);

/// One representative of every divisor class of a (divisors up to units).
std::vector<GaussInt> divisors(const GaussInt& a);

}  // namespace specfactor::detail
