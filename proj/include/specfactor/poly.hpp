#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "specfactor/exactnum.hpp"

namespace specfactor {

/// Dense univariate polynomial over Q(i), coefficients in ascending powers of z.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(std::vector<GaussianRational> coeffs);
  Poly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * z^k
  static Poly monomial(GaussianRational c, std::size_t k);
  static Poly z() { return monomial(1, 1); }
  /// z - root
  static Poly linear(const GaussianRational& root);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// kZeroDegree for the zero polynomial.
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k (zero past the degree).
  GaussianRational coeff(std::size_t k) const;
  const GaussianRational& leading() const;
  bool is_monic() const { return !is_zero() && leading() == GaussianRational(1); }
  bool is_real() const;

  Poly monic() const;
  Poly conj() const;
  Poly derivative() const;
  /// z^n p(1/z) for n = degree(); coefficient reversal.
  Poly reversed() const;
  GaussianRational eval(const GaussianRational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussianRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

/// (quotient, remainder) with p = q*quotient + remainder, deg remainder < deg q.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);

/// Exact quotient; throws InvalidArgument when q does not divide p.
Poly exact_div(const Poly& p, const Poly& q);

/// Monic gcd. gcd(p, 0) = monic(p); gcd(0, 0) throws.
Poly gcd(const Poly& p, const Poly& q);

/// Monic least common multiple of two nonzero polynomials.
Poly lcm(const Poly& p, const Poly& q);

/// Largest k with (z - a)^k | p; always 0 at infinity.
std::size_t multiplicity(const Poly& p, const Point& a);

/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);

struct GaussianRoots {
  /// Distinct roots in Q(i) with multiplicities, in canonical order.
  std::vector<std::pair<GaussianRational, std::size_t>> roots;
  /// Monic part of p with no roots in Q(i).
  Poly cofactor;
};

/// All roots of p in Q(i). p == leading(p) * cofactor * prod (z - r)^m.
GaussianRoots gaussian_roots(const Poly& p);

}  // namespace specfactor
