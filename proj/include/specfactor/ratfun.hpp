#pragma once

#include <optional>

#include "specfactor/poly.hpp"

namespace specfactor {

/// Reduced rational function num/den over Q(i): gcd(num, den) = 1, den monic,
/// zero stored as 0/1.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(GaussianRational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(long c) : RatFun(GaussianRational(c)) {}               // NOLINT(google-explicit-constructor)
  RatFun(Poly p) : num_(std::move(p)), den_(1) {}               // NOLINT(google-explicit-constructor)
  /// Reduces to canonical form; throws DivisionByZero when den == 0.
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_real() const { return num_.is_real() && den_.is_real(); }
  /// Value of a constant function; throws InvalidArgument otherwise.
  GaussianRational constant_value() const;

  /// f(x), or nullopt at a pole.
  std::optional<GaussianRational> eval(const GaussianRational& x) const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  struct Reduced {};
  RatFun(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Poly num_;
  Poly den_;
};

/// f*(z) = conj(f(1/conj(z))).
RatFun paraconj(const RatFun& f);

/// f(1/z) without conjugation; maps behaviour at infinity to behaviour at 0.
RatFun reciprocal_substitution(const RatFun& f);

/// Order of f at p: k > 0 zero of degree k, k < 0 pole of degree -k.
/// Throws InvalidArgument for f == 0.
int valuation(const RatFun& f, const Point& p);

/// (1 - conj(a) z) / (z - a), or z for a = infinity. Throws CirclePoint for |a| = 1.
RatFun blaschke(const Point& a);

}  // namespace specfactor
