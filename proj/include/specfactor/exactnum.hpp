#pragma once

// Exact scalars over the Gaussian rationals Q(i) and points of the extended
// complex plane.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace specfactor {

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// |a|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline GaussianRational conj(const GaussianRational& a) { return a.conj(); }

/// Total order used for reproducible sorting: by |a|^2, then re, then im.
std::strong_ordering canonical_order(const GaussianRational& a, const GaussianRational& b);

std::string to_string(const GaussianRational& a);

/// Parses "a/b+c/d*i" style text; whitespace is ignored. Also accepts a bare
/// "i" term and omitted real or imaginary parts.
GaussianRational parse_scalar(std::string_view text);

/// A point of the extended complex plane: a Gaussian rational or infinity.
class Point {
 public:
  Point() = default;
  Point(GaussianRational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Point(long value) : value_(value) {}                          // NOLINT(google-explicit-constructor)

  static Point infinity() {
    Point p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Throws InvalidArgument for the point at infinity.
  const GaussianRational& value() const;

  friend bool operator==(const Point& a, const Point& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  GaussianRational value_;
  bool infinite_ = false;
};

/// Finite points in canonical_order, infinity last.
std::strong_ordering canonical_order(const Point& a, const Point& b);

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return canonical_order(a, b) < 0; }
};

std::string to_string(const Point& p);
Point parse_point(std::string_view text);

enum class CircleOrder { Less, Equal, Greater };

/// Compares |p| with 1 exactly; infinity is Greater.
CircleOrder abs_vs_one(const Point& p);

/// z -> 1/z with 0 <-> infinity.
Point symplectic_pair(const Point& p);

/// z -> 1/conj(z) with 0 <-> infinity.
Point conj_pair(const Point& p);

}  // namespace specfactor
