#pragma once

// Rational matrix-valued functions over Q(i) and their Smith-McMillan
// structure.
//
// Structural queries are exact. Determinantal divisors are formed from all
// k x k minors, so cost grows combinatorially with size; the intended scale is
// dimensions up to 6 and entry degrees up to about 12.

#include <cstddef>
#include <vector>

#include "specfactor/ratfun.hpp"

namespace specfactor {

class RatMat {
 public:
  RatMat() = default;
  /// rows x cols zero matrix.
  RatMat(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws DimensionMismatch on a size mismatch.
  RatMat(std::size_t rows, std::size_t cols, std::vector<RatFun> entries);

  static RatMat identity(std::size_t n);
  static RatMat diagonal(const std::vector<RatFun>& diag);
  /// Constant matrix from row-major scalars.
  static RatMat constant(std::size_t rows, std::size_t cols, const std::vector<GaussianRational>& values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const RatFun& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  RatFun& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<RatFun>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_constant() const;
  bool is_real() const;

  RatMat transpose() const;
  RatMat operator-() const;
  RatMat& operator+=(const RatMat& o);
  RatMat& operator-=(const RatMat& o);

  friend RatMat operator+(RatMat a, const RatMat& b) { return a += b; }
  friend RatMat operator-(RatMat a, const RatMat& b) { return a -= b; }
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const RatFun& f, const RatMat& a);
  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFun> entries_;
};

/// Dense polynomial matrix, used for the numerator N in G = N / d.
struct PolyMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Poly> entries;

  PolyMat() = default;
  PolyMat(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  static PolyMat identity(std::size_t n);

  Poly& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// G = numerator / denominator with denominator the monic lcm of the entry
/// denominators.
struct ClearedDenominator {
  PolyMat numerator;
  Poly denominator;
};
ClearedDenominator clear_denominators(const RatMat& g);

RatMat to_ratmat(const PolyMat& p);

/// Smith-McMillan diagonal eps_i / psi_i, i = 1..rank.
struct SMStructure {
  std::size_t rank = 0;
  std::vector<Poly> eps;
  std::vector<Poly> psi;
};

/// Paraconjugate transpose G*(z) = [G(1/conj z)]^H.
RatMat paraconj_transpose(const RatMat& g);

/// Entrywise G(1/z).
RatMat reciprocal_substitution(const RatMat& g);

/// Rank over the field Q(i)(z), by fraction-free elimination on the cleared
/// numerator.
std::size_t normal_rank(const RatMat& g);

RatFun det(const RatMat& g);

/// Inverse of a square nonsingular matrix; throws RankDeficient otherwise.
RatMat inverse(const RatMat& g);

/// Smith-McMillan diagonal via determinantal divisors of the cleared
/// numerator. Throws InvalidArgument for the zero matrix.
SMStructure sm_structure(const RatMat& g);

/// Finite and infinite Smith-McMillan data of a matrix, computed once and
/// queried many times.
class PoleZeroProfile {
 public:
  explicit PoleZeroProfile(const RatMat& g);

  std::size_t rank() const { return finite_.rank; }
  const SMStructure& finite() const { return finite_; }
  /// Smith-McMillan structure of G(1/lambda).
  const SMStructure& at_infinity() const { return infinite_; }

  std::size_t pole_degree(const Point& p) const;
  std::size_t zero_degree(const Point& p) const;

  /// Distinct poles, infinity included, in canonical order. Throws
  /// NonGaussianRoot when a finite pole lies outside Q(i).
  std::vector<Point> poles() const;
  /// Distinct zeros, same conventions as poles().
  std::vector<Point> zeros() const;

  /// Sum of pole degrees over all poles, infinity included.
  std::size_t mcmillan_degree() const;

 private:
  SMStructure finite_;
  SMStructure infinite_;
};

std::size_t pole_degree(const RatMat& g, const Point& p);
std::size_t zero_degree(const RatMat& g, const Point& p);
std::size_t mcmillan_degree(const RatMat& g);

/// left * n * right == diag(invariants) (padded with zeros), with left and
/// right unimodular and every invariant monic, each dividing the next.
struct SmithDecomposition {
  PolyMat left;
  PolyMat right;
  std::vector<Poly> invariants;
};
SmithDecomposition smith_decomposition(const PolyMat& n);

/// Right inverse of a full-row-rank G whose poles are exactly the zeros of G,
/// with matching degrees. Square inputs are inverted. Otherwise the inverse is
/// built from a Smith decomposition of the cleared numerator, which is exact at
/// every finite point; when that leaves surplus poles at infinity, inverses of
/// the form E (G E)^{-1} over column selections E are tried and the first one
/// that is also minimal at infinity is returned.
RatMat minimal_right_inverse(const RatMat& g);

}  // namespace specfactor
