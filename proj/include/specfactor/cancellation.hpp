#pragma once

// Pole, zero and zero-pole cancellations in a product G(z) H(z), judged
// against degree additivity at a single point.

#include <cstddef>
#include <vector>

#include "specfactor/ratmat.hpp"

namespace specfactor {

struct CancellationReport {
  Point point;
  std::size_t dp_G = 0, dp_H = 0, dp_GH = 0;
  std::size_t dz_G = 0, dz_H = 0, dz_GH = 0;
  bool pole_cancel = false;
  bool zero_cancel = false;
  bool zero_pole_cancel = false;
};

/// Holds the pole/zero profiles of G, H and GH so that many points can be
/// probed without recomputing Smith-McMillan forms.
class ProductAnalysis {
 public:
  /// Throws DimensionMismatch, or InvalidArgument when G, H or GH is zero.
  ProductAnalysis(const RatMat& g, const RatMat& h);

  CancellationReport report(const Point& p) const;

  /// Distinct poles and zeros of G, H and GH together with infinity, in
  /// canonical order. Cancellations can only happen here.
  std::vector<Point> support() const;

  /// rank G = cols G = rows H = rank H.
  bool full_rank_hypothesis() const { return full_rank_; }

  const PoleZeroProfile& g() const { return g_; }
  const PoleZeroProfile& h() const { return h_; }
  const PoleZeroProfile& gh() const { return gh_; }

 private:
  PoleZeroProfile g_, h_, gh_;
  bool full_rank_;
};

CancellationReport analyze_product(const RatMat& g, const RatMat& h, const Point& p);

/// A pole or zero cancellation at p is a zero-pole cancellation. Throws
/// HypothesisViolated unless the full-rank hypothesis holds.
bool check_lemma2(const RatMat& g, const RatMat& h, const Point& p);
bool check_lemma2(const ProductAnalysis& a, const Point& p);

/// dp_GH - dp_G - dp_H == dz_GH - dz_G - dz_H. Same hypothesis as above.
bool check_degree_identity(const RatMat& g, const RatMat& h, const Point& p);
bool check_degree_identity(const ProductAnalysis& a, const Point& p);

/// Pole degrees add at p when neither factor has a zero there. Throws
/// HypothesisViolated when a factor has a zero at p or ranks are deficient.
bool check_lemma3(const RatMat& g, const RatMat& h, const Point& p);
bool check_lemma3(const ProductAnalysis& a, const Point& p);

std::vector<Point> cancellation_support(const RatMat& g, const RatMat& h);

}  // namespace specfactor
