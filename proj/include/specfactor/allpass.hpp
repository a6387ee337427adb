#pragma once

// Para-unitary (all-pass) rational matrices and their Blaschke-Potapov
// factorization into degree-one elementary factors.

#include <cstddef>
#include <vector>

#include "specfactor/ratmat.hpp"

namespace specfactor {

/// I + (b_alpha(z) - 1) v v* / (v* v). v is kept unnormalized so the
/// projection stays inside Q(i).
struct ElementaryFactor {
  Point alpha;
  std::vector<GaussianRational> v;
};

/// Throws CirclePoint for |alpha| = 1 and InvalidArgument for v = 0.
RatMat make_elementary(const Point& alpha, const std::vector<GaussianRational>& v);
inline RatMat make_elementary(const ElementaryFactor& f) { return make_elementary(f.alpha, f.v); }

/// G*(z) G(z) = G(z) G*(z) = I. Throws DimensionMismatch for non-square input.
bool is_paraunitary(const RatMat& v);

/// G = G*. Throws DimensionMismatch for non-square input.
bool is_parahermitian(const RatMat& g);

/// constant * U_1(z) * ... * U_n(z), with constant unitary.
struct AllPassFactorization {
  RatMat constant;
  std::vector<ElementaryFactor> factors;
};

RatMat reconstruct(const AllPassFactorization& f);

std::size_t degree_of_factorization(const AllPassFactorization& f);

/// Minimal factorization of a para-unitary matrix with poles in Q(i) and at
/// infinity. Poles are peeled one at a time from the left, smallest |alpha|
/// first and infinity last; each step takes the direction from the leading
/// Laurent coefficient at the pole and must lower the McMillan degree by one.
///
/// Throws NotParaUnitary, NonGaussianRoot, or PeelFailure.
AllPassFactorization potapov_factorize(const RatMat& v);

/// Leading coefficient of the Laurent expansion of g at p, and its order:
/// g = (z - p)^{-order} (coefficient + ...) or g = z^{order} (coefficient + ...)
/// at infinity. Order is negative when g is analytic at p.
struct LaurentLeading {
  int order = 0;
  std::vector<std::vector<GaussianRational>> coefficient;
};
LaurentLeading laurent_leading(const RatMat& g, const Point& p);

/// Conjugate transpose of a constant matrix.
RatMat conjugate_transpose(const RatMat& c);

}  // namespace specfactor
