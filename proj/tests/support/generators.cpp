#include "generators.hpp"

#include <algorithm>

namespace specfactor::testing {

long uniform(Rng& rng, long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); }

GaussianRational small_scalar(Rng& rng, long max_num, long max_den, bool complex) {
  auto part = [&]() {
    long num = 0;
    while (num == 0) num = uniform(rng, -max_num, max_num);
    return mpq_class(num, uniform(rng, 1, max_den));
  };
  mpq_class re = part();
  return complex ? GaussianRational(re, part()) : GaussianRational(re);
}

Point off_circle_point(Rng& rng, bool allow_infinity) {
  for (;;) {
    long kind = uniform(rng, 0, 9);
    if (kind == 0 && allow_infinity) return Point::infinity();
    if (kind == 1) return Point(0);
    Point p = small_scalar(rng, 5, 3, kind >= 6);
    if (abs_vs_one(p) != CircleOrder::Equal) return p;
  }
}

std::vector<GaussianRational> nonzero_vector(Rng& rng, std::size_t r) {
  for (;;) {
    std::vector<GaussianRational> v(r);
    bool nonzero = false;
    for (auto& x : v) {
      x = GaussianRational(uniform(rng, -2, 2), rng() % 3 == 0 ? uniform(rng, -2, 2) : 0);
      nonzero = nonzero || !x.is_zero();
    }
    if (nonzero) return v;
  }
}

ElementaryFactor random_elementary(Rng& rng, std::size_t r, bool allow_infinity) {
  return {off_circle_point(rng, allow_infinity), nonzero_vector(rng, r)};
}

RatMat random_full_rank_constant(Rng& rng, std::size_t rows, std::size_t cols) {
  for (;;) {
    std::vector<GaussianRational> v(rows * cols);
    for (auto& x : v) x = GaussianRational(uniform(rng, -3, 3));
    RatMat m = RatMat::constant(rows, cols, v);
    if (normal_rank(m) == std::min(rows, cols)) return m;
  }
}

namespace {

Poly random_poly(Rng& rng, int degree) {
  std::vector<GaussianRational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(GaussianRational(uniform(rng, -2, 2)));
  return Poly(std::move(c));
}

}  // namespace

RatMat random_unimodular(Rng& rng, std::size_t n, int degree) {
  RatMat u = RatMat::identity(n);
  if (n < 2) return u;
  const int ops = static_cast<int>(uniform(rng, 1, 3));
  for (int k = 0; k < ops; ++k) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    RatMat e = RatMat::identity(n);
    e(i, j) = RatFun(random_poly(rng, degree));
    u = e * u;
  }
  return u;
}

RatFun random_entry(Rng& rng, const std::vector<GaussianRational>& pool, std::size_t max_zeros,
                    std::size_t max_poles) {
  Poly num(small_scalar(rng, 3, 2, false)), den(1);
  const auto pick = [&]() { return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))]; };
  const long nz = uniform(rng, 0, static_cast<long>(max_zeros));
  const long np = uniform(rng, 0, static_cast<long>(max_poles));
  for (long k = 0; k < nz; ++k) num *= Poly::linear(pick());
  for (long k = 0; k < np; ++k) den *= Poly::linear(pick());
  return RatFun(num, den);
}

RatMat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, const std::vector<GaussianRational>& pool,
                     std::size_t max_degree) {
  RatMat g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng() % 4 != 0) g(i, j) = random_entry(rng, pool, max_degree, max_degree);
  return g;
}

std::vector<GaussianRational> point_pool(Rng& rng, std::size_t count) {
  std::vector<GaussianRational> pool;
  while (pool.size() < count) {
    GaussianRational p = rng() % 5 == 0 ? GaussianRational(0) : small_scalar(rng, 4, 2, rng() % 3 == 0);
    if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(p);
  }
  return pool;
}

FactorPair random_full_rank_pair(Rng& rng, bool constant_unimodular) {
  const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 3));
  const std::size_t m = static_cast<std::size_t>(uniform(rng, static_cast<long>(r), 3));
  const std::size_t n = static_cast<std::size_t>(uniform(rng, static_cast<long>(r), 3));
  std::vector<GaussianRational> pool = point_pool(rng, 3);

  auto diag = [&]() {
    std::vector<RatFun> d;
    for (std::size_t i = 0; i < r; ++i) {
      RatFun f = random_entry(rng, pool, 2, 2);
      while (constant_unimodular && f.num().degree() < f.den().degree()) f = random_entry(rng, pool, 2, 2);
      d.push_back(f);
    }
    return RatMat::diagonal(d);
  };
  const int udeg = constant_unimodular ? 0 : 1;
  // sequenced explicitly so the draw order does not depend on the compiler
  RatMat k1 = random_full_rank_constant(rng, m, r);
  RatMat dg = diag();
  RatMat u1 = random_unimodular(rng, r, udeg);
  RatMat u2 = random_unimodular(rng, r, udeg);
  RatMat dh = diag();
  RatMat k2 = random_full_rank_constant(rng, r, n);
  return {k1 * dg * u1, u2 * dh * k2};
}

}  // namespace specfactor::testing
