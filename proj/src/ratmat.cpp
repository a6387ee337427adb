#include "specfactor/ratmat.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "specfactor/error.hpp"

namespace specfactor {

RatMat::RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMat::RatMat(std::size_t rows, std::size_t cols, std::vector<RatFun> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match matrix dimensions");
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFun(1);
  return m;
}

RatMat RatMat::diagonal(const std::vector<RatFun>& diag) {
  RatMat m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RatMat RatMat::constant(std::size_t rows, std::size_t cols, const std::vector<GaussianRational>& values) {
  if (values.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "constant matrix size mismatch");
  std::vector<RatFun> entries(values.begin(), values.end());
  return RatMat(rows, cols, std::move(entries));
}

bool RatMat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const RatFun& f) { return f.is_zero(); });
}

bool RatMat::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const RatFun& f) { return f.is_constant(); });
}

bool RatMat::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const RatFun& f) { return f.is_real(); });
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMat RatMat::operator-() const {
  RatMat out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

RatMat& RatMat::operator+=(const RatMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

RatMat& RatMat::operator-=(const RatMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product inner dimension mismatch");
  RatMat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RatFun acc;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const RatFun& x = a(i, k);
        const RatFun& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

RatMat operator*(const RatFun& f, const RatMat& a) {
  RatMat out = a;
  for (auto& e : out.entries_) e *= f;
  return out;
}

PolyMat PolyMat::identity(std::size_t n) {
  PolyMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(1);
  return m;
}

ClearedDenominator clear_denominators(const RatMat& g) {
  Poly d(1);
  for (const auto& e : g.entries())
    if (e.den().degree() > 0) d = lcm(d, e.den());
  PolyMat n(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const RatFun& e = g(i, j);
      if (!e.is_zero()) n(i, j) = e.num() * exact_div(d, e.den());
    }
  return {std::move(n), std::move(d)};
}

RatMat to_ratmat(const PolyMat& p) {
  std::vector<RatFun> entries(p.entries.begin(), p.entries.end());
  return RatMat(p.rows, p.cols, std::move(entries));
}

RatMat paraconj_transpose(const RatMat& g) {
  RatMat t(g.cols(), g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) t(j, i) = paraconj(g(i, j));
  return t;
}

RatMat reciprocal_substitution(const RatMat& g) {
  RatMat out(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = reciprocal_substitution(g(i, j));
  return out;
}

namespace {

struct BareissResult {
  std::size_t rank = 0;
  Poly last_pivot;
  bool odd_swaps = false;
};

// Fraction-free elimination over Q(i)[z]; every division is exact.
BareissResult bareiss(PolyMat m) {
  BareissResult out;
  Poly prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(pivot, j), m(row, j));
      out.odd_swaps = !out.odd_swaps;
    }
    for (std::size_t i = row + 1; i < m.rows; ++i) {
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        Poly v = m(row, col) * m(i, j) - m(i, col) * m(row, j);
        m(i, j) = prev.degree() == 0 && prev.is_monic() ? std::move(v) : exact_div(v, prev);
      }
      m(i, col) = Poly();
    }
    prev = m(row, col);
    ++row;
  }
  out.rank = row;
  out.last_pivot = prev;
  return out;
}

using Mask = std::uint32_t;

std::vector<Mask> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == k) out.push_back(m);
  return out;
}

struct MaskPairHash {
  std::size_t operator()(const std::pair<Mask, Mask>& p) const { return (std::size_t(p.first) << 32) ^ p.second; }
};

// Determinantal divisors D_1..D_rank of a polynomial matrix.
std::vector<Poly> determinantal_divisors(const PolyMat& n) {
  if (n.rows > 20 || n.cols > 20) throw Error(ErrorCode::InvalidArgument, "matrix too large for minor enumeration");
  std::vector<Poly> divisors;
  std::unordered_map<std::pair<Mask, Mask>, Poly, MaskPairHash> prev, cur;
  prev[{0, 0}] = Poly(1);
  const std::size_t kmax = std::min(n.rows, n.cols);
  for (std::size_t k = 1; k <= kmax; ++k) {
    cur.clear();
    Poly g;
    for (Mask rs : subsets_of_size(n.rows, k)) {
      const std::size_t r0 = static_cast<std::size_t>(std::countr_zero(rs));
      const Mask rest = rs & (rs - 1);
      for (Mask cs : subsets_of_size(n.cols, k)) {
        Poly minor;
        int sign = 1;
        for (Mask bits = cs; bits != 0; bits &= bits - 1, sign = -sign) {
          const std::size_t c = static_cast<std::size_t>(std::countr_zero(bits));
          const Poly& a = n(r0, c);
          if (a.is_zero()) continue;
          auto it = prev.find({rest, cs & ~(Mask(1) << c)});
          if (it == prev.end()) continue;
          Poly term = a * it->second;
          if (sign > 0)
            minor += term;
          else
            minor -= term;
        }
        if (minor.is_zero()) continue;
        if (g.degree() != 0) g = g.is_zero() ? minor.monic() : gcd(g, minor);
        cur.emplace(std::make_pair(rs, cs), std::move(minor));
      }
    }
    if (cur.empty()) break;
    divisors.push_back(std::move(g));
    std::swap(prev, cur);
  }
  return divisors;
}

}  // namespace

std::size_t normal_rank(const RatMat& g) {
  if (g.rows() == 0 || g.cols() == 0) return 0;
  return bareiss(clear_denominators(g).numerator).rank;
}

RatFun det(const RatMat& g) {
  if (!g.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (g.rows() == 0) return RatFun(1);
  auto [n, d] = clear_denominators(g);
  BareissResult b = bareiss(n);
  if (b.rank < g.rows()) return RatFun();
  Poly dn(1);
  for (std::size_t i = 0; i < g.rows(); ++i) dn *= d;
  RatFun out(b.last_pivot, dn);
  return b.odd_swaps ? -out : out;
}

RatMat inverse(const RatMat& g) {
  if (!g.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = g.rows();
  RatMat a = g;
  RatMat inv = RatMat::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::RankDeficient, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    RatFun p = RatFun(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      RatFun f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

SMStructure sm_structure(const RatMat& g) {
  auto [n, d] = clear_denominators(g);
  std::vector<Poly> divisors = determinantal_divisors(n);
  if (divisors.empty()) throw Error(ErrorCode::InvalidArgument, "Smith-McMillan form of the zero matrix");
  SMStructure out;
  out.rank = divisors.size();
  Poly prev(1);
  for (const Poly& dk : divisors) {
    Poly invariant = exact_div(dk, prev);
    Poly common = gcd(invariant, d);
    out.eps.push_back(exact_div(invariant, common).monic());
    out.psi.push_back(exact_div(d, common).monic());
    prev = dk;
  }
  return out;
}

PoleZeroProfile::PoleZeroProfile(const RatMat& g)
    : finite_(sm_structure(g)), infinite_(sm_structure(reciprocal_substitution(g))) {}

namespace {

std::size_t sum_multiplicity(const std::vector<Poly>& polys, const Point& p) {
  std::size_t total = 0;
  for (const auto& q : polys) total += multiplicity(q, p);
  return total;
}

std::vector<Point> enumerate_roots(const Poly& p, const char* what) {
  GaussianRoots r = gaussian_roots(p);
  if (r.cofactor.degree() > 0)
    throw Error(ErrorCode::NonGaussianRoot, std::string(what) + " outside Q(i): unresolved factor of degree " +
                                                std::to_string(r.cofactor.degree()));
  std::vector<Point> out;
  for (auto& [root, m] : r.roots) out.emplace_back(root);
  return out;
}

}  // namespace

std::size_t PoleZeroProfile::pole_degree(const Point& p) const {
  if (p.is_infinite()) return sum_multiplicity(infinite_.psi, GaussianRational(0));
  return sum_multiplicity(finite_.psi, p);
}

std::size_t PoleZeroProfile::zero_degree(const Point& p) const {
  if (p.is_infinite()) return sum_multiplicity(infinite_.eps, GaussianRational(0));
  return sum_multiplicity(finite_.eps, p);
}

std::vector<Point> PoleZeroProfile::poles() const {
  // psi_1 is divisible by every psi_i
  std::vector<Point> out = enumerate_roots(finite_.psi.front(), "pole");
  if (pole_degree(Point::infinity()) > 0) out.push_back(Point::infinity());
  return out;
}

std::vector<Point> PoleZeroProfile::zeros() const {
  std::vector<Point> out = enumerate_roots(finite_.eps.back(), "zero");
  if (zero_degree(Point::infinity()) > 0) out.push_back(Point::infinity());
  return out;
}

std::size_t PoleZeroProfile::mcmillan_degree() const {
  std::size_t total = 0;
  for (const auto& p : poles()) total += pole_degree(p);
  return total;
}

std::size_t pole_degree(const RatMat& g, const Point& p) {
  if (p.is_infinite()) return PoleZeroProfile(g).pole_degree(p);
  return sum_multiplicity(sm_structure(g).psi, p);
}

std::size_t zero_degree(const RatMat& g, const Point& p) {
  if (p.is_infinite()) return PoleZeroProfile(g).zero_degree(p);
  return sum_multiplicity(sm_structure(g).eps, p);
}

std::size_t mcmillan_degree(const RatMat& g) { return PoleZeroProfile(g).mcmillan_degree(); }

SmithDecomposition smith_decomposition(const PolyMat& n) {
  PolyMat s = n;
  PolyMat left = PolyMat::identity(n.rows);
  PolyMat right = PolyMat::identity(n.cols);
  std::vector<Poly> invariants;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < s.cols; ++j) std::swap(s(a, j), s(b, j));
    for (std::size_t j = 0; j < left.cols; ++j) std::swap(left(a, j), left(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < s.rows; ++i) std::swap(s(i, a), s(i, b));
    for (std::size_t i = 0; i < right.rows; ++i) std::swap(right(i, a), right(i, b));
  };
  // row_i += q * row_t
  auto add_row = [&](std::size_t i, std::size_t t, const Poly& q) {
    for (std::size_t j = 0; j < s.cols; ++j)
      if (!s(t, j).is_zero()) s(i, j) += q * s(t, j);
    for (std::size_t j = 0; j < left.cols; ++j)
      if (!left(t, j).is_zero()) left(i, j) += q * left(t, j);
  };
  // col_j += q * col_t
  auto add_col = [&](std::size_t j, std::size_t t, const Poly& q) {
    for (std::size_t i = 0; i < s.rows; ++i)
      if (!s(i, t).is_zero()) s(i, j) += s(i, t) * q;
    for (std::size_t i = 0; i < right.rows; ++i)
      if (!right(i, t).is_zero()) right(i, j) += right(i, t) * q;
  };

  const std::size_t kmax = std::min(n.rows, n.cols);
  for (std::size_t t = 0; t < kmax; ++t) {
    // smallest-degree nonzero entry of the trailing block
    std::size_t bi = s.rows, bj = s.cols;
    for (std::size_t i = t; i < s.rows; ++i)
      for (std::size_t j = t; j < s.cols; ++j)
        if (!s(i, j).is_zero() && (bi == s.rows || s(i, j).degree() < s(bi, bj).degree())) {
          bi = i;
          bj = j;
        }
    if (bi == s.rows) break;
    swap_rows(t, bi);
    swap_cols(t, bj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows; ++i) {
        if (s(i, t).is_zero()) continue;
        auto [q, r] = divmod(s(i, t), s(t, t));
        add_row(i, t, -q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols; ++j) {
        if (s(t, j).is_zero()) continue;
        auto [q, r] = divmod(s(t, j), s(t, t));
        add_col(j, t, -q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) {
        // a remainder of lower degree sits in row t or column t
        std::size_t pi = t, pj = t;
        for (std::size_t i = t + 1; i < s.rows; ++i)
          if (!s(i, t).is_zero() && s(i, t).degree() < s(pi, pj).degree()) {
            pi = i;
            pj = t;
          }
        for (std::size_t j = t + 1; j < s.cols; ++j)
          if (!s(t, j).is_zero() && s(t, j).degree() < s(pi, pj).degree()) {
            pi = t;
            pj = j;
          }
        swap_rows(t, pi);
        swap_cols(t, pj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < s.rows && divisible; ++i)
        for (std::size_t j = t + 1; j < s.cols; ++j)
          if (!s(i, j).is_zero() && !divmod(s(i, j), s(t, t)).second.is_zero()) {
            add_row(t, i, Poly(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }

    GaussianRational scale = s(t, t).leading().inverse();
    for (std::size_t j = 0; j < s.cols; ++j) s(t, j) *= scale;
    for (std::size_t j = 0; j < left.cols; ++j) left(t, j) *= scale;
    invariants.push_back(s(t, t));
  }
  return {std::move(left), std::move(right), std::move(invariants)};
}

namespace {

// Finite pole structure of r equals the finite zero structure of g, and the
// same holds at infinity.
bool poles_match_zeros(const RatMat& r, const PoleZeroProfile& g_profile) {
  PoleZeroProfile rp(r);
  Poly r_poles(1), g_zeros(1);
  for (const auto& p : rp.finite().psi) r_poles *= p;
  for (const auto& e : g_profile.finite().eps) g_zeros *= e;
  if (r_poles.monic() != g_zeros.monic()) return false;
  return rp.pole_degree(Point::infinity()) == g_profile.zero_degree(Point::infinity());
}

}  // namespace

RatMat minimal_right_inverse(const RatMat& g) {
  const std::size_t m = g.rows(), n = g.cols();
  if (m == 0 || normal_rank(g) != m) throw Error(ErrorCode::RankDeficient, "right inverse needs full row rank");
  if (m == n) return inverse(g);

  auto [num, d] = clear_denominators(g);
  SmithDecomposition sd = smith_decomposition(num);
  // g = (1/d) left^{-1} S right^{-1}, so right * S^+ * d * left inverts it.
  RatMat pseudo(n, m);
  for (std::size_t i = 0; i < m; ++i) pseudo(i, i) = RatFun(d, sd.invariants[i]);
  RatMat smith_inverse = to_ratmat(sd.right) * pseudo * to_ratmat(sd.left);
  if (!(g * smith_inverse == RatMat::identity(m)))
    throw Error(ErrorCode::InvalidArgument, "internal: Smith right inverse failed the product check");

  PoleZeroProfile profile(g);
  if (poles_match_zeros(smith_inverse, profile)) return smith_inverse;

  for (Mask cs : subsets_of_size(n, m)) {
    RatMat block(m, m), select(n, m);
    std::size_t k = 0;
    for (Mask bits = cs; bits != 0; bits &= bits - 1, ++k) {
      const std::size_t c = static_cast<std::size_t>(std::countr_zero(bits));
      for (std::size_t i = 0; i < m; ++i) block(i, k) = g(i, c);
      select(c, k) = RatFun(1);
    }
    if (normal_rank(block) < m) continue;
    RatMat candidate = select * inverse(block);
    if (poles_match_zeros(candidate, profile)) return candidate;
  }
  return smith_inverse;
}

}  // namespace specfactor
