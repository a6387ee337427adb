#include "specfactor/allpass.hpp"

#include <algorithm>

#include "specfactor/error.hpp"

namespace specfactor {

RatMat make_elementary(const Point& alpha, const std::vector<GaussianRational>& v) {
  if (abs_vs_one(alpha) == CircleOrder::Equal)
    throw Error(ErrorCode::CirclePoint, "elementary factor pole on the unit circle: " + to_string(alpha));
  mpq_class vv = 0;
  for (const auto& x : v) vv += x.norm();
  if (sgn(vv) == 0) throw Error(ErrorCode::InvalidArgument, "elementary factor needs a nonzero vector");

  const std::size_t r = v.size();
  RatFun kernel = blaschke(alpha) - RatFun(1);
  RatMat u = RatMat::identity(r);
  GaussianRational scale = GaussianRational(vv).inverse();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      GaussianRational p = v[i] * conj(v[j]) * scale;
      if (!p.is_zero()) u(i, j) += kernel * RatFun(p);
    }
  return u;
}

bool is_paraunitary(const RatMat& v) {
  if (!v.is_square()) throw Error(ErrorCode::DimensionMismatch, "para-unitarity needs a square matrix");
  RatMat vs = paraconj_transpose(v);
  RatMat id = RatMat::identity(v.rows());
  return vs * v == id && v * vs == id;
}

bool is_parahermitian(const RatMat& g) {
  if (!g.is_square()) throw Error(ErrorCode::DimensionMismatch, "para-Hermitian check needs a square matrix");
  return paraconj_transpose(g) == g;
}

RatMat conjugate_transpose(const RatMat& c) {
  RatMat t(c.cols(), c.rows());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (!c(i, j).is_constant()) throw Error(ErrorCode::InvalidArgument, "conjugate transpose of a non-constant matrix");
      t(j, i) = RatFun(conj(c(i, j).constant_value()));
    }
  return t;
}

RatMat reconstruct(const AllPassFactorization& f) {
  RatMat out = f.constant;
  for (const auto& u : f.factors) out = out * make_elementary(u);
  return out;
}

std::size_t degree_of_factorization(const AllPassFactorization& f) { return f.factors.size(); }

namespace {

// Value at p of f * (z - p)^order, where order is the pole order of f at p.
GaussianRational leading_at(const RatFun& f, const GaussianRational& p, std::size_t num_mult, std::size_t den_mult) {
  Poly num = f.num(), den = f.den();
  Poly lin = Poly::linear(p);
  for (std::size_t k = 0; k < num_mult; ++k) num = exact_div(num, lin);
  for (std::size_t k = 0; k < den_mult; ++k) den = exact_div(den, lin);
  return num.eval(p) / den.eval(p);
}

// Scales a nonzero vector to coprime Gaussian integer components.
std::vector<GaussianRational> primitive(std::vector<GaussianRational> v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
  }
  mpz_class g = 0;
  for (auto& x : v) {
    x = GaussianRational(x.re() * l, x.im() * l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.re().get_num_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.im().get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : v) x = GaussianRational(x.re() / g, x.im() / g);
  return v;
}

}  // namespace

LaurentLeading laurent_leading(const RatMat& g, const Point& p) {
  LaurentLeading out;
  bool any = false;
  for (const auto& e : g.entries()) {
    if (e.is_zero()) continue;
    int k = -valuation(e, p);
    out.order = any ? std::max(out.order, k) : k;
    any = true;
  }
  if (!any) throw Error(ErrorCode::InvalidArgument, "Laurent expansion of the zero matrix");
  out.coefficient.assign(g.rows(), std::vector<GaussianRational>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const RatFun& e = g(i, j);
      if (e.is_zero() || -valuation(e, p) != out.order) continue;
      if (p.is_infinite()) {
        out.coefficient[i][j] = e.num().leading() / e.den().leading();
      } else {
        out.coefficient[i][j] =
            leading_at(e, p.value(), multiplicity(e.num(), p), multiplicity(e.den(), p));
      }
    }
  return out;
}

AllPassFactorization potapov_factorize(const RatMat& input) {
  if (!is_paraunitary(input)) throw Error(ErrorCode::NotParaUnitary, "matrix is not para-unitary");
  const std::size_t r = input.rows();

  RatMat v = input;
  std::vector<ElementaryFactor> peeled;
  std::size_t degree = mcmillan_degree(v);
  while (!v.is_constant()) {
    PoleZeroProfile profile(v);
    std::vector<Point> poles = profile.poles();
    if (poles.empty()) throw Error(ErrorCode::PeelFailure, "non-constant para-unitary matrix without poles");
    const Point& alpha = poles.front();
    LaurentLeading lead = laurent_leading(v, alpha);

    bool done = false;
    for (std::size_t j = 0; j < r && !done; ++j) {
      std::vector<GaussianRational> col(r);
      bool nonzero = false;
      for (std::size_t i = 0; i < r; ++i) {
        col[i] = lead.coefficient[i][j];
        nonzero = nonzero || !col[i].is_zero();
      }
      if (!nonzero) continue;
      col = primitive(std::move(col));
      RatMat next = paraconj_transpose(make_elementary(alpha, col)) * v;
      std::size_t next_degree = mcmillan_degree(next);
      if (next_degree + 1 != degree) continue;
      peeled.push_back({alpha, std::move(col)});
      v = std::move(next);
      degree = next_degree;
      done = true;
    }
    if (!done)
      throw Error(ErrorCode::PeelFailure, "no column of the leading coefficient at " + to_string(alpha) +
                                              " lowers the McMillan degree");
  }

  RatMat c = v;
  RatMat ch = conjugate_transpose(c);
  if (!(ch * c == RatMat::identity(r))) throw Error(ErrorCode::PeelFailure, "remaining constant is not unitary");

  // input = U_1 ... U_n C = C (C* U_1 C) ... (C* U_n C), and C* U_{a,v} C = U_{a, C* v}.
  AllPassFactorization out{c, {}};
  for (auto& f : peeled) {
    std::vector<GaussianRational> w(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) w[i] += ch(i, k).constant_value() * f.v[k];
    out.factors.push_back({f.alpha, primitive(std::move(w))});
  }
  return out;
}

}  // namespace specfactor
