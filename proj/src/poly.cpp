#include "specfactor/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include "gaussian_int.hpp"
#include "specfactor/error.hpp"

namespace specfactor {

Poly::Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(GaussianRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Poly Poly::monomial(GaussianRational c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return Poly(std::move(coeffs));
}

Poly Poly::linear(const GaussianRational& root) { return Poly({-root, 1}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussianRational(); }

const GaussianRational& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Poly::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussianRational& c) { return c.is_real(); });
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  GaussianRational inv = leading().inverse();
  Poly out = *this;
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Poly Poly::conj() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = c.conj();
  return out;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::reversed() const {
  std::vector<GaussianRational> r(coeffs_.rbegin(), coeffs_.rend());
  return Poly(std::move(r));
}

GaussianRational Poly::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (p.degree() < q.degree()) return {Poly(), p};
  std::vector<GaussianRational> rem = p.coeffs();
  const auto& qc = q.coeffs();
  const std::size_t dq = qc.size() - 1;
  std::vector<GaussianRational> quot(rem.size() - dq);
  const bool monic = q.is_monic();
  GaussianRational inv_lead = monic ? GaussianRational(1) : q.leading().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    GaussianRational c = rem[k + dq];
    if (c.is_zero()) continue;
    if (!monic) c *= inv_lead;
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= c * qc[j];
    quot[k] = std::move(c);
  }
  rem.resize(dq);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& p, const Poly& q) {
  auto [quot, rem] = divmod(p, q);
  if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  return quot;
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::InvalidArgument, "gcd(0, 0) is undefined");
  Poly a = p.monic(), b = q.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Poly(1);
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a;
}

Poly lcm(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::InvalidArgument, "lcm of zero polynomial");
  Poly g = gcd(p, q);
  return (exact_div(p.monic(), g) * q.monic());
}

namespace {

// Synthetic division by (z - a); returns remainder p(a).
GaussianRational deflate(Poly& p, const GaussianRational& a) {
  const auto& c = p.coeffs();
  if (c.empty()) return {};
  std::vector<GaussianRational> q(c.size() - 1);
  GaussianRational acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = acc;
    acc *= a;
    acc += c[k];
  }
  if (acc.is_zero()) p = Poly(std::move(q));
  return acc;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& d) {
  auto modulus = rational_sqrt(d.norm());
  if (!modulus) return std::nullopt;
  auto a = rational_sqrt((d.re() + *modulus) / 2);
  auto b = rational_sqrt((*modulus - d.re()) / 2);
  if (!a || !b) return std::nullopt;
  GaussianRational r(*a, sgn(d.im()) < 0 ? mpq_class(-*b) : *b);
  if (r * r != d) return std::nullopt;
  return r;
}

using detail::GaussInt;

// Candidate search by the rational root theorem over Z[i]: a root u*p/q in
// lowest terms has p | a_0 and q | a_n.
std::optional<GaussianRational> find_root_by_divisors(const Poly& s) {
  mpz_class scale = 1;
  for (const auto& c : s.coeffs()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.im().get_den_mpz_t());
  }
  auto to_int = [&](const GaussianRational& c) {
    mpq_class re = c.re() * scale, im = c.im() * scale;
    return GaussInt{re.get_num(), im.get_num()};
  };
  GaussInt a0 = to_int(s.coeffs().front());
  GaussInt an = to_int(s.coeffs().back());

  std::vector<std::complex<double>> cd;
  double max_ratio = 0;
  for (const auto& c : s.coeffs()) {
    cd.emplace_back(c.re().get_d(), c.im().get_d());
    max_ratio = std::max(max_ratio, std::abs(cd.back()));
  }
  const double lead_abs = std::abs(cd.back());
  const double bound = 1.0 + max_ratio / lead_abs;

  auto by_norm = [](const GaussInt& a, const GaussInt& b) { return cmp(a.norm(), b.norm()) < 0; };
  std::vector<GaussInt> nums = detail::divisors(a0);
  std::vector<GaussInt> dens = detail::divisors(an);
  std::sort(nums.begin(), nums.end(), by_norm);
  std::sort(dens.begin(), dens.end(), by_norm);

  const GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& q : dens) {
    const double q_abs = std::sqrt(q.norm().get_d());
    GaussianRational q_inv = GaussianRational(mpq_class(q.re), mpq_class(q.im)).inverse();
    for (const auto& p : nums) {
      if (std::sqrt(p.norm().get_d()) > bound * q_abs * (1 + 1e-9)) break;
      for (const auto& u : units) {
        GaussInt up = u * p;
        GaussianRational r = GaussianRational(mpq_class(up.re), mpq_class(up.im)) * q_inv;
        std::complex<double> rd(r.re().get_d(), r.im().get_d());
        std::complex<double> acc = 0;
        double scale_abs = 0, rpow = 1;
        for (auto it = cd.rbegin(); it != cd.rend(); ++it) acc = acc * rd + *it;
        for (const auto& c : cd) {
          scale_abs += std::abs(c) * rpow;
          rpow *= std::abs(rd);
        }
        if (std::abs(acc) > 1e-8 * scale_abs) continue;
        if (s.eval(r).is_zero()) return r;
      }
    }
  }
  return std::nullopt;
}

std::vector<GaussianRational> squarefree_roots(Poly s) {
  std::vector<GaussianRational> out;
  while (s.degree() >= 1) {
    s = s.monic();
    if (s.coeff(0).is_zero()) {
      out.emplace_back(0);
      deflate(s, GaussianRational(0));
      continue;
    }
    if (s.degree() == 1) {
      out.push_back(-s.coeff(0));
      break;
    }
    if (s.degree() == 2) {
      GaussianRational b = s.coeff(1), c = s.coeff(0);
      if (auto sq = gaussian_sqrt(b * b - GaussianRational(4) * c)) {
        GaussianRational half(mpq_class(1, 2));
        out.push_back((-b + *sq) * half);
        out.push_back((-b - *sq) * half);
      }
      break;
    }
    auto r = find_root_by_divisors(s);
    if (!r) break;
    out.push_back(*r);
    deflate(s, *r);
  }
  return out;
}

}  // namespace

std::size_t multiplicity(const Poly& p, const Point& a) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "multiplicity of the zero polynomial");
  if (a.is_infinite()) return 0;
  Poly q = p;
  std::size_t k = 0;
  while (q.degree() >= 1 && deflate(q, a.value()).is_zero()) ++k;
  return k;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "squarefree part of the zero polynomial");
  if (p.degree() <= 0) return Poly(1);
  return exact_div(p.monic(), gcd(p, p.derivative()));
}

GaussianRoots gaussian_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  GaussianRoots out;
  Poly rest = p.monic();
  if (rest.degree() >= 1) {
    for (const auto& r : squarefree_roots(squarefree_part(rest))) {
      std::size_t m = 0;
      while (rest.degree() >= 1 && deflate(rest, r).is_zero()) ++m;
      out.roots.emplace_back(r, m);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return canonical_order(a.first, b.first) < 0; });
  out.cofactor = std::move(rest);
  return out;
}

}  // namespace specfactor
