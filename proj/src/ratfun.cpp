#include "specfactor/ratfun.hpp"

#include "specfactor/error.hpp"

namespace specfactor {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (!den_.is_monic()) {
    GaussianRational inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

GaussianRational RatFun::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "rational function is not constant");
  return num_.coeff(0);
}

std::optional<GaussianRational> RatFun::eval(const GaussianRational& x) const {
  GaussianRational d = den_.eval(x);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(x) / d;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Reduced{}); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    // den unchanged, but num may now share factors with it
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFun();
  if (o.is_constant()) {
    num_ *= o.num_.coeff(0);
    return *this;
  }
  if (is_constant()) {
    GaussianRational c = num_.coeff(0);
    *this = o;
    num_ *= c;
    return *this;
  }
  // cross-cancel before multiplying to keep degrees small
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (!den_.is_monic()) reduce();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
  return *this *= RatFun(o.den_, o.num_);
}

namespace {

// z^k as a rational function, k may be negative.
RatFun z_power(int k) {
  if (k >= 0) return RatFun(Poly::monomial(1, static_cast<std::size_t>(k)));
  return RatFun(Poly(1), Poly::monomial(1, static_cast<std::size_t>(-k)));
}

}  // namespace

RatFun paraconj(const RatFun& f) {
  if (f.is_zero()) return f;
  // conj(p(1/conj z)) = z^{-deg p} rev(conj p)(z)
  return RatFun(f.num().conj().reversed(), f.den().conj().reversed()) *
         z_power(f.den().degree() - f.num().degree());
}

RatFun reciprocal_substitution(const RatFun& f) {
  if (f.is_zero()) return f;
  return RatFun(f.num().reversed(), f.den().reversed()) * z_power(f.den().degree() - f.num().degree());
}

int valuation(const RatFun& f, const Point& p) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "valuation of the zero function");
  if (p.is_infinite()) return f.den().degree() - f.num().degree();
  return static_cast<int>(multiplicity(f.num(), p)) - static_cast<int>(multiplicity(f.den(), p));
}

RatFun blaschke(const Point& a) {
  if (abs_vs_one(a) == CircleOrder::Equal)
    throw Error(ErrorCode::CirclePoint, "Blaschke factor requested at a point on the unit circle");
  if (a.is_infinite()) return RatFun(Poly::z());
  const GaussianRational& alpha = a.value();
  return RatFun(Poly({1, -alpha.conj()}), Poly::linear(alpha));
}

}  // namespace specfactor
