#include "specfactor/exactnum.hpp"

#include <cctype>
#include <optional>

#include "specfactor/error.hpp"

namespace specfactor {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::RankDeficient: return "rank_deficient";
    case ErrorCode::CirclePoint: return "circle_point";
    case ErrorCode::NonGaussianRoot: return "non_gaussian_root";
    case ErrorCode::NotParaUnitary: return "not_paraunitary";
    case ErrorCode::PeelFailure: return "peel_failure";
    case ErrorCode::NotSpectralFactor: return "not_spectral_factor";
    case ErrorCode::NotCoSpectral: return "not_cospectral";
    case ErrorCode::HypothesisViolated: return "hypothesis_violated";
    case ErrorCode::RetryExhausted: return "retry_exhausted";
    case ErrorCode::MalformedInput: return "malformed_input";
    case ErrorCode::IoError: return "io_error";
  }
  return "unknown";
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero scalar");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero scalar");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::strong_ordering compare_q(const mpq_class& a, const mpq_class& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string format_rational(const mpq_class& q) { return q.get_str(10); }

// Parses an unsigned rational "n" or "n/d" (digits only).
std::optional<mpq_class> parse_unsigned_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  auto digits = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = s.substr(0, slash);
  if (!digits(num)) return std::nullopt;
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(mpz_class(std::string(num), 10));
  } else {
    std::string_view den = s.substr(slash + 1);
    if (!digits(den)) return std::nullopt;
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in scalar literal");
    q = mpq_class(mpz_class(std::string(num), 10), d);
    q.canonicalize();
  }
  return q;
}

}  // namespace

std::strong_ordering canonical_order(const GaussianRational& a, const GaussianRational& b) {
  if (auto c = compare_q(a.norm(), b.norm()); c != 0) return c;
  if (auto c = compare_q(a.re(), b.re()); c != 0) return c;
  return compare_q(a.im(), b.im());
}

std::string to_string(const GaussianRational& a) {
  if (a.is_real()) return format_rational(a.re());
  std::string im = format_rational(a.im()) + "*i";
  if (sgn(a.re()) == 0) return im;
  std::string out = format_rational(a.re());
  if (sgn(a.im()) > 0) out += '+';
  return out + im;
}

GaussianRational parse_scalar(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::MalformedInput, "malformed scalar literal '" + std::string(text) + "'");
  };
  std::string s;
  bool gap = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      gap = !s.empty();
      continue;
    }
    // "1 2" is not 12
    if (gap && std::isdigit(static_cast<unsigned char>(c)) && std::isdigit(static_cast<unsigned char>(s.back())))
      throw fail();
    gap = false;
    s += c;
  }
  if (s.empty()) throw fail();

  std::optional<mpq_class> re, im;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw fail();
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string_view term = std::string_view(s).substr(pos, end == std::string::npos ? s.size() - pos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) throw fail();

    bool imaginary = term.back() == 'i';
    if (imaginary) {
      term.remove_suffix(1);
      if (!term.empty() && term.back() == '*') {
        term.remove_suffix(1);
        if (term.empty()) throw fail();
      }
    }
    mpq_class value = 1;
    if (!imaginary || !term.empty()) {
      auto parsed = parse_unsigned_rational(term);
      if (!parsed) throw fail();
      value = *parsed;
    }
    if (sign < 0) value = -value;
    auto& slot = imaginary ? im : re;
    if (slot) throw fail();
    slot = value;
  }
  return {re.value_or(0), im.value_or(0)};
}

const GaussianRational& Point::value() const {
  if (infinite_) throw Error(ErrorCode::InvalidArgument, "point at infinity has no finite value");
  return value_;
}

std::strong_ordering canonical_order(const Point& a, const Point& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return canonical_order(a.value(), b.value());
}

std::string to_string(const Point& p) { return p.is_infinite() ? "inf" : to_string(p.value()); }

Point parse_point(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "inf") return Point::infinity();
  return parse_scalar(s);
}

CircleOrder abs_vs_one(const Point& p) {
  if (p.is_infinite()) return CircleOrder::Greater;
  int c = cmp(p.value().norm(), 1);
  if (c < 0) return CircleOrder::Less;
  if (c > 0) return CircleOrder::Greater;
  return CircleOrder::Equal;
}

Point symplectic_pair(const Point& p) {
  if (p.is_infinite()) return GaussianRational(0);
  if (p.value().is_zero()) return Point::infinity();
  return p.value().inverse();
}

Point conj_pair(const Point& p) {
  if (p.is_infinite()) return GaussianRational(0);
  if (p.value().is_zero()) return Point::infinity();
  return p.value().conj().inverse();
}

}  // namespace specfactor
