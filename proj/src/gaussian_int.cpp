#include "gaussian_int.hpp"

#include <algorithm>
#include <stdexcept>

namespace specfactor::detail {

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool divides(const GaussInt& b, const GaussInt& a, GaussInt& q) {
  mpz_class n = b.norm();
  if (sgn(n) == 0) return false;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
    return false;
  mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  q = {re, im};
  return true;
}

namespace {

// round(x / n) for n > 0
mpz_class round_div(const mpz_class& x, const mpz_class& n) {
  mpz_class t = 2 * x + n;
  mpz_class d = 2 * n;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
  return q;
}

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const mpz_class& v) {
      mpz_class t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::vector<mpz_class>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

// Gaussian prime above a rational prime p == 1 mod 4.
GaussInt split_prime(const mpz_class& p) {
  mpz_class e = (p - 1) / 4;
  mpz_class minus_one = p - 1;
  for (mpz_class c = 2;; ++c) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_class sq = (x * x) % p;
    if (sq == minus_one) return gcd(GaussInt{p, 0}, GaussInt{x, 1});
  }
}

}  // namespace

GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    mpz_class n = b.norm();
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    GaussInt q{round_div(re, n), round_div(im, n)};
    GaussInt prod = q * b;
    GaussInt r{a.re - prod.re, a.im - prod.im};
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  if (sgn(n) <= 0) throw std::invalid_argument("factor_integer expects a positive integer");
  std::vector<mpz_class> primes;
  for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<mpz_class, unsigned>> out;
  for (auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<std::pair<GaussInt, unsigned>> factor(const GaussInt& a) {
  if (a.is_zero()) throw std::invalid_argument("factor of zero Gaussian integer");
  std::vector<std::pair<GaussInt, unsigned>> out;
  GaussInt rest = a;
  auto strip = [&](const GaussInt& pi) {
    unsigned k = 0;
    GaussInt q;
    while (divides(pi, rest, q)) {
      rest = q;
      ++k;
    }
    if (k > 0) out.emplace_back(pi, k);
  };
  for (auto& [p, e] : factor_integer(a.norm())) {
    if (p == 2) {
      strip({1, 1});
    } else if (p % 4 == 3) {
      strip({p, 0});
    } else {
      GaussInt pi = split_prime(p);
      strip(pi);
      strip({pi.re, -pi.im});
    }
  }
  return out;
}

std::vector<GaussInt> divisors(const GaussInt& a) {
  std::vector<GaussInt> out{{1, 0}};
  for (auto& [pi, e] : factor(a)) {
    std::size_t base = out.size();
    GaussInt power{1, 0};
    for (unsigned k = 1; k <= e; ++k) {
      power = power * pi;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  return out;
}

}  // namespace specfactor::detail
