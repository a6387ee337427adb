#include <doctest.h>

#include <random>

#include "specfactor/error.hpp"
#include "specfactor/poly.hpp"
#include "support/builders.hpp"

using namespace specfactor;
using namespace specfactor::testing;

TEST_CASE("ring arithmetic") {
  CHECK(P({"1", "1"}) * P({"2", "1"}) == P({"2", "3", "1"}));
  CHECK((P({"2", "3", "1"}) * Poly()).is_zero());
  Poly p = P({"-i", "1"}) * P({"i", "1"});
  CHECK(p == P({"1", "0", "1"}));
  // evaluation check at z = 2: (2 - i)(2 + i) = 5
  CHECK(p.eval(2) == GaussianRational(5));
  CHECK(Poly().degree() == Poly::kZeroDegree);
}

TEST_CASE("divmod") {
  auto [q1, r1] = divmod(P({"2", "3", "1"}), P({"1", "1"}));
  CHECK(q1 == P({"2", "1"}));
  CHECK(r1.is_zero());

  auto [q2, r2] = divmod(P({"0", "0", "1"}), P({"1", "1"}));
  CHECK(q2 == P({"-1", "1"}));
  CHECK(r2 == Poly(1));
  CHECK(P({"1", "1"}) * q2 + r2 == P({"0", "0", "1"}));

  auto [q3, r3] = divmod(Poly(7), P({"1", "1"}));
  CHECK(q3.is_zero());
  CHECK(r3 == Poly(7));

  CHECK_THROWS_AS(divmod(Poly(1), Poly()), Error);
}

TEST_CASE("gcd") {
  CHECK(gcd(P({"2", "3", "1"}), P({"1", "1"})) == P({"1", "1"}));
  CHECK(gcd(P({"3", "2"}), P({"1", "1"})) == Poly(1));
  CHECK(gcd(P({"4", "2"}), Poly()) == P({"2", "1"}));
  CHECK_THROWS_AS(gcd(Poly(), Poly()), Error);
}

TEST_CASE("multiplicity") {
  Poly p = from_roots({-1, -1, 2});
  CHECK(multiplicity(p, Point(-1)) == 2);
  CHECK(multiplicity(P({"3", "2"}), Point(-2)) == 0);
  Poly c = from_roots({q("1+i"), q("1+i"), q("1+i")});
  CHECK(multiplicity(c, Point(q("1+i"))) == 3);
  CHECK(multiplicity(c, Point::infinity()) == 0);
  CHECK_THROWS_AS(multiplicity(Poly(), Point(0)), Error);
}

TEST_CASE("eval") {
  CHECK(P({"1", "0", "1"}).eval(GaussianRational::i()).is_zero());
  CHECK(P({"2", "1"}).eval(-2).is_zero());
  CHECK(P({"3", "2"}).eval(-1) == GaussianRational(1));
  CHECK(divmod(P({"3", "2"}), P({"1", "1"})).second == Poly(1));
}

TEST_CASE("gaussian_roots examples") {
  auto r1 = gaussian_roots(P({"2", "3", "1"}));
  REQUIRE(r1.roots.size() == 2);
  CHECK(r1.roots[0] == std::pair<GaussianRational, std::size_t>{-1, 1});
  CHECK(r1.roots[1] == std::pair<GaussianRational, std::size_t>{-2, 1});
  CHECK(r1.cofactor == Poly(1));

  auto r2 = gaussian_roots(P({"1", "0", "1"}));
  REQUIRE(r2.roots.size() == 2);
  CHECK(r2.roots[0].first == -GaussianRational::i());
  CHECK(r2.roots[1].first == GaussianRational::i());
  CHECK(r2.cofactor == Poly(1));

  auto r3 = gaussian_roots(P({"-2", "0", "1"}));
  CHECK(r3.roots.empty());
  CHECK(r3.cofactor == P({"-2", "0", "1"}));
}

TEST_CASE("gaussian_roots on higher degree with mixed factors") {
  // (z - 3/2)^2 (z + 2i/3) (z - 1 - i) (z^2 - 2) (z^2 + z + 1) z
  Poly p = from_roots({q("3/2"), q("3/2"), q("-2/3*i"), q("1+i"), 0}) * P({"-2", "0", "1"}) * P({"1", "1", "1"}) *
           GaussianRational(q("5/7"));
  auto r = gaussian_roots(p);
  REQUIRE(r.roots.size() == 4);
  CHECK(r.cofactor == P({"-2", "0", "1"}) * P({"1", "1", "1"}));
  Poly rebuilt = r.cofactor * Poly(p.leading());
  for (auto& [root, m] : r.roots)
    for (std::size_t k = 0; k < m; ++k) rebuilt *= Poly::linear(root);
  CHECK(rebuilt == p);
}

namespace {

GaussianRational draw_scalar(std::mt19937_64& rng, bool complex) {
  auto r = [&]() { return mpq_class(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 4) + 1); };
  return complex ? GaussianRational(r(), r()) : GaussianRational(r());
}

Poly draw_poly(std::mt19937_64& rng, int max_degree) {
  std::vector<GaussianRational> c;
  int deg = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
  for (int k = 0; k <= deg; ++k) c.push_back(draw_scalar(rng, rng() % 2 == 0));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial invariants over random samples") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = draw_poly(rng, 5), d = draw_poly(rng, 3);
    if (d.is_zero()) continue;
    auto [quot, rem] = divmod(p, d);
    CHECK(d * quot + rem == p);
    CHECK(rem.degree() < d.degree());

    if (!p.is_zero()) {
      Poly g = gcd(p, d);
      CHECK(g.is_monic());
      CHECK(divmod(p, g).second.is_zero());
      CHECK(divmod(d, g).second.is_zero());

      GaussianRational a = draw_scalar(rng, true);
      Poly pa = p * Poly::linear(a), da = d * Poly::linear(a) * Poly::linear(a);
      CHECK(multiplicity(pa * da, a) == multiplicity(pa, a) + multiplicity(da, a));
    }
  }
}

TEST_CASE("gaussian_roots reconstruction over random products") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p(draw_scalar(rng, true));
    if (p.is_zero()) p = Poly(1);
    int n = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < n; ++k) p *= Poly::linear(draw_scalar(rng, rng() % 2 == 0));
    if (rng() % 3 == 0) p *= P({"3", "0", "1"});
    auto r = gaussian_roots(p);
    Poly rebuilt = r.cofactor * Poly(p.leading());
    std::size_t total = 0;
    for (auto& [root, m] : r.roots) {
      for (std::size_t k = 0; k < m; ++k) rebuilt *= Poly::linear(root);
      total += m;
    }
    CHECK(rebuilt == p);
    CHECK(total >= static_cast<std::size_t>(n));
  }
}
