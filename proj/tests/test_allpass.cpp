#include <doctest.h>

#include <map>

#include "specfactor/allpass.hpp"
#include "specfactor/error.hpp"
#include "support/builders.hpp"
#include "support/generators.hpp"

using namespace specfactor;
using namespace specfactor::testing;

namespace {

std::vector<GaussianRational> e(std::size_t r, std::size_t k) {
  std::vector<GaussianRational> v(r);
  v[k] = 1;
  return v;
}

}  // namespace

TEST_CASE("elementary factor examples") {
  RatMat u = make_elementary(2, e(2, 0));
  CHECK(u == RatMat::diagonal({blaschke(2), RatFun(1)}));
  CHECK(make_elementary(Point::infinity(), e(2, 0)) == RatMat::diagonal({RatFun(Poly::z()), RatFun(1)}));
  CHECK(det(make_elementary(q("1/2+1/3*i"), {q("1"), q("2-i")})) == blaschke(q("1/2+1/3*i")));
  CHECK_THROWS_AS(make_elementary(q("3/5-4/5*i"), e(2, 1)), Error);
  CHECK_THROWS_AS(make_elementary(2, {0, 0}), Error);
}

TEST_CASE("para-unitary and para-Hermitian checks") {
  CHECK(is_paraunitary(make_elementary(q("-3"), {q("1"), q("i"), q("2")})));
  CHECK(is_paraunitary(RatMat::identity(3)));
  CHECK_FALSE(is_paraunitary(RatMat::diagonal({F(Poly(1), P({"-2", "1"})), RatFun(1)})));
  CHECK_THROWS_AS(is_paraunitary(RatMat(1, 2)), Error);

  RatMat w(1, 2, {F(P({"1", "1"}), P({"-3", "1"})), RatFun(q("2"))});
  CHECK(is_parahermitian(paraconj_transpose(w) * w));
  CHECK_FALSE(is_parahermitian(RatMat(1, 1, {RatFun(Poly::z())})));
  CHECK(is_parahermitian(RatMat::constant(2, 2, {q("1"), q("-3/2"), q("-3/2"), q("7")})));
}

TEST_CASE("elementary factor structure") {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 2, 4));
    ElementaryFactor f = random_elementary(rng, r);
    RatMat u = make_elementary(f);
    RatMat us = paraconj_transpose(u);
    CHECK(us * u == RatMat::identity(r));
    CHECK(u * us == RatMat::identity(r));
    CHECK(det(u) == blaschke(f.alpha));
    CHECK(mcmillan_degree(u) == 1);
    // the inverse of a para-unitary matrix is its paraconjugate
    CHECK(minimal_right_inverse(u) == us);

    SMStructure s = sm_structure(u);
    REQUIRE(s.rank == r);
    if (f.alpha.is_finite() && !f.alpha.value().is_zero()) {
      Point zero = conj_pair(f.alpha);
      CHECK(s.psi.front() == Poly::linear(f.alpha.value()));
      CHECK(s.eps.back() == Poly::linear(zero.value()));
      for (std::size_t i = 0; i + 1 < r; ++i) CHECK(s.eps[i] == Poly(1));
      for (std::size_t i = 1; i < r; ++i) CHECK(s.psi[i] == Poly(1));
      PoleZeroProfile prof(u);
      CHECK(prof.zero_degree(zero) == 1);
      CHECK(prof.pole_degree(f.alpha) == 1);
    }
  }
}

TEST_CASE("potapov factorization examples") {
  AllPassFactorization one = potapov_factorize(make_elementary(2, e(2, 0)));
  REQUIRE(one.factors.size() == 1);
  CHECK(one.factors[0].alpha == Point(2));
  CHECK(one.constant == RatMat::identity(2));
  CHECK(degree_of_factorization(one) == 1);

  RatMat v = make_elementary(2, {1, 1}) * make_elementary(3, {1, -1}) * make_elementary(q("1+i"), {q("1"), q("i")});
  AllPassFactorization three = potapov_factorize(v);
  CHECK(three.factors.size() == 3);
  CHECK(mcmillan_degree(v) == 3);
  CHECK(reconstruct(three) == v);

  RatMat rot = RatMat::constant(2, 2, {q("3/5"), q("-4/5"), q("4/5"), q("3/5")});
  AllPassFactorization none = potapov_factorize(rot);
  CHECK(none.factors.empty());
  CHECK(none.constant == rot);
  CHECK(degree_of_factorization(AllPassFactorization{RatMat::identity(1), {}}) == 0);

  CHECK_THROWS_AS(potapov_factorize(RatMat::diagonal({F(Poly(1), P({"-2", "1"})), RatFun(1)})), Error);
}

TEST_CASE("potapov round trip with repeated poles and pole-zero pairing") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 4));
    std::vector<ElementaryFactor> fs;
    for (std::size_t j = 0; j < k; ++j) {
      if (j > 0 && rng() % 4 == 0)
        fs.push_back({fs.back().alpha, nonzero_vector(rng, r)});
      else
        fs.push_back(random_elementary(rng, r));
    }
    RatMat v = RatMat::identity(r);
    for (const auto& f : fs) v = v * make_elementary(f);

    AllPassFactorization out = potapov_factorize(v);
    CHECK(reconstruct(out) == v);
    PoleZeroProfile prof(v);
    CHECK(out.factors.size() == prof.mcmillan_degree());

    std::map<std::string, std::size_t> counted;
    for (const auto& f : out.factors) ++counted[to_string(f.alpha)];
    for (const auto& p : prof.poles()) {
      CHECK(counted[to_string(p)] == prof.pole_degree(p));
      CHECK(prof.zero_degree(conj_pair(p)) == prof.pole_degree(p));
    }
  }
}
