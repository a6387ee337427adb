#include <doctest.h>

#include <algorithm>
#include <random>

#include "specfactor/error.hpp"
#include "specfactor/spectra.hpp"
#include "support/builders.hpp"

using namespace specfactor;
using namespace specfactor::testing;

namespace {

RatMat scalar_w() { return RatMat(1, 1, {F(P({"-2", "1"}), P({"-3", "1"}))}); }

Spectrum gram(const RatMat& w) { return Spectrum{paraconj_transpose(w) * w}; }

}  // namespace

TEST_CASE("region membership") {
  Region outer = Region::outer();
  CHECK(outer.contains(2));
  CHECK_FALSE(outer.contains(q("1/2")));
  CHECK(outer.contains(Point::infinity()));
  CHECK_FALSE(outer.contains(0));
  CHECK_FALSE(outer.contains(q("3/5+4/5*i")));

  Region flipped(Region::Side::Outer, {3});
  CHECK_FALSE(flipped.contains(3));
  CHECK(flipped.contains(q("1/3")));
  CHECK(Region(Region::Side::Outer, {q("1/3")}) == flipped);

  CHECK(Region::outer(true).contains(q("3/5+4/5*i")));
  CHECK(Region::inner().contains(q("1/2")));
  CHECK_THROWS_AS(Region(Region::Side::Inner, {q("-1")}), Error);
}

TEST_CASE("region text form") {
  Region r = parse_region(" outer , flip=1/3;0 ; 2+i , weak");
  CHECK(r.weak());
  CHECK(r.flipped() == std::vector<Point>{Point(q("2+i")), Point(3), Point::infinity()});
  CHECK(to_string(r) == "outer,flip=2+1*i;3;inf,weak");
  CHECK(parse_region(to_string(r)) == r);
  CHECK(parse_region("inner") == Region::inner());
  CHECK_THROWS_AS(parse_region("sideways"), Error);
  CHECK_THROWS_AS(parse_region("outer,strong"), Error);
}

TEST_CASE("regions pick exactly one point of every pair") {
  std::mt19937_64 rng(8);
  std::vector<Region> regions = {Region::outer(), Region::inner(), parse_region("outer,flip=3;1/2+1*i;inf"),
                                 parse_region("inner,flip=-5/2,weak")};
  for (int trial = 0; trial < 300; ++trial) {
    mpq_class re(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1);
    mpq_class im(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1);
    Point p = trial % 3 == 0 ? Point(GaussianRational(re)) : Point(GaussianRational(re, im));
    if (trial % 50 == 0) p = Point::infinity();
    if (abs_vs_one(p) == CircleOrder::Equal) continue;
    for (const auto& r : regions) CHECK(r.contains(p) != r.contains(symplectic_pair(p)));
  }
}

TEST_CASE("analyticity") {
  CHECK(analytic_in(scalar_w(), Region::inner()));
  CHECK_FALSE(analytic_in(scalar_w(), Region::outer()));
  CHECK(analytic_in(scalar_w(), parse_region("outer,flip=3")));
  CHECK(zeros_outside(scalar_w(), parse_region("outer,flip=2")));
  CHECK_FALSE(zeros_outside(scalar_w(), Region::outer()));
  RatMat poly(1, 1, {RatFun(Poly::z())});
  CHECK_FALSE(analytic_in(poly, Region::outer()));
  CHECK(analytic_in(poly, parse_region("outer,flip=inf")));
}

TEST_CASE("spectral factors and stochastic minimality") {
  RatMat w = scalar_w();
  Spectrum phi = gram(w);
  CHECK(is_spectral_factor(w, phi));
  CHECK(is_spectral_factor(-w, phi));
  CHECK_FALSE(is_spectral_factor(RatFun(2) * w, phi));
  CHECK(is_stochastically_minimal(w, phi));
  CHECK(mcmillan_degree(phi.phi) == 2);

  RatMat w5 = RatMat(1, 1, {blaschke(5)}) * w;
  CHECK(is_spectral_factor(w5, phi));
  CHECK(mcmillan_degree(w5) == 2);
  CHECK_FALSE(is_stochastically_minimal(w5, phi));

  RatMat c = RatMat::constant(1, 1, {3});
  CHECK(is_stochastically_minimal(c, gram(c)));
  CHECK_THROWS_AS(is_stochastically_minimal(RatFun(2) * w, phi), Error);
  CHECK_THROWS_AS(is_spectral_factor(RatMat(1, 2), phi), Error);

  RatMat rot = RatMat::constant(2, 2, {q("3/5"), q("4/5"), q("-4/5"), q("3/5")});
  RatMat w2(2, 2, {F(Poly(1), P({"-4", "1"})), RatFun(1), RatFun(), F(P({"1/2", "1"}), P({"-7", "1"}))});
  CHECK(is_spectral_factor(rot * w2, gram(w2)));
}

TEST_CASE("spectrum validation") {
  CHECK_NOTHROW(make_spectrum(gram(scalar_w()).phi));
  CHECK_THROWS_AS(make_spectrum(RatMat(1, 1, {RatFun(Poly::z())})), Error);
  CHECK_THROWS_AS(make_spectrum(RatMat::constant(1, 1, {q("i")})), Error);
  CHECK_THROWS_AS(make_spectrum(RatMat(1, 2)), Error);
}

TEST_CASE("psd on the circle") {
  CHECK(psd_on_circle(gram(scalar_w())).psd);
  CHECK_FALSE(psd_on_circle(Spectrum{RatMat::constant(1, 1, {-1})}).psd);
  // (z + 1/z)/2 + 1 = cos w + 1
  RatFun cosine = F(P({"1", "2", "1"}) * Poly(q("1/2")), Poly::z());
  PsdReport rep = psd_on_circle(Spectrum{RatMat(1, 1, {cosine})}, 64, 1e-9);
  CHECK(rep.psd);
  CHECK(rep.evaluated == 64);
  CHECK(rep.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
  // a pole on the circle is skipped, not evaluated
  PsdReport skip = psd_on_circle(Spectrum{RatMat(1, 1, {F(Poly(1), P({"-1", "1"}))})}, 4, 1e-9);
  CHECK(skip.skipped == 1);
  CHECK(skip.evaluated == 3);
}

TEST_CASE("transfer between factors") {
  RatMat w(1, 2, {F(P({"-2", "1"}), P({"-3", "1"})), RatFun(1)});
  CHECK(transfer_between(-w, w) == RatMat::constant(1, 1, {-1}));

  RatMat w2(2, 3, {F(Poly(1), P({"-4", "1"})), RatFun(1), RatFun(2), RatFun(), F(P({"1/2", "1"}), P({"-7", "1"})),
                   RatFun(1)});
  RatMat rot = RatMat::constant(2, 2, {q("3/5"), q("4/5"), q("-4/5"), q("3/5")});
  CHECK(transfer_between(rot * w2, w2) == rot);
  RatMat u = make_elementary(5, {1, 0});
  CHECK(transfer_between(u * w2, w2) == u);
  CHECK_THROWS_AS(transfer_between(RatFun(2) * w2, w2), Error);
  CHECK_THROWS_AS(transfer_between(w, w2), Error);
}

TEST_CASE("uniqueness verdicts") {
  RatMat w = scalar_w();
  Verdict v = uniqueness_check(w, -w, Region::inner(), Region::inner());
  CHECK(v.kind == Verdict::Kind::Unique);
  REQUIRE(v.transfer);
  CHECK(*v.transfer == RatMat::constant(1, 1, {-1}));
  CHECK(v.variant_p == "strict");
  Verdict flips = uniqueness_check(w, -w, parse_region("outer,flip=3"), parse_region("outer,flip=2"));
  CHECK(flips.kind == Verdict::Kind::Unique);

  // the classical regions put the pole at 3 inside the pole region
  Verdict outer = uniqueness_check(w, -w, Region::outer(), Region::outer());
  CHECK(outer.kind == Verdict::Kind::HypothesisFailed);
  CHECK(outer.failed == std::vector<std::string>{"analyticity"});

  Verdict pert = uniqueness_check(w, perturb_with_allpass(w, std::vector<Point>{5}), Region::inner(),
                                  parse_region("outer,flip=2"));
  CHECK(pert.kind == Verdict::Kind::HypothesisFailed);
  CHECK(std::find(pert.failed.begin(), pert.failed.end(), "minimality") != pert.failed.end());

  Verdict other = uniqueness_check(w, RatFun(2) * w, Region::inner(), Region::inner(true));
  CHECK(std::find(other.failed.begin(), other.failed.end(), "co_spectral") != other.failed.end());
  CHECK(other.variant_z == "weak");
}

TEST_CASE("perturbation") {
  RatMat w = scalar_w();
  CHECK(perturb_with_allpass(w, std::vector<Point>{}) == w);
  CHECK(mcmillan_degree(perturb_with_allpass(w, std::vector<Point>{5})) == 2);
  CHECK_THROWS_AS(perturb_with_allpass(w, std::vector<Point>{q("-1")}), Error);
  // a pole at the zero 2 cancels it, and the zero moves to 1/2
  RatMat moved = perturb_with_allpass(w, std::vector<Point>{2});
  CHECK(mcmillan_degree(moved) == 1);
  CHECK(zero_degree(moved, q("1/2")) == 1);
  CHECK(zero_degree(moved, 2) == 0);
}

TEST_CASE("orthogonal draws") {
  for (std::uint64_t s = 0; s < 20; ++s)
    for (std::size_t r = 1; r <= 3; ++r) {
      RatMat rot = random_orthogonal(s, r);
      CHECK(rot.is_constant());
      CHECK(rot.transpose() * rot == RatMat::identity(r));
    }
}

TEST_CASE("generated instances") {
  for (const auto& geo : sweep_geometries()) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      std::size_t n = 1 + seed % 3, r = 1 + seed % n, d = seed % 4;
      Instance inst = generate_instance(seed, r, n, d, geo.ap, geo.az);
      CHECK(inst.w.rows() == r);
      CHECK(inst.w.cols() == n);
      CHECK(inst.w.is_real());
      CHECK(is_spectral_factor(inst.w, inst.phi));
      CHECK(is_parahermitian(inst.phi.phi));
      CHECK(mcmillan_degree(inst.w) == d);
      CHECK(mcmillan_degree(inst.phi.phi) == 2 * d);
      CHECK(analytic_in(inst.w, geo.ap));
      CHECK(analytic_in(minimal_right_inverse(inst.w), geo.az));
      CHECK(zeros_outside(inst.w, geo.az));
      CHECK(psd_on_circle(inst.phi).psd);
    }
  }
  Instance flat = generate_instance(4, 2, 2, 0, Region::outer(), Region::outer());
  CHECK(flat.w.is_constant());
  CHECK(mcmillan_degree(flat.phi.phi) == 0);

  Instance a = generate_instance(7, 2, 3, 3, parse_region("outer,flip=3"), parse_region("outer,flip=-5/2"));
  Instance b = generate_instance(7, 2, 3, 3, parse_region("outer,flip=3"), parse_region("outer,flip=-5/2"));
  CHECK(a.w == b.w);
  CHECK_THROWS_AS(generate_instance(1, 3, 2, 1, Region::outer(), Region::outer()), Error);
}

TEST_CASE("small sweep") {
  SweepReport rep = sweep(3, 12);
  CHECK(rep.records.size() == 12);
  CHECK(rep.theorem_violated == 0);
  CHECK(rep.mismatched == 0);
  CHECK(rep.unique == 12);
}
