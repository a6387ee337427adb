#include "specfactor/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "specfactor/error.hpp"

namespace specfactor {

Region::Region(Side side, const std::vector<Point>& flips, bool weak) : side_(side), weak_(weak) {
  for (const auto& p : flips) {
    CircleOrder o = abs_vs_one(p);
    if (o == CircleOrder::Equal) throw Error(ErrorCode::CirclePoint, "region flip on the unit circle: " + to_string(p));
    flipped_.push_back(o == CircleOrder::Greater ? p : symplectic_pair(p));
  }
  std::sort(flipped_.begin(), flipped_.end(), PointLess{});
  flipped_.erase(std::unique(flipped_.begin(), flipped_.end()), flipped_.end());
}

bool Region::contains(const Point& p) const {
  CircleOrder o = abs_vs_one(p);
  if (o == CircleOrder::Equal) return weak_;
  const bool outside_disc = o == CircleOrder::Greater;
  const bool on_default = (side_ == Side::Outer) == outside_disc;
  const Point canonical = outside_disc ? p : symplectic_pair(p);
  const bool flipped = std::binary_search(flipped_.begin(), flipped_.end(), canonical, PointLess{});
  return on_default != flipped;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

}  // namespace

Region parse_region(std::string_view spec) {
  auto parts = split(spec, ',');
  Region::Side side;
  if (parts[0] == "outer")
    side = Region::Side::Outer;
  else if (parts[0] == "inner")
    side = Region::Side::Inner;
  else
    throw Error(ErrorCode::MalformedInput, "region must start with outer or inner: '" + std::string(spec) + "'");
  std::vector<Point> flips;
  bool weak = false;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k] == "weak") {
      weak = true;
    } else if (parts[k].starts_with("flip=")) {
      for (auto p : split(parts[k].substr(5), ';')) flips.push_back(parse_point(p));
    } else {
      throw Error(ErrorCode::MalformedInput, "unknown region option '" + std::string(parts[k]) + "'");
    }
  }
  return Region(side, flips, weak);
}

std::string to_string(const Region& r) {
  std::string out = r.side() == Region::Side::Outer ? "outer" : "inner";
  if (!r.flipped().empty()) {
    out += ",flip=";
    for (std::size_t k = 0; k < r.flipped().size(); ++k) {
      if (k) out += ';';
      out += to_string(r.flipped()[k]);
    }
  }
  if (r.weak()) out += ",weak";
  return out;
}

Spectrum make_spectrum(RatMat phi) {
  if (!phi.is_square()) throw Error(ErrorCode::MalformedInput, "spectrum must be square");
  if (!phi.is_real()) throw Error(ErrorCode::MalformedInput, "spectrum must have real coefficients");
  if (!is_parahermitian(phi)) throw Error(ErrorCode::MalformedInput, "spectrum is not para-Hermitian");
  if (!phi.is_zero() && mcmillan_degree(phi) % 2 != 0)
    throw Error(ErrorCode::MalformedInput, "spectrum has odd McMillan degree");
  return Spectrum{std::move(phi)};
}

bool analytic_in(const RatMat& g, const Region& r) {
  if (g.is_zero()) return true;
  for (const auto& p : PoleZeroProfile(g).poles())
    if (r.contains(p)) return false;
  return true;
}

bool zeros_outside(const RatMat& g, const Region& r) {
  if (g.is_zero()) return true;
  for (const auto& p : PoleZeroProfile(g).zeros())
    if (r.contains(p)) return false;
  return true;
}

bool is_spectral_factor(const RatMat& w, const Spectrum& phi) {
  if (!phi.phi.is_square() || w.cols() != phi.phi.rows())
    throw Error(ErrorCode::DimensionMismatch, "factor columns do not match the spectrum size");
  return paraconj_transpose(w) * w == phi.phi;
}

bool is_stochastically_minimal(const RatMat& w, const Spectrum& phi) {
  if (!is_spectral_factor(w, phi)) throw Error(ErrorCode::NotSpectralFactor, "W* W differs from the spectrum");
  if (phi.phi.is_zero()) return true;
  return 2 * mcmillan_degree(w) == mcmillan_degree(phi.phi);
}

namespace {

using Cd = std::complex<double>;

Cd to_complex(const GaussianRational& a) { return {a.re().get_d(), a.im().get_d()}; }

Cd eval_double(const Poly& p, Cd z) {
  Cd acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + to_complex(c[k]);
  return acc;
}

}  // namespace

PsdReport psd_on_circle(const Spectrum& phi, std::size_t samples, double tol) {
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "psd_on_circle needs at least one sample");
  const RatMat& g = phi.phi;
  const std::size_t n = g.rows();
  PsdReport out;
  bool first = true;
  for (std::size_t k = 0; k < samples; ++k) {
    const double w = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    const Cd z = std::polar(1.0, w);
    Eigen::MatrixXcd a(n, n);
    bool at_pole = false;
    for (std::size_t i = 0; i < n && !at_pole; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Cd d = eval_double(g(i, j).den(), z);
        if (std::abs(d) < 1e-12) {
          at_pole = true;
          break;
        }
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = eval_double(g(i, j).num(), z) / d;
      }
    if (at_pole) {
      ++out.skipped;
      continue;
    }
    ++out.evaluated;
    Eigen::MatrixXcd h = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    double lo = n == 0 ? 0.0 : es.eigenvalues().minCoeff();
    out.min_eigenvalue = first ? lo : std::min(out.min_eigenvalue, lo);
    first = false;
    if (lo < -tol) out.psd = false;
  }
  return out;
}

RatMat transfer_between(const RatMat& w1, const RatMat& w) {
  if (w1.rows() != w.rows() || w1.cols() != w.cols())
    throw Error(ErrorCode::DimensionMismatch, "factors have different shapes");
  if (normal_rank(w1) != w1.rows()) throw Error(ErrorCode::RankDeficient, "W1 does not have full row rank");
  RatMat t = w1 * minimal_right_inverse(w);
  if (!is_paraunitary(t)) throw Error(ErrorCode::NotCoSpectral, "W1 W^-R is not para-unitary");
  if (!(t * w == w1)) throw Error(ErrorCode::NotCoSpectral, "W1 != T W");
  return t;
}

std::string_view to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::HypothesisFailed: return "HYPOTHESIS_FAILED";
    case Verdict::Kind::Unique: return "UNIQUE";
    case Verdict::Kind::TheoremViolated: return "THEOREM_VIOLATED";
  }
  return "?";
}

Verdict uniqueness_check(const RatMat& w, const RatMat& w1, const Region& ap, const Region& az) {
  Verdict v;
  v.variant_p = ap.weak() ? "weak" : "strict";
  v.variant_z = az.weak() ? "weak" : "strict";

  const bool shapes = w.rows() == w1.rows() && w.cols() == w1.cols() && w.rows() > 0;
  if (!shapes || normal_rank(w) != w.rows() || normal_rank(w1) != w1.rows()) {
    v.failed.push_back("rank");
    return v;
  }
  if (!w.is_real() || !w1.is_real()) v.failed.push_back("real");

  RatMat phi = paraconj_transpose(w) * w;
  RatMat phi1 = paraconj_transpose(w1) * w1;
  if (!(phi == phi1)) v.failed.push_back("co_spectral");

  PoleZeroProfile pw(w), pw1(w1);
  bool analytic = true;
  for (const PoleZeroProfile* p : {&pw, &pw1}) {
    for (const auto& x : p->poles()) analytic = analytic && !ap.contains(x);
    for (const auto& x : p->zeros()) analytic = analytic && !az.contains(x);
  }
  if (!analytic) v.failed.push_back("analyticity");

  const std::size_t dphi = mcmillan_degree(phi), dphi1 = phi1 == phi ? dphi : mcmillan_degree(phi1);
  if (2 * pw.mcmillan_degree() != dphi || 2 * pw1.mcmillan_degree() != dphi1) v.failed.push_back("minimality");

  if (!v.failed.empty()) return v;

  RatMat t = transfer_between(w1, w);
  bool orthogonal = t.is_constant() && t.is_real() && t.transpose() * t == RatMat::identity(t.rows());
  v.kind = orthogonal ? Verdict::Kind::Unique : Verdict::Kind::TheoremViolated;
  v.transfer = std::move(t);
  return v;
}

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool coin(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  mpq_class small_rational(long max_num, long max_den) {
    long num = 0;
    while (num == 0) num = between(-max_num, max_num);
    return mpq_class(num, between(1, max_den));
  }

 private:
  std::mt19937_64 rng_;
};

struct EntryPoints {
  std::vector<Point> poles, zeros;
};

bool collides(const Point& zero, const std::vector<Point>& poles) {
  for (const auto& p : poles)
    if (zero == p || zero == symplectic_pair(p) || zero == conj_pair(p)) return true;
  return false;
}

// Extra candidates so that flipped pairs actually get used.
std::vector<Point> special_points(const Region& ap, const Region& az) {
  std::vector<Point> out;
  for (const Region* r : {&ap, &az})
    for (const auto& f : r->flipped()) {
      out.push_back(f);
      out.push_back(symplectic_pair(f));
    }
  return out;
}

// One admissible point, or a conjugate pair, outside `forbidden`.
std::vector<Point> draw_points(Draw& d, const Region& forbidden, bool want_pair, const std::vector<Point>& specials) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Point> cand;
    if (want_pair) {
      mpq_class re = d.small_rational(6, 4), im = d.small_rational(6, 4);
      cand = {GaussianRational(re, im), GaussianRational(re, -im)};
    } else if (!specials.empty() && d.coin(1, 4)) {
      const Point& s = specials[d.below(specials.size())];
      if (s.is_finite() && !s.value().is_real()) continue;
      cand = {s};
    } else if (d.coin(1, 10)) {
      cand = {d.coin(1, 2) ? Point(0) : Point::infinity()};
    } else {
      cand = {GaussianRational(d.small_rational(7, 4))};
    }
    if (abs_vs_one(cand[0]) == CircleOrder::Equal) continue;
    if (forbidden.contains(cand[0]))
      for (auto& c : cand) c = symplectic_pair(c);
    bool ok = true;
    for (const auto& c : cand) ok = ok && !forbidden.contains(c);
    if (ok) return cand;
  }
  return {};
}

std::vector<std::size_t> split_degree(Draw& d, std::size_t degree, std::size_t r) {
  std::vector<std::size_t> m(r, 0);
  for (std::size_t k = 0; k < degree; ++k) ++m[d.below(r)];
  return m;
}

std::optional<EntryPoints> draw_entry(Draw& d, std::size_t m, const Region& ap, const Region& az,
                                      const std::vector<Point>& specials) {
  EntryPoints e;
  while (e.poles.size() < m) {
    bool pair = m - e.poles.size() >= 2 && d.coin(1, 3);
    auto pts = draw_points(d, ap, pair, specials);
    if (pts.empty()) return std::nullopt;
    for (auto& p : pts) e.poles.push_back(std::move(p));
  }
  int budget = 64;
  while (e.zeros.size() < m) {
    if (--budget < 0) return std::nullopt;
    bool pair = m - e.zeros.size() >= 2 && d.coin(1, 3);
    auto pts = draw_points(d, az, pair, specials);
    if (pts.empty()) return std::nullopt;
    bool clash = false;
    for (const auto& z : pts) clash = clash || collides(z, e.poles);
    if (clash) continue;
    for (auto& z : pts) e.zeros.push_back(std::move(z));
  }
  return e;
}

RatFun entry_function(const EntryPoints& e, const GaussianRational& gain) {
  Poly num(gain), den(1);
  for (const auto& z : e.zeros)
    if (z.is_finite()) num *= Poly::linear(z.value());
  for (const auto& p : e.poles)
    if (p.is_finite()) den *= Poly::linear(p.value());
  return RatFun(num, den);
}

}  // namespace

Instance generate_instance(std::uint64_t seed, std::size_t r, std::size_t n, std::size_t degree, const Region& ap,
                           const Region& az) {
  if (r == 0 || r > n) throw Error(ErrorCode::InvalidArgument, "generator needs 0 < r <= n");
  Draw d(seed);
  const std::vector<Point> specials = special_points(ap, az);
  constexpr std::size_t kAttempts = 50;
  std::string last_problem = "no attempt made";
  for (std::size_t attempt = 1; attempt <= kAttempts; ++attempt) {
    std::vector<std::size_t> m = split_degree(d, degree, r);
    std::vector<RatFun> diag;
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      auto e = draw_entry(d, m[i], ap, az, specials);
      if (!e) {
        ok = false;
        last_problem = "could not place admissible points in entry " + std::to_string(i);
        break;
      }
      diag.push_back(entry_function(*e, GaussianRational(d.small_rational(5, 3))));
    }
    if (!ok) continue;

    std::vector<GaussianRational> mv(r * n);
    for (auto& x : mv) x = GaussianRational(d.between(-3, 3));
    RatMat mm = RatMat::constant(r, n, mv);
    if (normal_rank(mm) != r) {
      last_problem = "constant factor lost rank";
      continue;
    }

    RatMat w = RatMat::diagonal(diag) * mm;
    Spectrum phi{paraconj_transpose(w) * w};
    PoleZeroProfile prof(w);
    bool analytic = true;
    for (const auto& p : prof.poles()) analytic = analytic && !ap.contains(p);
    bool zeros_ok = true;
    for (const auto& z : prof.zeros()) zeros_ok = zeros_ok && !az.contains(z);
    if (!analytic || !zeros_ok) {
      last_problem = "pole or zero landed inside its region";
      continue;
    }
    if (prof.mcmillan_degree() != degree || !is_stochastically_minimal(w, phi)) {
      std::string pts;
      for (const auto& p : prof.poles()) pts += " " + to_string(p);
      last_problem = "degree collapsed; poles:" + pts;
      continue;
    }
    return Instance{std::move(phi), std::move(w), attempt};
  }
  throw Error(ErrorCode::RetryExhausted, "generate_instance: " + last_problem);
}

RatMat perturb_with_allpass(const RatMat& w, const std::vector<ElementaryFactor>& factors) {
  RatMat u = RatMat::identity(w.rows());
  for (const auto& f : factors) u = u * make_elementary(f);
  return u * w;
}

RatMat perturb_with_allpass(const RatMat& w, const std::vector<Point>& poles) {
  std::vector<ElementaryFactor> factors;
  for (const auto& p : poles) factors.push_back({p, std::vector<GaussianRational>(w.rows(), GaussianRational(1))});
  return perturb_with_allpass(w, factors);
}

RatMat random_orthogonal(std::uint64_t seed, std::size_t r) {
  Draw d(seed);
  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = i;
  for (std::size_t i = r; i > 1; --i) std::swap(perm[i - 1], perm[d.below(i)]);
  std::vector<GaussianRational> q(r * r);
  for (std::size_t i = 0; i < r; ++i) q[i * r + perm[i]] = d.coin(1, 2) ? 1 : -1;
  RatMat out = RatMat::constant(r, r, q);

  static const long triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}};
  const std::size_t rotations = r < 2 ? 0 : d.below(3);
  for (std::size_t k = 0; k < rotations; ++k) {
    std::size_t i = d.below(r), j = d.below(r - 1);
    if (j >= i) ++j;
    const long* t = triples[d.below(3)];
    mpq_class c(t[0], t[2]), s(t[1], t[2]);
    if (d.coin(1, 2)) s = -s;
    RatMat g = RatMat::identity(r);
    g(i, i) = RatFun(GaussianRational(c));
    g(j, j) = RatFun(GaussianRational(c));
    g(i, j) = RatFun(GaussianRational(-s));
    g(j, i) = RatFun(GaussianRational(s));
    out = g * out;
  }
  return out;
}

std::vector<Geometry> sweep_geometries() {
  return {
      {"classical", Region::outer(), Region::outer()},
      {"flipped", parse_region("outer,flip=3;inf"), parse_region("outer,flip=-5/2;2+1*i;2-1*i")},
      {"weak", Region::outer(true), Region::outer(true)},
      {"mixed_weak", parse_region("outer,weak"), parse_region("inner,flip=1/4,weak")},
  };
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SweepReport sweep(std::uint64_t seed, std::size_t instances) {
  SweepReport report;
  report.seed = seed;
  const auto geometries = sweep_geometries();
  for (std::size_t k = 0; k < instances; ++k) {
    SweepRecord rec;
    rec.seed = mix(seed * 1000003 + k);
    const Geometry& geo = geometries[k % geometries.size()];
    rec.geometry = geo.name;
    Draw d(rec.seed);
    rec.n = 1 + d.below(3);
    rec.r = 1 + d.below(rec.n);
    rec.degree = d.below(4);

    Instance inst = generate_instance(rec.seed, rec.r, rec.n, rec.degree, geo.ap, geo.az);
    rec.psd = psd_on_circle(inst.phi).psd;

    RatMat q = random_orthogonal(rec.seed ^ 0x5bd1e995, rec.r);
    Verdict rotated = uniqueness_check(inst.w, q * inst.w, geo.ap, geo.az);
    rec.rotated = rotated.kind;
    rec.transfer_matches = rotated.transfer && *rotated.transfer == q;

    // One real pole off the circle; it either lands in the pole region or
    // raises the McMillan degree.
    Point pole;
    do {
      pole = GaussianRational(d.small_rational(9, 4));
    } while (abs_vs_one(pole) == CircleOrder::Equal);
    Verdict perturbed = uniqueness_check(inst.w, perturb_with_allpass(inst.w, std::vector<Point>{pole}), geo.ap, geo.az);
    rec.perturbed = perturbed.kind;
    rec.perturbed_failed = perturbed.failed;

    for (auto kind : {rec.rotated, rec.perturbed}) {
      if (kind == Verdict::Kind::Unique) ++report.unique;
      if (kind == Verdict::Kind::HypothesisFailed) ++report.hypothesis_failed;
      if (kind == Verdict::Kind::TheoremViolated) ++report.theorem_violated;
    }
    bool named = std::any_of(rec.perturbed_failed.begin(), rec.perturbed_failed.end(),
                             [](const std::string& s) { return s == "minimality" || s == "analyticity"; });
    if (rec.rotated != Verdict::Kind::Unique || !rec.transfer_matches ||
        rec.perturbed != Verdict::Kind::HypothesisFailed || !named || !rec.psd)
      ++report.mismatched;
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace specfactor
