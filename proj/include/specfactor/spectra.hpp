#pragma once

// Spectra, spectral factors, symplectic regions, and a harness that checks
// the uniqueness of stochastically minimal spectral factors on generated
// instances.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specfactor/allpass.hpp"
#include "specfactor/ratmat.hpp"

namespace specfactor {

/// A symplectic region: of every pair (z, 1/z) off the unit circle exactly one
/// point belongs to it. The default side picks |z| > 1 (Outer) or |z| < 1
/// (Inner); flipped pairs swap that choice. weak adds the unit circle.
class Region {
 public:
  enum class Side { Outer, Inner };

  Region() = default;
  /// Flips may be given by either member of the pair; throws CirclePoint for a
  /// flip on the unit circle.
  Region(Side side, const std::vector<Point>& flips = {}, bool weak = false);

  static Region outer(bool weak = false) { return Region(Side::Outer, {}, weak); }
  static Region inner(bool weak = false) { return Region(Side::Inner, {}, weak); }

  Side side() const { return side_; }
  /// Canonical representatives (|p| > 1, infinity for {0, inf}), sorted.
  const std::vector<Point>& flipped() const { return flipped_; }
  bool weak() const { return weak_; }

  bool contains(const Point& p) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  Side side_ = Side::Outer;
  std::vector<Point> flipped_;
  bool weak_ = false;
};

inline bool region_contains(const Region& r, const Point& p) { return r.contains(p); }

/// "outer|inner[,flip=p1;p2...][,weak]"
Region parse_region(std::string_view spec);
std::string to_string(const Region& r);

/// Para-Hermitian real rational matrix.
struct Spectrum {
  RatMat phi;
};

/// Validates squareness, real coefficients, para-Hermitian symmetry and an
/// even McMillan degree. Throws MalformedInput otherwise.
Spectrum make_spectrum(RatMat phi);

/// No pole of g, infinity included, lies in r.
bool analytic_in(const RatMat& g, const Region& r);

/// No zero of g lies in r; for full row rank g this says its minimal right
/// inverse is analytic in r.
bool zeros_outside(const RatMat& g, const Region& r);

/// W* W == phi exactly. Throws DimensionMismatch.
bool is_spectral_factor(const RatMat& w, const Spectrum& phi);

/// 2 deg_M(W) == deg_M(phi). Throws NotSpectralFactor when w is not a factor.
bool is_stochastically_minimal(const RatMat& w, const Spectrum& phi);

struct PsdReport {
  bool psd = true;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  double min_eigenvalue = 0;
};

/// Floating-point check of phi(e^{jw}) >= 0 at equispaced w, skipping samples
/// that sit on a pole. Advisory only.
PsdReport psd_on_circle(const Spectrum& phi, std::size_t samples = 64, double tol = 1e-9);

/// T = W1 W^{-R}. Throws RankDeficient for inputs without full row rank,
/// DimensionMismatch for different shapes, and NotCoSpectral when T is not
/// para-unitary or W1 != T W.
RatMat transfer_between(const RatMat& w1, const RatMat& w);

struct Verdict {
  enum class Kind { HypothesisFailed, Unique, TheoremViolated };
  Kind kind = Kind::HypothesisFailed;
  /// Names of the failed hypotheses: rank, real, co_spectral, analyticity,
  /// minimality.
  std::vector<std::string> failed;
  std::optional<RatMat> transfer;
  /// "strict" or "weak" for each region.
  std::string variant_p, variant_z;
};

std::string_view to_string(Verdict::Kind k);

Verdict uniqueness_check(const RatMat& w, const RatMat& w1, const Region& ap, const Region& az);

struct Instance {
  Spectrum phi;
  RatMat w;
  std::size_t attempts = 0;
};

/// Deterministic W = diag(g_1..g_r) M with deg_M(W) = degree, poles outside
/// ap, zeros outside az, real coefficients, and phi = W* W. Throws
/// RetryExhausted when no admissible draw is found.
Instance generate_instance(std::uint64_t seed, std::size_t r, std::size_t n, std::size_t degree, const Region& ap,
                           const Region& az);

/// (prod_k U_k) W with elementary factors at the given poles along the
/// all-ones direction. Throws CirclePoint.
RatMat perturb_with_allpass(const RatMat& w, const std::vector<Point>& poles);
RatMat perturb_with_allpass(const RatMat& w, const std::vector<ElementaryFactor>& factors);

/// Rational orthogonal r x r matrix: a signed permutation times plane
/// rotations by Pythagorean angles.
RatMat random_orthogonal(std::uint64_t seed, std::size_t r);

struct SweepRecord {
  std::uint64_t seed = 0;
  std::string geometry;
  std::size_t r = 0, n = 0, degree = 0;
  Verdict::Kind rotated = Verdict::Kind::HypothesisFailed;
  bool transfer_matches = false;
  Verdict::Kind perturbed = Verdict::Kind::HypothesisFailed;
  std::vector<std::string> perturbed_failed;
  bool psd = false;
};

struct SweepReport {
  std::uint64_t seed = 0;
  std::vector<SweepRecord> records;
  std::size_t unique = 0;
  std::size_t hypothesis_failed = 0;
  std::size_t theorem_violated = 0;
  std::size_t mismatched = 0;
};

struct Geometry {
  std::string name;
  Region ap, az;
};

/// Region pairs cycled through by the sweep: classical, disjoint flips, weak.
std::vector<Geometry> sweep_geometries();

/// Runs `instances` seeded instances: (W, QW) must come out unique with
/// T = Q, and an all-pass perturbation of W must fail a hypothesis.
SweepReport sweep(std::uint64_t seed, std::size_t instances);

}  // namespace specfactor
