#include "specfactor/cancellation.hpp"

#include <algorithm>

#include "specfactor/error.hpp"

namespace specfactor {

namespace {

RatMat checked_product(const RatMat& g, const RatMat& h) {
  if (g.cols() != h.rows()) throw Error(ErrorCode::DimensionMismatch, "product dimensions do not agree");
  if (g.is_zero() || h.is_zero()) throw Error(ErrorCode::InvalidArgument, "cancellation analysis of a zero factor");
  RatMat gh = g * h;
  if (gh.is_zero()) throw Error(ErrorCode::InvalidArgument, "product is the zero matrix");
  return gh;
}

void require_full_rank(const ProductAnalysis& a) {
  if (!a.full_rank_hypothesis())
    throw Error(ErrorCode::HypothesisViolated, "needs rank G = cols G = rows H = rank H");
}

}  // namespace

ProductAnalysis::ProductAnalysis(const RatMat& g, const RatMat& h)
    : g_(g), h_(h), gh_(checked_product(g, h)),
      full_rank_(g_.rank() == g.cols() && h_.rank() == h.rows()) {}

CancellationReport ProductAnalysis::report(const Point& p) const {
  CancellationReport r;
  r.point = p;
  r.dp_G = g_.pole_degree(p);
  r.dp_H = h_.pole_degree(p);
  r.dp_GH = gh_.pole_degree(p);
  r.dz_G = g_.zero_degree(p);
  r.dz_H = h_.zero_degree(p);
  r.dz_GH = gh_.zero_degree(p);
  r.pole_cancel = r.dp_GH < r.dp_G + r.dp_H;
  r.zero_cancel = r.dz_GH < r.dz_G + r.dz_H;
  r.zero_pole_cancel = r.pole_cancel && r.zero_cancel;
  return r;
}

std::vector<Point> ProductAnalysis::support() const {
  std::vector<Point> out{Point::infinity()};
  for (const PoleZeroProfile* p : {&g_, &h_, &gh_}) {
    for (auto& x : p->poles()) out.push_back(x);
    for (auto& x : p->zeros()) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), PointLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CancellationReport analyze_product(const RatMat& g, const RatMat& h, const Point& p) {
  return ProductAnalysis(g, h).report(p);
}

bool check_lemma2(const ProductAnalysis& a, const Point& p) {
  require_full_rank(a);
  CancellationReport r = a.report(p);
  return !(r.pole_cancel || r.zero_cancel) || r.zero_pole_cancel;
}

bool check_lemma2(const RatMat& g, const RatMat& h, const Point& p) { return check_lemma2(ProductAnalysis(g, h), p); }

bool check_degree_identity(const ProductAnalysis& a, const Point& p) {
  require_full_rank(a);
  CancellationReport r = a.report(p);
  auto s = [](std::size_t x) { return static_cast<long>(x); };
  return s(r.dp_GH) - s(r.dp_G) - s(r.dp_H) == s(r.dz_GH) - s(r.dz_G) - s(r.dz_H);
}

bool check_degree_identity(const RatMat& g, const RatMat& h, const Point& p) {
  return check_degree_identity(ProductAnalysis(g, h), p);
}

bool check_lemma3(const ProductAnalysis& a, const Point& p) {
  require_full_rank(a);
  CancellationReport r = a.report(p);
  if (r.dz_G != 0 || r.dz_H != 0)
    throw Error(ErrorCode::HypothesisViolated, "a factor has a zero at " + to_string(p));
  return r.dp_GH == r.dp_G + r.dp_H;
}

bool check_lemma3(const RatMat& g, const RatMat& h, const Point& p) { return check_lemma3(ProductAnalysis(g, h), p); }

std::vector<Point> cancellation_support(const RatMat& g, const RatMat& h) { return ProductAnalysis(g, h).support(); }

}  // namespace specfactor
