#include "specfactor/json_io.hpp"

#include "specfactor/error.hpp"

namespace specfactor::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    malformed(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

bool bool_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_boolean()) malformed(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

json poly_list(const std::vector<Poly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

std::vector<Poly> poly_list_from(const json& j) {
  if (!j.is_array()) malformed("expected an array of polynomials");
  std::vector<Poly> out;
  for (const auto& p : j) out.push_back(poly_from_json(p));
  return out;
}

}  // namespace

json to_json(const GaussianRational& a) { return to_string(a); }
json to_json(const Point& p) { return to_string(p); }

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

json to_json(const RatFun& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const RatMat& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(to_json(g(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", g.rows()}, {"cols", g.cols()}, {"entries", std::move(rows)}};
}

json to_json(const SMStructure& s) { return {{"rank", s.rank}, {"eps", poly_list(s.eps)}, {"psi", poly_list(s.psi)}}; }

json to_json(const CancellationReport& r) {
  return {{"point", to_json(r.point)},
          {"dp_G", r.dp_G},
          {"dp_H", r.dp_H},
          {"dp_GH", r.dp_GH},
          {"dz_G", r.dz_G},
          {"dz_H", r.dz_H},
          {"dz_GH", r.dz_GH},
          {"pole_cancel", r.pole_cancel},
          {"zero_cancel", r.zero_cancel},
          {"zero_pole_cancel", r.zero_pole_cancel}};
}

json to_json(const AllPassFactorization& f) {
  json constant = json::array();
  for (std::size_t i = 0; i < f.constant.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.constant.cols(); ++j) row.push_back(to_json(f.constant(i, j).constant_value()));
    constant.push_back(std::move(row));
  }
  json factors = json::array();
  for (const auto& u : f.factors) {
    json v = json::array();
    for (const auto& x : u.v) v.push_back(to_json(x));
    factors.push_back({{"alpha", to_json(u.alpha)}, {"v", std::move(v)}});
  }
  return {{"constant", std::move(constant)}, {"factors", std::move(factors)}};
}

json to_json(const Verdict& v) {
  return {{"verdict", std::string(to_string(v.kind))},
          {"failed", v.failed},
          {"transfer", v.transfer ? to_json(*v.transfer) : json(nullptr)},
          {"variant_p", v.variant_p},
          {"variant_z", v.variant_z}};
}

json to_json(const SweepReport& r) {
  json records = json::array();
  for (const auto& rec : r.records)
    records.push_back({{"seed", rec.seed},
                       {"geometry", rec.geometry},
                       {"r", rec.r},
                       {"n", rec.n},
                       {"degree", rec.degree},
                       {"rotated", std::string(to_string(rec.rotated))},
                       {"transfer_matches", rec.transfer_matches},
                       {"perturbed", std::string(to_string(rec.perturbed))},
                       {"perturbed_failed", rec.perturbed_failed},
                       {"psd", rec.psd}});
  return {{"seed", r.seed},
          {"instances", r.records.size()},
          {"unique", r.unique},
          {"hypothesis_failed", r.hypothesis_failed},
          {"theorem_violated", r.theorem_violated},
          {"mismatched", r.mismatched},
          {"records", std::move(records)}};
}

GaussianRational scalar_from_json(const json& j) {
  if (!j.is_string()) malformed("scalar must be a string, got " + j.dump());
  return parse_scalar(j.get<std::string>());
}

Point point_from_json(const json& j) {
  if (!j.is_string()) malformed("point must be a string, got " + j.dump());
  return parse_point(j.get<std::string>());
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) malformed("polynomial must be an array of scalar strings");
  std::vector<GaussianRational> c;
  for (const auto& x : j) c.push_back(scalar_from_json(x));
  return Poly(std::move(c));
}

RatFun ratfun_from_json(const json& j) {
  if (j.is_string()) return RatFun(scalar_from_json(j));
  Poly num = poly_from_json(field(j, "num"));
  Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(1);
  if (den.is_zero()) malformed("rational function with zero denominator");
  return RatFun(std::move(num), std::move(den));
}

RatMat ratmat_from_json(const json& j) {
  const std::size_t rows = size_field(j, "rows"), cols = size_field(j, "cols");
  const json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) malformed("entries must have 'rows' rows");
  std::vector<RatFun> entries;
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != cols) malformed("every entry row must have 'cols' entries");
    for (const auto& x : row) entries.push_back(ratfun_from_json(x));
  }
  return RatMat(rows, cols, std::move(entries));
}

SMStructure sm_from_json(const json& j) {
  SMStructure s;
  s.rank = size_field(j, "rank");
  s.eps = poly_list_from(field(j, "eps"));
  s.psi = poly_list_from(field(j, "psi"));
  if (s.eps.size() != s.rank || s.psi.size() != s.rank) malformed("eps and psi must have 'rank' entries");
  return s;
}

CancellationReport report_from_json(const json& j) {
  CancellationReport r;
  r.point = point_from_json(field(j, "point"));
  r.dp_G = size_field(j, "dp_G");
  r.dp_H = size_field(j, "dp_H");
  r.dp_GH = size_field(j, "dp_GH");
  r.dz_G = size_field(j, "dz_G");
  r.dz_H = size_field(j, "dz_H");
  r.dz_GH = size_field(j, "dz_GH");
  r.pole_cancel = bool_field(j, "pole_cancel");
  r.zero_cancel = bool_field(j, "zero_cancel");
  r.zero_pole_cancel = bool_field(j, "zero_pole_cancel");
  return r;
}

AllPassFactorization factorization_from_json(const json& j) {
  const json& c = field(j, "constant");
  if (!c.is_array() || c.empty()) malformed("constant must be a non-empty grid of scalars");
  const std::size_t r = c.size();
  std::vector<GaussianRational> values;
  for (const auto& row : c) {
    if (!row.is_array() || row.size() != r) malformed("constant must be square");
    for (const auto& x : row) values.push_back(scalar_from_json(x));
  }
  AllPassFactorization f{RatMat::constant(r, r, values), {}};
  const json& factors = field(j, "factors");
  if (!factors.is_array()) malformed("factors must be an array");
  for (const auto& u : factors) {
    ElementaryFactor e;
    e.alpha = point_from_json(field(u, "alpha"));
    const json& v = field(u, "v");
    if (!v.is_array() || v.size() != r) malformed("factor vector length must match the constant");
    for (const auto& x : v) e.v.push_back(scalar_from_json(x));
    f.factors.push_back(std::move(e));
  }
  return f;
}

}  // namespace specfactor::io
