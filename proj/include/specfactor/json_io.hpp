#pragma once

// JSON forms of the library's values. Scalars are always exact strings
// ("a/b+c/d*i", "inf"); polynomials are ascending coefficient arrays.

#include <json.hpp>

#include <string_view>

#include "specfactor/allpass.hpp"
#include "specfactor/cancellation.hpp"
#include "specfactor/spectra.hpp"

namespace specfactor::io {

using nlohmann::json;

inline constexpr std::string_view kSchema = "specfactor/1";

json to_json(const GaussianRational& a);
json to_json(const Point& p);
json to_json(const Poly& p);
json to_json(const RatFun& f);
json to_json(const RatMat& g);
json to_json(const SMStructure& s);
json to_json(const CancellationReport& r);
json to_json(const AllPassFactorization& f);
json to_json(const Verdict& v);
json to_json(const SweepReport& r);

// Readers throw MalformedInput on anything that does not fit the schema.
GaussianRational scalar_from_json(const json& j);
Point point_from_json(const json& j);
Poly poly_from_json(const json& j);
/// {num, den} (den optional), or a scalar string for a constant.
RatFun ratfun_from_json(const json& j);
/// {rows, cols, entries}; entries is a row-major grid of rational functions.
RatMat ratmat_from_json(const json& j);
SMStructure sm_from_json(const json& j);
CancellationReport report_from_json(const json& j);
AllPassFactorization factorization_from_json(const json& j);

}  // namespace specfactor::io
