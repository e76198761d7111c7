#ifndef HEATSYM_IO_HPP
#define HEATSYM_IO_HPP

#include <json.hpp>

#include "heatsym/curvature.hpp"
#include "heatsym/trig.hpp"

namespace heatsym::io {

using nlohmann::json;

/// Curvature schema (1-based indices, independent components only,
/// symmetries auto-completed, contradictions rejected):
/// {"n": int, "riemann": [[i,j,k,l,"num/den"], ...],
///  "twist": {"rank": p, "F": [[k,l,[["re","im"], ... p*p row major]], ...]}}
CurvatureData curvature_from_json(const json& j);

/// Trig function schema: {"dim": d, "terms": [[[m1..md], mantissa], ...]}
/// where mantissa is ["c0","c1","c2","c3"] on the zeta basis (an optional
/// fifth integer entry is the pi half-grade).
TrigPoly trig_from_json(const json& j);
/// Matrix variant: {"dim": d, "rank": q, "entries": [[i,j,{terms...}], ...]}
/// (0-based matrix positions).
TrigMatrix trig_matrix_from_json(const json& j);

json scalar_to_json(const ExtScalar& v);
json form_to_json(const FormElement& f);

CurvatureData load_curvature(const std::string& path);
json load_json(const std::string& path);

} // namespace heatsym::io

#endif
