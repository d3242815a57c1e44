#pragma once

#include "waveset/construct.hpp"
#include "waveset/intervals.hpp"
#include "waveset/msf2d.hpp"
#include "waveset/piecewise.hpp"
#include "waveset/spectral.hpp"
#include "waveset/step_fn.hpp"

#include <json.hpp>

#include <string_view>

namespace waveset {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become InputError.
Json parse_json_text(std::string_view text);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Interval& iv);
Interval interval_from_json(const Json& j);

Json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const Json& j);

Json to_json(const StepFn& f);
StepFn step_fn_from_json(const Json& j);
/// step_fn as is, interval_set as its indicator.
StepFn step_fn_from_any(const Json& j);

Json to_json(const QuadScalar& x);
QuadScalar quad_from_json(const Json& j);

Json to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

Json to_json(const Piecewise& p);
Piecewise piecewise_from_json(const Json& j);

Json to_json(const DimFnWindow& w);
Json to_json(const DefectReport& d);

}  // namespace waveset
