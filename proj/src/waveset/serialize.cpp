#include "waveset/serialize.hpp"

#include "waveset/errors.hpp"

namespace waveset {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void expect_type(const Json& j, const char* type) {
  const Json& t = field(j, "type");
  if (!t.is_string() || t.get<std::string>() != type)
    throw InputError(std::string("expected an object of type \"") + type + "\"");
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return a;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw InputError("rationals must be strings such as \"-16/7\" or integers: " + j.dump());
}

Json to_json(const Interval& iv) { return Json::array({to_json(iv.lo), to_json(iv.hi)}); }

Interval interval_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("an interval is a pair [\"lo\",\"hi\"]");
  Interval iv{rational_from_json(j[0]), rational_from_json(j[1])};
  if (iv.lo > iv.hi) throw InputError("interval with lo > hi: " + j.dump());
  return iv;
}

Json to_json(const IntervalSet& s) {
  Json parts = Json::array();
  for (const auto& iv : s.parts()) parts.push_back(to_json(iv));
  return Json{{"type", "interval_set"}, {"intervals", parts}};
}

IntervalSet interval_set_from_json(const Json& j) {
  expect_type(j, "interval_set");
  std::vector<Interval> raw;
  for (const auto& e : array_field(j, "intervals")) raw.push_back(interval_from_json(e));
  return IntervalSet::normalize(std::move(raw));
}

Json to_json(const StepFn& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) pieces.push_back(Json{{"interval", to_json(p.span)}, {"value", to_json(p.value)}});
  return Json{{"type", "step_fn"}, {"pieces", pieces}};
}

StepFn step_fn_from_json(const Json& j) {
  expect_type(j, "step_fn");
  std::vector<StepPiece> pieces;
  for (const auto& e : array_field(j, "pieces"))
    pieces.push_back({interval_from_json(field(e, "interval")), rational_from_json(field(e, "value"))});
  return StepFn::from_pieces(std::move(pieces));
}

StepFn step_fn_from_any(const Json& j) {
  const Json& t = field(j, "type");
  if (t == "interval_set") return StepFn::indicator(interval_set_from_json(j));
  return step_fn_from_json(j);
}

Json to_json(const QuadScalar& x) {
  if (x.is_rational()) return to_json(x.a());
  return Json{{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", x.d()}};
}

QuadScalar quad_from_json(const Json& j) {
  if (!j.is_object()) return QuadScalar(rational_from_json(j));
  const Json& d = field(j, "d");
  if (!d.is_number_integer()) throw InputError("quadratic field tag d must be an integer");
  return QuadScalar(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")), d.get<long>());
}

Json to_json(const Mat2& m) {
  Json rows = Json::array();
  for (int r = 0; r < 2; ++r) rows.push_back(Json::array({to_json(m(r, 0)), to_json(m(r, 1))}));
  return Json{{"type", "mat2"}, {"entries", rows}};
}

Mat2 mat2_from_json(const Json& j) {
  expect_type(j, "mat2");
  const Json& rows = array_field(j, "entries");
  if (rows.size() != 2) throw InputError("mat2 entries must be a 2x2 array");
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 2) throw InputError("mat2 entries must be a 2x2 array");
    for (int c = 0; c < 2; ++c) m(r, c) = quad_from_json(rows[r][c]);
  }
  m.field();  // rejects mixed quadratic fields
  return m;
}

Json to_json(const Piecewise& p) {
  Json breaks = Json::array(), values = Json::array();
  for (const auto& b : p.breaks()) breaks.push_back(to_json(b));
  for (const auto& v : p.values()) values.push_back(to_json(v));
  return Json{{"type", "piecewise"}, {"breaks", breaks}, {"values", values}};
}

Piecewise piecewise_from_json(const Json& j) {
  expect_type(j, "piecewise");
  std::vector<Rational> breaks, values;
  for (const auto& b : array_field(j, "breaks")) breaks.push_back(rational_from_json(b));
  for (const auto& v : array_field(j, "values")) values.push_back(rational_from_json(v));
  return Piecewise(std::move(breaks), std::move(values));
}

Json to_json(const DimFnWindow& w) {
  Json out{{"type", "dim_window"}, {"depth", w.depth}, {"window", to_json(Interval{w.values.lo(), w.values.hi()})},
           {"values", to_json(w.values)}, {"boundary_note", w.boundary_note}};
  if (w.tail) {
    out["tail"] = Json{{"rho", to_json(w.tail->rho)},
                       {"e_pos", to_json(w.tail->e_pos)},
                       {"e_neg", to_json(w.tail->e_neg)},
                       {"c_pos", to_json(w.tail->c_pos)},
                       {"c_neg", to_json(w.tail->c_neg)}};
  }
  return out;
}

Json to_json(const DefectReport& d) {
  return Json{{"s1_defect", to_json(d.s1_defect)},
              {"coverage_defect", to_json(d.coverage_defect)},
              {"containment_exact", d.containment_exact},
              {"depth_n", d.depth_n},
              {"depth_j", d.depth_j},
              {"exact", d.exact},
              {"fast_path", d.fast_path}};
}

}  // namespace waveset
