#include "waveset/report.hpp"

#include "waveset/errors.hpp"
#include "waveset/torus.hpp"

namespace waveset {

namespace {

Json condition_json(const ConditionResult& c) {
  Json j{{"status", to_string(c.status)}};
  if (!c.witness.empty()) j["witness"] = to_json(c.witness);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json calderon_json(const CalderonResult& c) {
  auto side = [](const CalderonSide& s) { return s.diverges() ? Json("diverges") : to_json(*s.sum); };
  Json j{{"positive", side(c.positive)}, {"negative", side(c.negative)}, {"diverges", c.diverges}};
  if (!c.diverges || !c.positive.diverges() || !c.negative.diverges()) {
    j["min"] = to_json(c.min);
    j["max"] = to_json(c.max);
  }
  j["identically_one"] = c.identically_one;
  return j;
}

// First annulus piece where the Calderon sum differs from 1.
std::optional<IntervalSet> calderon_witness(const CalderonResult& c) {
  if (c.positive.diverges()) return IntervalSet::of(1, 2);
  if (c.negative.diverges()) return IntervalSet::of(-2, -1);
  for (const auto* side : {&*c.positive.sum, &*c.negative.sum})
    for (std::size_t i = 0; i < side->pieces(); ++i)
      if (side->values()[i] != 1) return IntervalSet::normalize({side->piece(i)});
  return std::nullopt;
}

Json vector_json(const std::array<Integer, 2>& z) {
  return Json{{"type", "lattice_vector"}, {"z", Json::array({z[0].get_str(), z[1].get_str()})}};
}

Report make(const char* command) {
  Report r;
  r.command = command;
  return r;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::error: return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::error: return 2;
    case Status::inconclusive: return 3;
  }
  return 2;
}

Json Report::to_json() const {
  Json j{{"command", command}, {"status", waveset::to_string(status)}, {"witnesses", witnesses}};
  if (defects) j["defects"] = *defects;
  j["data"] = data;
  return j;
}

Report verify_scaling_set_report(const IntervalSet& s) {
  Report r = make("verify scaling-set");
  const bool s1 = check_S1(s), s2 = check_S2(s), s3 = check_S3(s);
  r.data = Json{{"set", to_json(s)}, {"measure", to_json(s.measure())}, {"S1", s1}, {"S2", s2}, {"S3", s3}};
  if (!s1) r.witnesses.push_back(to_json(subtract(s, scale(2, s))));
  if (!s2) r.witnesses.push_back(to_json(zero_gap(s)));
  if (!s3) r.witnesses.push_back(to_json(fold_multiplicity(s).where([](const Rational& v) { return v != 1; })));
  r.status = s1 && s2 && s3 ? Status::pass : Status::fail;
  if (r.status == Status::pass) r.data["wavelet_set"] = to_json(subtract(scale(2, s), s));
  return r;
}

Report verify_wavelet_set_report(const IntervalSet& w) {
  Report r = make("verify wavelet-set");
  WaveletSetVerdict v = verify_wavelet_set(w);
  r.data = Json{{"set", to_json(w)}, {"measure", to_json(w.measure())}};
  if (v.pass) {
    r.status = Status::pass;
  } else {
    r.status = Status::fail;
    r.data["reason"] = v.reason;
    r.witnesses.push_back(to_json(v.witness));
  }
  return r;
}

Report verify_spectrum_report(const StepFn& g) {
  Report r = make("verify spectrum");
  SpectrumVerdict v = validate_scaling_spectrum(g);
  r.data = Json{{"F1", v.f1}, {"F2", v.f2}, {"F3", v.f3}};
  if (v.pass) {
    r.status = Status::pass;
    StepFn h = psi_spectrum_from_scaling(g);
    r.data["psi_spectrum"] = to_json(h);
    r.data["psi_integral"] = to_json(h.integral());
  } else {
    r.status = Status::fail;
    r.data["failed"] = v.condition;
    r.witnesses.push_back(to_json(v.witness));
  }
  return r;
}

Report construct_scaling_set_report(const IntervalSet& cover, int depth_n, int depth_j) {
  Report r = make("construct scaling-set");
  ScalingSetResult res = construct_scaling_set(cover, depth_n, depth_j);
  r.status = Status::pass;
  r.defects = to_json(res.defects);
  r.data = Json{{"s", to_json(res.s)}, {"w", to_json(res.w)}, {"k", to_json(res.k)},
                {"s_measure", to_json(res.s.measure())}, {"w_measure", to_json(res.w.measure())}};
  return r;
}

Report construct_rze_report(const StepFn& g, int depth_n, int depth_j) {
  Report r = make("construct rze");
  RzeResult res = rze_pipeline(g, depth_n, depth_j);
  r.defects = to_json(res.scaling.defects);
  r.data = Json{{"s", to_json(res.scaling.s)},
                {"w", to_json(res.scaling.w)},
                {"k", to_json(res.scaling.k)},
                {"psi_spectrum", to_json(res.psi_spectrum)},
                {"supp_psi", to_json(res.supp_psi)},
                {"contained", res.contained},
                {"uncontained_measure", to_json(res.uncontained_measure)},
                {"containment_bound", to_json(res.containment_bound)}};
  if (res.contained) {
    r.status = Status::pass;
  } else {
    IntervalSet outside = subtract(res.scaling.w, res.supp_psi);
    r.witnesses.push_back(to_json(outside));
    r.status = res.uncontained_measure <= res.containment_bound ? Status::inconclusive : Status::fail;
  }
  return r;
}

Report dimfun_report(const StepFn& h, int depth) {
  Report r = make("dimfun");
  if (depth < 2) throw InputError("dimension function depth must be at least 2");
  DimFnWindow fine = dimension_function(h, depth + 2);
  DimConditionsReport cond = check_D1_D4(fine, depth);
  DimFnWindow shown = fine;
  shown.depth = depth;
  shown.values = fine.values.restrict(pow2(-depth), 1 - pow2(-depth));
  r.data = Json{{"window", to_json(shown)},
                {"D1", condition_json(cond.d1)},
                {"D2", condition_json(cond.d2)},
                {"D2_checked_measure", to_json(cond.d2_checked_measure)},
                {"D3", condition_json(cond.d3)},
                {"D4", condition_json(cond.d4)}};
  bool failed = false;
  for (const ConditionResult* c : {&cond.d1, &cond.d2, &cond.d3, &cond.d4}) {
    if (c->status != Check::fail) continue;
    failed = true;
    r.witnesses.push_back(to_json(c->witness));
  }
  r.status = failed ? Status::fail : Status::pass;
  return r;
}

Report mra_report(const StepFn& h, int depth) {
  Report r = make("mra");
  MraResult m = mra_check(h, depth);
  r.data = Json{{"verdict", to_string(m.verdict)}, {"depth", depth}};
  if (!m.note.empty()) r.data["note"] = m.note;
  switch (m.verdict) {
    case MraVerdict::is_mra: r.status = Status::pass; break;
    case MraVerdict::not_mra:
      r.status = Status::fail;
      r.witnesses.push_back(to_json(m.witness));
      r.data["witness_value"] = to_json(m.witness_value);
      break;
    case MraVerdict::inconclusive: r.status = Status::inconclusive; break;
  }
  return r;
}

Report calderon_report(const StepFn& h) {
  Report r = make("calderon");
  CalderonResult c = calderon(h);
  r.data = calderon_json(c);
  r.status = c.identically_one ? Status::pass : Status::fail;
  if (auto w = calderon_witness(c); w && !c.identically_one) r.witnesses.push_back(to_json(*w));
  return r;
}

Report tq_report(const StepFn& psi, long alpha) {
  Report r = make("tq");
  TqResult t = tq_check(psi, alpha);
  r.data = Json{{"alpha", alpha}, {"t", to_json(t.t)}, {"zero", t.zero}};
  r.status = t.zero ? Status::pass : Status::fail;
  if (!t.zero) r.witnesses.push_back(to_json(t.witness));
  return r;
}

Report orthonormal_report(const StepFn& psi) {
  Report r = make("orthonormal");
  OrthonormalityReport o = orthonormality_check(psi);
  Json checked = Json::array(), failures = Json::array();
  for (const auto& t : o.tq) checked.push_back(t.alpha);
  for (long a : o.tq_failures) failures.push_back(a);
  r.data = Json{{"norm_sq", to_json(o.norm_sq)},
                {"calderon", calderon_json(o.calderon)},
                {"tq_alphas", checked},
                {"tq_failures", failures}};
  r.status = o.pass ? Status::pass : Status::fail;
  if (!o.pass) {
    if (auto w = calderon_witness(o.calderon); w && !o.calderon.identically_one) r.witnesses.push_back(to_json(*w));
    for (const auto& t : o.tq)
      if (!t.zero) r.witnesses.push_back(to_json(t.witness));
    if (r.witnesses.empty()) r.witnesses.push_back(to_json(psi.support()));
  }
  return r;
}

Report psib_report(const Rational& b) {
  Report r = make("psib");
  PsiBReport p = psi_b_report(b);
  r.data = Json{{"b", to_json(p.b)},
                {"psi", to_json(psi_b_spectrum(b))},
                {"norm_sq", to_json(p.norm_sq)},
                {"calderon", calderon_json(p.calderon)},
                {"orthonormal", p.orthonormality.pass},
                {"frame_necessary", p.frame_necessary},
                {"table_row", p.table_row.empty() ? Json(nullptr) : Json(p.table_row)},
                {"row_consistent", p.row_consistent},
                {"row_certified", p.row_certified}};
  if (p.table_row.empty()) r.data["note"] = "no table row covers this b";
  r.status = p.row_consistent ? Status::pass : Status::fail;
  if (!p.row_consistent)
    if (auto w = calderon_witness(p.calderon)) r.witnesses.push_back(to_json(*w));
  return r;
}

Report msf2d_report(const Mat2& a, const Mat2& p) {
  Report r = make("msf2d");
  MsfDecision d = wavelet_set_exists(a, p);
  r.data = Json{{"a", to_json(a)}, {"p", to_json(p)}, {"verdict", to_string(d.verdict)}, {"det", to_json(d.det)}};
  if (d.contracting_eigenvalue) r.data["contracting_eigenvalue"] = to_json(*d.contracting_eigenvalue);
  r.data["unit_eigenvalue"] = d.unit_eigenvalue;
  r.data["note"] = d.note;
  switch (d.verdict) {
    case MsfVerdict::exists: r.status = Status::pass; break;
    case MsfVerdict::not_exists:
      r.status = Status::fail;
      r.witnesses.push_back(vector_json(*d.witness));
      break;
    case MsfVerdict::unsupported: r.status = Status::inconclusive; break;
  }
  return r;
}

Report lce_report_json(const Mat2& a, const Mat2& p, long jmin, long jmax, const Rational& c) {
  Report r = make("lce");
  LceReport rep = lce_report(a, p, jmin, jmax, c);
  Json rows = Json::array();
  for (const auto& row : rep.rows)
    rows.push_back(Json{{"j", row.j}, {"count", row.count.get_str()}, {"ratio", to_json(row.ratio)}});
  r.data = Json{{"c", to_json(c)}, {"jmin", jmin}, {"jmax", jmax}, {"rows", rows}, {"bounded", rep.bounded},
                {"note", "finite-range probe; not a proof of the estimate for all j"}};
  r.status = rep.bounded ? Status::pass : Status::fail;
  if (rep.witness_j) r.witnesses.push_back(Json{{"type", "index"}, {"j", *rep.witness_j}});
  return r;
}

Report error_report(const std::string& command, const std::string& kind, const std::string& message,
                    const std::string& condition, const std::optional<IntervalSet>& witness) {
  Report r;
  r.command = command;
  r.status = Status::error;
  r.data = Json{{"error", kind}, {"message", message}};
  if (!condition.empty()) r.data["condition"] = condition;
  if (witness && !witness->empty()) r.witnesses.push_back(to_json(*witness));
  return r;
}

}  // namespace waveset
