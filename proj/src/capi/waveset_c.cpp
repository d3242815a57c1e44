#include "waveset/waveset.h"

#include "waveset/errors.hpp"
#include "waveset/figure.hpp"
#include "waveset/report.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <string>

struct ws_interval_set {
  waveset::IntervalSet value;
};
struct ws_step_fn {
  waveset::StepFn value;
};
struct ws_mat2 {
  waveset::Mat2 value;
};
struct ws_report {
  waveset::Status status;
  std::string json;
};

namespace {

using namespace waveset;

struct LastError {
  ws_status status = WS_OK;
  std::string message;
  std::string condition;
  std::optional<IntervalSet> witness;
};

thread_local LastError last_error;

ws_status fail(ws_status st, std::string message, std::string condition = {}, std::optional<IntervalSet> w = {}) {
  last_error = {st, std::move(message), std::move(condition), std::move(w)};
  return st;
}

// Runs body, mapping library exceptions onto status codes.
template <class F>
ws_status guarded(F&& body) {
  try {
    last_error = {};
    body();
    return WS_OK;
  } catch (const PreconditionError& e) {
    return fail(WS_ERR_PRECONDITION, e.what(), e.condition(), e.witness());
  } catch (const InputError& e) {
    return fail(WS_ERR_INPUT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(WS_ERR_INPUT, std::string("malformed document: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(WS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WS_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <class F>
ws_status make_report(ws_report** out, F&& build) {
  if (!out) return fail(WS_ERR_NULL_ARG, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    Report r = build();
    *out = new ws_report{r.status, dump(r.to_json())};
  });
}

template <class H>
ws_status need(const H* h) {
  return h ? WS_OK : fail(WS_ERR_NULL_ARG, "null handle");
}

int depth_or(int d, int fallback) { return d < 0 ? fallback : d; }

}  // namespace

extern "C" {

const char* ws_version(void) { return "1.0.0"; }

const char* ws_last_error(void) { return last_error.message.c_str(); }

ws_status ws_error_report(const char* command, char** out_json) {
  if (!out_json) return WS_ERR_NULL_ARG;
  const char* kind = "internal";
  if (last_error.status == WS_ERR_INPUT || last_error.status == WS_ERR_NULL_ARG) kind = "input";
  if (last_error.status == WS_ERR_PRECONDITION) kind = "precondition";
  Report r = error_report(command ? command : "", kind, last_error.message, last_error.condition, last_error.witness);
  *out_json = dup(dump(r.to_json()));
  return WS_OK;
}

ws_status ws_make_error_report(const char* command, const char* kind, const char* message, char** out_json) {
  if (!out_json) return WS_ERR_NULL_ARG;
  Report r = error_report(command ? command : "", kind ? kind : "input", message ? message : "");
  *out_json = dup(dump(r.to_json()));
  return WS_OK;
}

void ws_string_free(char* s) { std::free(s); }

ws_status ws_interval_set_from_json(const char* json, ws_interval_set** out) {
  if (!json || !out) return fail(WS_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out = new ws_interval_set{interval_set_from_json(parse_json_text(json))}; });
}

ws_status ws_interval_set_to_json(const ws_interval_set* s, char** out_json) {
  if (!s || !out_json) return fail(WS_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out_json = dup(to_json(s->value).dump()); });
}

ws_status ws_interval_set_measure(const ws_interval_set* s, char** out_rational) {
  if (!s || !out_rational) return fail(WS_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out_rational = dup(to_string(s->value.measure())); });
}

void ws_interval_set_free(ws_interval_set* s) { delete s; }

ws_status ws_step_fn_from_json(const char* json, ws_step_fn** out) {
  if (!json || !out) return fail(WS_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out = new ws_step_fn{step_fn_from_any(parse_json_text(json))}; });
}

ws_status ws_step_fn_to_json(const ws_step_fn* f, char** out_json) {
  if (!f || !out_json) return fail(WS_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out_json = dup(to_json(f->value).dump()); });
}

void ws_step_fn_free(ws_step_fn* f) { delete f; }

ws_status ws_mat2_from_json(const char* json, ws_mat2** out) {
  if (!json || !out) return fail(WS_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out = new ws_mat2{mat2_from_json(parse_json_text(json))}; });
}

ws_status ws_mat2_identity(ws_mat2** out) {
  if (!out) return fail(WS_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out = new ws_mat2{Mat2::identity()}; });
}

ws_status ws_mat2_to_json(const ws_mat2* m, char** out_json) {
  if (!m || !out_json) return fail(WS_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out_json = dup(to_json(m->value).dump()); });
}

void ws_mat2_free(ws_mat2* m) { delete m; }

ws_status ws_verify_scaling_set(const ws_interval_set* s, ws_report** out) {
  if (ws_status st = need(s)) return st;
  return make_report(out, [&] { return verify_scaling_set_report(s->value); });
}

ws_status ws_verify_wavelet_set(const ws_interval_set* w, ws_report** out) {
  if (ws_status st = need(w)) return st;
  return make_report(out, [&] { return verify_wavelet_set_report(w->value); });
}

ws_status ws_verify_spectrum(const ws_step_fn* g, ws_report** out) {
  if (ws_status st = need(g)) return st;
  return make_report(out, [&] { return verify_spectrum_report(g->value); });
}

ws_status ws_construct_scaling_set(const ws_interval_set* cover, int depth_n, int depth_j, ws_report** out) {
  if (ws_status st = need(cover)) return st;
  return make_report(out, [&] {
    return construct_scaling_set_report(cover->value, depth_or(depth_n, kDefaultDepthN),
                                        depth_or(depth_j, kDefaultDepthJ));
  });
}

ws_status ws_construct_rze(const ws_step_fn* g, int depth_n, int depth_j, ws_report** out) {
  if (ws_status st = need(g)) return st;
  return make_report(out, [&] {
    return construct_rze_report(g->value, depth_or(depth_n, kDefaultDepthN), depth_or(depth_j, kDefaultDepthJ));
  });
}

ws_status ws_dimfun(const ws_step_fn* h, int depth, ws_report** out) {
  if (ws_status st = need(h)) return st;
  return make_report(out, [&] { return dimfun_report(h->value, depth_or(depth, kDefaultDimDepth)); });
}

ws_status ws_mra(const ws_step_fn* h, int depth, ws_report** out) {
  if (ws_status st = need(h)) return st;
  return make_report(out, [&] { return mra_report(h->value, depth_or(depth, kDefaultDimDepth)); });
}

ws_status ws_calderon(const ws_step_fn* h, ws_report** out) {
  if (ws_status st = need(h)) return st;
  return make_report(out, [&] { return calderon_report(h->value); });
}

ws_status ws_tq(const ws_step_fn* psi, long alpha, ws_report** out) {
  if (ws_status st = need(psi)) return st;
  return make_report(out, [&] { return tq_report(psi->value, alpha); });
}

ws_status ws_orthonormal(const ws_step_fn* psi, ws_report** out) {
  if (ws_status st = need(psi)) return st;
  return make_report(out, [&] { return orthonormal_report(psi->value); });
}

ws_status ws_psib(const char* b, ws_report** out) {
  if (!b) return fail(WS_ERR_NULL_ARG, "null argument");
  return make_report(out, [&] { return psib_report(parse_rational(b)); });
}

ws_status ws_msf2d(const ws_mat2* a, const ws_mat2* p, ws_report** out) {
  if (!a || !p) return fail(WS_ERR_NULL_ARG, "null handle");
  return make_report(out, [&] { return msf2d_report(a->value, p->value); });
}

ws_status ws_lce(const ws_mat2* a, const ws_mat2* p, long jmin, long jmax, const char* c, ws_report** out) {
  if (!a || !p || !c) return fail(WS_ERR_NULL_ARG, "null argument");
  return make_report(out, [&] { return lce_report_json(a->value, p->value, jmin, jmax, parse_rational(c)); });
}

ws_status ws_plot(const char* json, const char* format, char** out_text) {
  if (!json || !format || !out_text) return fail(WS_ERR_NULL_ARG, "null argument");
  return guarded([&] { *out_text = dup(render_figure(parse_json_text(json), format)); });
}

ws_status ws_plot_file(const char* json, const char* format, const char* path, ws_report** out) {
  if (!json || !format || !path) return fail(WS_ERR_NULL_ARG, "null argument");
  return make_report(out, [&] {
    std::string text = render_figure(parse_json_text(json), format);
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) throw InputError(std::string("cannot write ") + path);
    Report r;
    r.command = "plot";
    r.status = Status::pass;
    r.data = Json{{"format", format}, {"out", path}, {"bytes", text.size()}};
    return r;
  });
}

ws_verdict ws_report_verdict(const ws_report* r) {
  return r ? static_cast<ws_verdict>(exit_code(r->status)) : WS_ERROR;
}

const char* ws_report_json(const ws_report* r) { return r ? r->json.c_str() : ""; }

void ws_report_free(ws_report* r) { delete r; }

}  // extern "C"
