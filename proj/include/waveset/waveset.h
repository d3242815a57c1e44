/* C interface to the waveset library. All handles are opaque; every function
 * returning ws_status leaves a message retrievable with ws_last_error() on
 * failure. Strings returned through char** are released with ws_string_free. */
#ifndef WAVESET_WAVESET_H
#define WAVESET_WAVESET_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WS_API __declspec(dllexport)
#else
#define WS_API __attribute__((visibility("default")))
#endif

typedef enum ws_status {
  WS_OK = 0,
  WS_ERR_INPUT = 1,        /* malformed or out-of-domain input */
  WS_ERR_PRECONDITION = 2, /* a mathematical precondition does not hold */
  WS_ERR_INTERNAL = 3,
  WS_ERR_NULL_ARG = 4
} ws_status;

/* Report verdicts; numerically equal to the CLI exit codes. */
typedef enum ws_verdict { WS_PASS = 0, WS_FAIL = 1, WS_ERROR = 2, WS_INCONCLUSIVE = 3 } ws_verdict;

typedef struct ws_interval_set ws_interval_set;
typedef struct ws_step_fn ws_step_fn;
typedef struct ws_mat2 ws_mat2;
typedef struct ws_report ws_report;

WS_API const char* ws_version(void);

/* Message of the last failure on this thread ("" if none). */
WS_API const char* ws_last_error(void);
/* JSON error report for the last failure on this thread, tagged with command. */
WS_API ws_status ws_error_report(const char* command, char** out_json);
/* JSON error report built from explicit parts; kind is "input",
 * "precondition" or "internal". */
WS_API ws_status ws_make_error_report(const char* command, const char* kind, const char* message, char** out_json);
WS_API void ws_string_free(char* s);

WS_API ws_status ws_interval_set_from_json(const char* json, ws_interval_set** out);
WS_API ws_status ws_interval_set_to_json(const ws_interval_set* s, char** out_json);
WS_API ws_status ws_interval_set_measure(const ws_interval_set* s, char** out_rational);
WS_API void ws_interval_set_free(ws_interval_set* s);

/* Accepts a step_fn, or an interval_set read as its indicator. */
WS_API ws_status ws_step_fn_from_json(const char* json, ws_step_fn** out);
WS_API ws_status ws_step_fn_to_json(const ws_step_fn* f, char** out_json);
WS_API void ws_step_fn_free(ws_step_fn* f);

WS_API ws_status ws_mat2_from_json(const char* json, ws_mat2** out);
WS_API ws_status ws_mat2_identity(ws_mat2** out);
WS_API ws_status ws_mat2_to_json(const ws_mat2* m, char** out_json);
WS_API void ws_mat2_free(ws_mat2* m);

WS_API ws_status ws_verify_scaling_set(const ws_interval_set* s, ws_report** out);
WS_API ws_status ws_verify_wavelet_set(const ws_interval_set* w, ws_report** out);
WS_API ws_status ws_verify_spectrum(const ws_step_fn* g, ws_report** out);
/* depth < 0 selects the library default. */
WS_API ws_status ws_construct_scaling_set(const ws_interval_set* cover, int depth_n, int depth_j, ws_report** out);
WS_API ws_status ws_construct_rze(const ws_step_fn* g, int depth_n, int depth_j, ws_report** out);
WS_API ws_status ws_dimfun(const ws_step_fn* h, int depth, ws_report** out);
WS_API ws_status ws_mra(const ws_step_fn* h, int depth, ws_report** out);
WS_API ws_status ws_calderon(const ws_step_fn* h, ws_report** out);
WS_API ws_status ws_tq(const ws_step_fn* psi, long alpha, ws_report** out);
WS_API ws_status ws_orthonormal(const ws_step_fn* psi, ws_report** out);
WS_API ws_status ws_psib(const char* b, ws_report** out);
WS_API ws_status ws_msf2d(const ws_mat2* a, const ws_mat2* p, ws_report** out);
WS_API ws_status ws_lce(const ws_mat2* a, const ws_mat2* p, long jmin, long jmax, const char* c, ws_report** out);

/* Figure of an interval_set, step_fn, piecewise, dim_window or dimfun report
 * given as JSON text; format is "csv" or "svg". */
WS_API ws_status ws_plot(const char* json, const char* format, char** out_text);
/* Same, written to path; the report records the path, format and byte count. */
WS_API ws_status ws_plot_file(const char* json, const char* format, const char* path, ws_report** out);

WS_API ws_verdict ws_report_verdict(const ws_report* r);
/* Owned by the report; valid until ws_report_free. */
WS_API const char* ws_report_json(const ws_report* r);
WS_API void ws_report_free(ws_report* r);

#ifdef __cplusplus
}
#endif

#endif /* WAVESET_WAVESET_H */
