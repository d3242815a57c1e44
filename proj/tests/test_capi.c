/* Exercises the shared library through its C interface only. */
#include "waveset/waveset.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static const char* kJourne =
    "{\"type\":\"interval_set\",\"intervals\":[[\"-16/7\",\"-2\"],[\"-1/2\",\"-2/7\"],[\"2/7\",\"1/2\"],[\"2\",\"16/7\"]]}";
static const char* kShannonG = "{\"type\":\"step_fn\",\"pieces\":[{\"interval\":[\"-1/2\",\"1/2\"],\"value\":\"1\"}]}";

static void journe(void) {
  ws_interval_set* w = NULL;
  EXPECT(ws_interval_set_from_json(kJourne, &w) == WS_OK);
  char* m = NULL;
  EXPECT(ws_interval_set_measure(w, &m) == WS_OK);
  EXPECT(m && strcmp(m, "1") == 0);
  ws_string_free(m);

  ws_report* r = NULL;
  EXPECT(ws_verify_wavelet_set(w, &r) == WS_OK);
  EXPECT(ws_report_verdict(r) == WS_PASS);
  EXPECT(strstr(ws_report_json(r), "\"status\": \"pass\"") != NULL);
  ws_report_free(r);

  r = NULL;
  EXPECT(ws_verify_scaling_set(w, &r) == WS_OK);
  EXPECT(ws_report_verdict(r) == WS_FAIL);
  ws_report_free(r);

  char* back = NULL;
  EXPECT(ws_interval_set_to_json(w, &back) == WS_OK);
  EXPECT(back && strstr(back, "-16/7") != NULL);
  ws_string_free(back);
  ws_interval_set_free(w);
}

static void pipeline(void) {
  ws_step_fn* g = NULL;
  EXPECT(ws_step_fn_from_json(kShannonG, &g) == WS_OK);
  ws_report* r = NULL;
  EXPECT(ws_construct_rze(g, -1, -1, &r) == WS_OK);
  EXPECT(ws_report_verdict(r) == WS_PASS);
  EXPECT(strstr(ws_report_json(r), "\"contained\": true") != NULL);
  ws_report_free(r);
  ws_step_fn_free(g);
}

static void errors(void) {
  ws_interval_set* s = NULL;
  EXPECT(ws_interval_set_from_json("{\"type\":\"interval_set\"", &s) == WS_ERR_INPUT);
  EXPECT(s == NULL);
  EXPECT(strlen(ws_last_error()) > 0);
  char* err = NULL;
  EXPECT(ws_error_report("verify", &err) == WS_OK);
  EXPECT(err && strstr(err, "\"status\": \"error\"") != NULL);
  ws_string_free(err);

  EXPECT(ws_interval_set_from_json("{\"type\":\"interval_set\",\"intervals\":[[\"0\",\"1\"]]}", &s) == WS_OK);
  ws_report* r = NULL;
  EXPECT(ws_construct_scaling_set(s, 10, 10, &r) == WS_ERR_PRECONDITION);
  EXPECT(r == NULL);
  EXPECT(ws_error_report("construct scaling-set", &err) == WS_OK);
  EXPECT(err && strstr(err, "\"condition\"") != NULL);
  ws_string_free(err);
  ws_interval_set_free(s);

  EXPECT(ws_verify_wavelet_set(NULL, &r) == WS_ERR_NULL_ARG);
  EXPECT(ws_psib("2", &r) == WS_ERR_INPUT);
  EXPECT(ws_report_verdict(NULL) == WS_ERROR);
}

static void lattice(void) {
  ws_mat2* a = NULL;
  ws_mat2* id = NULL;
  EXPECT(ws_mat2_from_json("{\"type\":\"mat2\",\"entries\":[[\"3\",\"0\"],[\"1\",\"1/2\"]]}", &a) == WS_OK);
  EXPECT(ws_mat2_identity(&id) == WS_OK);
  ws_report* r = NULL;
  EXPECT(ws_msf2d(a, id, &r) == WS_OK);
  EXPECT(ws_report_verdict(r) == WS_FAIL);
  ws_report_free(r);
  ws_mat2_free(a);

  EXPECT(ws_mat2_from_json("{\"type\":\"mat2\",\"entries\":[[\"2\",\"0\"],[\"0\",\"2\"]]}", &a) == WS_OK);
  r = NULL;
  EXPECT(ws_lce(a, id, 0, 4, "5", &r) == WS_OK);
  EXPECT(ws_report_verdict(r) == WS_PASS);
  ws_report_free(r);
  ws_mat2_free(a);
  ws_mat2_free(id);
}

static void plot(void) {
  char* csv = NULL;
  EXPECT(ws_plot("{\"type\":\"interval_set\",\"intervals\":[]}", "csv", &csv) == WS_OK);
  EXPECT(csv && strcmp(csv, "lo,hi\n") == 0);
  ws_string_free(csv);
  EXPECT(ws_plot(kShannonG, "bmp", &csv) == WS_ERR_INPUT);
}

int main(void) {
  EXPECT(strlen(ws_version()) > 0);
  journe();
  pipeline();
  errors();
  lattice();
  plot();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
