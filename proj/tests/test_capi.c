/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "satalg/satalg.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static const char* kRosenMorse =
    "{\"model\": \"rosen_morse\", \"params\": {\"B\": 3, \"C\": 6, \"alpha\": 1}}";
static const char* kKepler = "{\"model\": \"kepler\", \"params\": {\"nu\": 6.25, \"R\": 1}}";
static const char* kGmp = "{\"model\": \"gmp\", \"params\": {\"D\": 8, \"b\": 1, \"a\": 1}}";

static void test_rosen_morse(void) {
  satalg_model* m = NULL;
  double e = 0.0, s = 0.0, t = 0.0, v = 0.0, d = 0.0, c = 0.0;
  int n = -1, l = -1;
  char* out = NULL;
  satalg_options opt;

  EXPECT(satalg_model_from_json(kRosenMorse, &m) == SATALG_OK);
  if (!m) return;
  EXPECT(strcmp(satalg_model_name(m), "rosen_morse") == 0);
  EXPECT(satalg_model_state_count(m) == 2);
  EXPECT(satalg_model_state(m, 1, &n, &l) == SATALG_OK && n == 1 && l == 0);
  EXPECT(satalg_model_state(m, 2, &n, &l) == SATALG_OUT_OF_RANGE);
  EXPECT(satalg_model_energy(m, 0, 0, &e) == SATALG_OK && e == -5.0);
  EXPECT(satalg_model_energy(m, 5, 0, &e) == SATALG_OUT_OF_RANGE);
  EXPECT(satalg_model_labels(m, 1, 0, &s, &t) == SATALG_OK);
  EXPECT(fabs(s - 1.5) < 1e-14 && fabs(t - 2.0) < 1e-14);
  EXPECT(satalg_model_eval(m, 0, 0, 0.0, &v, &d) == SATALG_OK && v > 0.0);
  EXPECT(satalg_model_coefficient(m, 0, 0, "T-", &c) == SATALG_OK);
  EXPECT(fabs(c - sqrt(96.0 / 9.0)) < 1e-12);
  EXPECT(satalg_model_coefficient(m, 0, 0, "X+", &c) == SATALG_PARSE_ERROR);

  satalg_options_init(&opt);
  opt.oracle = 1;
  EXPECT(satalg_spectrum(m, &opt, &out) == SATALG_OK);
  EXPECT(out && strstr(out, "E_closed") != NULL);
  satalg_string_free(out);

  out = NULL;
  opt.grid = 2;
  EXPECT(satalg_spectrum(m, &opt, &out) == SATALG_INVALID_ARGUMENT);
  EXPECT(out == NULL);
  EXPECT(strlen(satalg_last_error()) > 0);

  satalg_options_init(&opt);
  opt.format = SATALG_FORMAT_JSON;
  EXPECT(satalg_verify(m, "coefficients", &opt, &out) == SATALG_OK);
  EXPECT(out && strstr(out, "\"overall\": true") != NULL);
  satalg_string_free(out);
  out = NULL;
  EXPECT(satalg_verify(m, "everything", &opt, &out) == SATALG_INVALID_ARGUMENT);

  satalg_model_free(m);
}

static void test_kepler(void) {
  satalg_model* m = NULL;
  satalg_options opt;
  char* out = NULL;
  int n = 0, l = 0;

  EXPECT(satalg_model_from_json(kKepler, &m) == SATALG_OK);
  if (!m) return;
  satalg_options_init(&opt);
  EXPECT(satalg_parse_state("n=2,l=1", &n, &l) == SATALG_OK && n == 2 && l == 1);
  EXPECT(satalg_ladder(m, n, l, "S+", &opt, &out) == SATALG_OK);
  EXPECT(out && strstr(out, "8.25") != NULL);
  satalg_string_free(out);
  out = NULL;
  opt.grid = 201;
  EXPECT(satalg_export(m, 2, 1, &opt, &out) == SATALG_OK);
  EXPECT(out && strncmp(out, "x,", 2) == 0);
  satalg_string_free(out);
  satalg_model_free(m);
}

static void test_errors(void) {
  satalg_model* m = NULL;
  double c = 0.0;
  EXPECT(satalg_model_from_json("{\"model\": \"rosen_morse\", \"params\": {\"B\": 13, \"C\": 6}}",
                                &m) == SATALG_INVALID_PARAMETER);
  EXPECT(m == NULL);
  EXPECT(strstr(satalg_last_error(), "|B| < 2C") != NULL);
  EXPECT(satalg_model_from_json("{", &m) == SATALG_PARSE_ERROR);
  EXPECT(satalg_model_from_file("/nonexistent/model.json", &m) != SATALG_OK);
  EXPECT(satalg_model_from_json(NULL, &m) == SATALG_INVALID_ARGUMENT);
  EXPECT(strcmp(satalg_model_name(NULL), "") == 0);
  EXPECT(strcmp(satalg_status_name(SATALG_OK), "") != 0);

  EXPECT(satalg_model_from_json(kGmp, &m) == SATALG_OK);
  EXPECT(satalg_model_coefficient(m, 0, 0, "S+", &c) == SATALG_UNAVAILABLE);
  satalg_model_free(m);
  satalg_model_free(NULL);
}

int main(void) {
  test_rosen_morse();
  test_kepler();
  test_errors();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("C API: all checks passed\n");
  return 0;
}
