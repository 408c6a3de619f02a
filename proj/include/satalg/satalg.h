/* C interface to the satellite-algebra verification core.
 *
 * Models are opaque handles. Every call returns a status code; the message of
 * the last failure on the calling thread is available from
 * satalg_last_error(). Text results are heap strings owned by the caller and
 * released with satalg_string_free(). */
#ifndef SATALG_H
#define SATALG_H

#if defined(_WIN32)
#define SATALG_API __declspec(dllexport)
#else
#define SATALG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct satalg_model satalg_model;

typedef enum satalg_status {
  SATALG_OK = 0,
  SATALG_VERIFICATION_FAILED = 1, /* result produced, some check failed */
  SATALG_INVALID_ARGUMENT = 2,    /* null pointers, bad option values */
  SATALG_INVALID_PARAMETER = 3,   /* model parameters violate a constraint */
  SATALG_PARSE_ERROR = 4,         /* malformed JSON, ops or state text */
  SATALG_OUT_OF_RANGE = 5,        /* state not admissible */
  SATALG_UNAVAILABLE = 6,         /* no closed form for this family */
  SATALG_NUMERICAL_ERROR = 7,
  SATALG_INTERNAL_ERROR = 8
} satalg_status;

typedef enum satalg_format { SATALG_FORMAT_CSV = 0, SATALG_FORMAT_JSON = 1 } satalg_format;

typedef struct satalg_options {
  int grid;              /* point count (default 4001) */
  int has_domain;        /* nonzero: use [domain_lo, domain_hi] */
  double domain_lo;
  double domain_hi;
  int oracle;            /* spectrum: run the finite-difference oracle */
  int weighted;          /* export: Kepler psi instead of phi = sinh(x) psi */
  satalg_format format;
  double tol_identity;   /* default 1e-8 */
  double tol_norm;       /* default 1e-6 */
  double tol_oracle;     /* default 1e-4 */
} satalg_options;

SATALG_API void satalg_options_init(satalg_options* options);

SATALG_API const char* satalg_last_error(void);
SATALG_API const char* satalg_status_name(satalg_status status);

SATALG_API satalg_status satalg_model_from_json(const char* text, satalg_model** out);
SATALG_API satalg_status satalg_model_from_file(const char* path, satalg_model** out);
SATALG_API void satalg_model_free(satalg_model* model);

/* "gmp", "rosen_morse" or "kepler"; static storage. */
SATALG_API const char* satalg_model_name(const satalg_model* model);
SATALG_API int satalg_model_state_count(const satalg_model* model);
SATALG_API satalg_status satalg_model_state(const satalg_model* model, int index, int* n, int* l);
SATALG_API satalg_status satalg_model_energy(const satalg_model* model, int n, int l, double* energy);
SATALG_API satalg_status satalg_model_labels(const satalg_model* model, int n, int l, double* s, double* t);
/* Normalized eigenfunction value and first derivative at x. */
SATALG_API satalg_status satalg_model_eval(const satalg_model* model, int n, int l, double x, double* value,
                                           double* derivative);
/* |c| of the closed-form shift coefficient; SATALG_UNAVAILABLE for GMP. */
SATALG_API satalg_status satalg_model_coefficient(const satalg_model* model, int n, int l, const char* op,
                                                  double* magnitude);

/* Parses "n", "n,l" or "n=..,l=..". */
SATALG_API satalg_status satalg_parse_state(const char* text, int* n, int* l);

/* Command outputs. *out is set whenever the status is OK or
 * SATALG_VERIFICATION_FAILED. */
SATALG_API satalg_status satalg_spectrum(const satalg_model* model, const satalg_options* options,
                                         char** out);
SATALG_API satalg_status satalg_verify(const satalg_model* model, const char* suite,
                                       const satalg_options* options, char** out);
SATALG_API satalg_status satalg_ladder(const satalg_model* model, int n, int l, const char* ops,
                                       const satalg_options* options, char** out);
SATALG_API satalg_status satalg_export(const satalg_model* model, int n, int l,
                                       const satalg_options* options, char** out);

SATALG_API void satalg_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif
