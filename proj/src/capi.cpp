#include "satalg/satalg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "satalg/commands.hpp"
#include "satalg/error.hpp"
#include "satalg/models.hpp"
#include "satalg/verify.hpp"

struct satalg_model {
  satalg::ModelPtr model;
};

namespace {

thread_local std::string g_last_error;

satalg_status fail(satalg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

satalg_status from_code(satalg::ErrorCode code) {
  using satalg::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_parameter:
    case ErrorCode::classification:
    case ErrorCode::out_of_scope:
      return SATALG_INVALID_PARAMETER;
    case ErrorCode::parse: return SATALG_PARSE_ERROR;
    case ErrorCode::out_of_range: return SATALG_OUT_OF_RANGE;
    case ErrorCode::unavailable: return SATALG_UNAVAILABLE;
    case ErrorCode::pole:
    case ErrorCode::domain:
    case ErrorCode::division_by_zero:
    case ErrorCode::degenerate:
    case ErrorCode::no_convergence:
      return SATALG_NUMERICAL_ERROR;
  }
  return SATALG_INTERNAL_ERROR;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
satalg_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const satalg::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SATALG_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(SATALG_INTERNAL_ERROR, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

satalg_status read_options(const satalg_options* in, satalg::CommandOptions& out,
                           satalg::Format& format) {
  satalg_options o;
  satalg_options_init(&o);
  if (in) o = *in;
  if (o.grid < 5) return fail(SATALG_INVALID_ARGUMENT, "grid needs at least 5 points");
  if (o.has_domain && !(o.domain_lo < o.domain_hi)) {
    return fail(SATALG_INVALID_ARGUMENT, "domain needs lo < hi");
  }
  out.grid = o.grid;
  if (o.has_domain) out.domain = satalg::Domain{o.domain_lo, o.domain_hi};
  out.oracle = o.oracle != 0;
  out.weighted = o.weighted != 0;
  if (o.tol_identity > 0.0) out.tol.identity = o.tol_identity;
  if (o.tol_norm > 0.0) out.tol.norm = o.tol_norm;
  if (o.tol_oracle > 0.0) out.tol.oracle = o.tol_oracle;
  if (o.format != SATALG_FORMAT_CSV && o.format != SATALG_FORMAT_JSON) {
    return fail(SATALG_INVALID_ARGUMENT, "unknown output format");
  }
  format = o.format == SATALG_FORMAT_JSON ? satalg::Format::json : satalg::Format::csv;
  return SATALG_OK;
}

satalg_status check_model(const satalg_model* model) {
  if (!model || !model->model) return fail(SATALG_INVALID_ARGUMENT, "null model handle");
  return SATALG_OK;
}

satalg::QuantumNumbers admissible_state(const satalg::Model& model, int n, int l) {
  const satalg::QuantumNumbers qn{n, l};
  if (!model.admissible(qn)) {
    throw satalg::Error(satalg::ErrorCode::out_of_range,
                        "state " + model.state_name(qn) + " is not an admissible state");
  }
  return qn;
}

}  // namespace

extern "C" {

void satalg_options_init(satalg_options* options) {
  if (!options) return;
  options->grid = satalg::kDefaultGridCount;
  options->has_domain = 0;
  options->domain_lo = 0.0;
  options->domain_hi = 1.0;
  options->oracle = 0;
  options->weighted = 0;
  options->format = SATALG_FORMAT_CSV;
  options->tol_identity = 1e-8;
  options->tol_norm = 1e-6;
  options->tol_oracle = 1e-4;
}

const char* satalg_last_error(void) { return g_last_error.c_str(); }

const char* satalg_status_name(satalg_status status) {
  switch (status) {
    case SATALG_OK: return "ok";
    case SATALG_VERIFICATION_FAILED: return "verification failed";
    case SATALG_INVALID_ARGUMENT: return "invalid argument";
    case SATALG_INVALID_PARAMETER: return "invalid parameter";
    case SATALG_PARSE_ERROR: return "parse error";
    case SATALG_OUT_OF_RANGE: return "out of range";
    case SATALG_UNAVAILABLE: return "unavailable";
    case SATALG_NUMERICAL_ERROR: return "numerical error";
    case SATALG_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

satalg_status satalg_model_from_json(const char* text, satalg_model** out) {
  if (!text || !out) return fail(SATALG_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new satalg_model{satalg::load_model_json(text)};
    return SATALG_OK;
  });
}

satalg_status satalg_model_from_file(const char* path, satalg_model** out) {
  if (!path || !out) return fail(SATALG_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new satalg_model{satalg::load_model_file(path)};
    return SATALG_OK;
  });
}

void satalg_model_free(satalg_model* model) { delete model; }

const char* satalg_model_name(const satalg_model* model) {
  if (!model || !model->model) return "";
  return satalg::to_string(model->model->kind());
}

int satalg_model_state_count(const satalg_model* model) {
  if (!model || !model->model) return 0;
  return static_cast<int>(model->model->states().size());
}

satalg_status satalg_model_state(const satalg_model* model, int index, int* n, int* l) {
  if (const satalg_status s = check_model(model); s != SATALG_OK) return s;
  if (!n || !l) return fail(SATALG_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto states = model->model->states();
    if (index < 0 || index >= static_cast<int>(states.size())) {
      return fail(SATALG_OUT_OF_RANGE, "state index " + std::to_string(index) + " out of range");
    }
    *n = states[static_cast<std::size_t>(index)].n;
    *l = states[static_cast<std::size_t>(index)].l;
    return SATALG_OK;
  });
}

satalg_status satalg_model_energy(const satalg_model* model, int n, int l, double* energy) {
  if (const satalg_status s = check_model(model); s != SATALG_OK) return s;
  if (!energy) return fail(SATALG_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *energy = model->model->energy(admissible_state(*model->model, n, l));
    return SATALG_OK;
  });
}

satalg_status satalg_model_labels(const satalg_model* model, int n, int l, double* s, double* t) {
  if (const satalg_status st = check_model(model); st != SATALG_OK) return st;
  if (!s || !t) return fail(SATALG_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const satalg::StateLabels lab = model->model->labels(admissible_state(*model->model, n, l));
    *s = lab.s;
    *t = lab.t;
    return SATALG_OK;
  });
}

satalg_status satalg_model_eval(const satalg_model* model, int n, int l, double x, double* value,
                                double* derivative) {
  if (const satalg_status s = check_model(model); s != SATALG_OK) return s;
  return guarded([&] {
    const auto f = model->model->eigenfunction(admissible_state(*model->model, n, l));
    const satalg::RealJet j = f->jet(x);
    if (value) *value = j.value();
    if (derivative) *derivative = j.derivative(1);
    return SATALG_OK;
  });
}

satalg_status satalg_model_coefficient(const satalg_model* model, int n, int l, const char* op,
                                       double* magnitude) {
  if (const satalg_status s = check_model(model); s != SATALG_OK) return s;
  if (!op || !magnitude) return fail(SATALG_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto ops = satalg::parse_ops(op);
    if (ops.size() != 1) return fail(SATALG_PARSE_ERROR, "expected a single ladder op");
    const auto c = model->model->predicted_coefficient(admissible_state(*model->model, n, l),
                                                       ops[0].which, ops[0].direction);
    if (!c) return fail(SATALG_NUMERICAL_ERROR, "closed form has a negative radicand here");
    *magnitude = std::abs(*c);
    return SATALG_OK;
  });
}

satalg_status satalg_parse_state(const char* text, int* n, int* l) {
  if (!text || !n || !l) return fail(SATALG_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const satalg::QuantumNumbers qn = satalg::parse_state(text);
    *n = qn.n;
    *l = qn.l;
    return SATALG_OK;
  });
}

satalg_status satalg_spectrum(const satalg_model* model, const satalg_options* options,
                              char** out) {
  if (const satalg_status s = check_model(model); s != SATALG_OK) return s;
  if (!out) return fail(SATALG_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    satalg::CommandOptions o;
    satalg::Format format;
    if (const satalg_status s = read_options(options, o, format); s != SATALG_OK) return s;
    bool ok = true;
    const satalg::Table t = satalg::spectrum_table(model->model, o, &ok);
    *out = copy_string(satalg::format_table(t, format));
    if (!ok) return fail(SATALG_VERIFICATION_FAILED, "oracle disagreement beyond tolerance");
    return SATALG_OK;
  });
}

satalg_status satalg_verify(const satalg_model* model, const char* suite,
                            const satalg_options* options, char** out) {
  if (const satalg_status s = check_model(model); s != SATALG_OK) return s;
  if (!out) return fail(SATALG_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    satalg::CommandOptions o;
    satalg::Format format;
    if (const satalg_status s = read_options(options, o, format); s != SATALG_OK) return s;
    const auto which = satalg::parse_suite(suite ? suite : "all");
    if (!which) {
      return fail(SATALG_INVALID_ARGUMENT,
                  std::string("unknown suite '") + suite +
                      "' (expected factorization, algebra, coefficients, spectrum or all)");
    }
    satalg::VerifyOptions vo;
    vo.tol = o.tol;
    vo.grid = o.grid;
    vo.domain = o.domain;
    const satalg::RunReport report = satalg::run_suite(model->model, *which, vo);
    *out = copy_string(satalg::format_report(report, format));
    if (!report.overall) return fail(SATALG_VERIFICATION_FAILED, "some checks failed");
    return SATALG_OK;
  });
}

satalg_status satalg_ladder(const satalg_model* model, int n, int l, const char* ops,
                            const satalg_options* options, char** out) {
  if (const satalg_status s = check_model(model); s != SATALG_OK) return s;
  if (!ops || !out) return fail(SATALG_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    satalg::CommandOptions o;
    satalg::Format format;
    if (const satalg_status s = read_options(options, o, format); s != SATALG_OK) return s;
    const auto parsed = satalg::parse_ops(ops);
    const satalg::Table t = satalg::ladder_table(model->model, {n, l}, parsed, o);
    *out = copy_string(satalg::format_table(t, format));
    return SATALG_OK;
  });
}

satalg_status satalg_export(const satalg_model* model, int n, int l,
                            const satalg_options* options, char** out) {
  if (const satalg_status s = check_model(model); s != SATALG_OK) return s;
  if (!out) return fail(SATALG_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    satalg::CommandOptions o;
    satalg::Format format;
    if (const satalg_status s = read_options(options, o, format); s != SATALG_OK) return s;
    const satalg::Table t = satalg::export_table(model->model, {n, l}, o);
    *out = copy_string(satalg::format_table(t, format));
    return SATALG_OK;
  });
}

void satalg_string_free(char* text) { std::free(text); }

}  // extern "C"
