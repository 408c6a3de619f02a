// satalg command-line front end. Talks to the core only through satalg.h.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "satalg/satalg.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Args {
  std::string model;
  bool oracle = false;
  std::string suite = "all";
  double tol = 0.0;
  double norm_tol = 0.0;
  double oracle_tol = 0.0;
  int grid = 4001;
  std::string domain;
  std::string out;
  std::string format;
  std::string state;
  std::string ops;
  bool weighted = false;
};

int error(const std::string& message) {
  std::cerr << "satalg: error: " << message << "\n";
  return kExitUsage;
}

int from_status(satalg_status status) {
  if (status == SATALG_OK) return kExitPass;
  if (status == SATALG_VERIFICATION_FAILED) return kExitFail;
  return error(std::string(satalg_status_name(status)) + ": " + satalg_last_error());
}

bool parse_double(const std::string& text, double& out) {
  const char* end = text.data() + text.size();
  const auto r = std::from_chars(text.data(), end, out);
  return r.ec == std::errc() && r.ptr == end;
}

// "lo:hi" with '.' as the decimal separator whatever the locale.
bool parse_domain(const std::string& text, double& lo, double& hi) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  return parse_double(text.substr(0, colon), lo) && parse_double(text.substr(colon + 1), hi);
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return kExitPass;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) return error("cannot open output file '" + path + "'");
  f << text;
  if (!f) return error("cannot write output file '" + path + "'");
  return kExitPass;
}

struct ModelHandle {
  satalg_model* ptr = nullptr;
  ~ModelHandle() { satalg_model_free(ptr); }
};

int run(const std::string& command, const Args& a) {
  satalg_options opt;
  satalg_options_init(&opt);
  opt.grid = a.grid;
  opt.oracle = a.oracle ? 1 : 0;
  opt.weighted = a.weighted ? 1 : 0;
  if (a.tol > 0.0) opt.tol_identity = a.tol;
  if (a.norm_tol > 0.0) opt.tol_norm = a.norm_tol;
  if (a.oracle_tol > 0.0) opt.tol_oracle = a.oracle_tol;
  if (!a.domain.empty()) {
    if (!parse_domain(a.domain, opt.domain_lo, opt.domain_hi)) {
      return error("cannot parse --domain '" + a.domain + "' (expected lo:hi)");
    }
    opt.has_domain = 1;
  }
  const std::string format = a.format.empty() ? (command == "verify" ? "json" : "csv") : a.format;
  opt.format = format == "json" ? SATALG_FORMAT_JSON : SATALG_FORMAT_CSV;

  ModelHandle model;
  if (const satalg_status s = satalg_model_from_file(a.model.c_str(), &model.ptr); s != SATALG_OK) {
    return from_status(s);
  }

  int n = 0, l = 0;
  const bool needs_state = command == "ladder" || command == "export";
  if (needs_state) {
    if (a.state.empty()) {
      if (const satalg_status s = satalg_model_state(model.ptr, 0, &n, &l); s != SATALG_OK) {
        return from_status(s);
      }
    } else if (const satalg_status s = satalg_parse_state(a.state.c_str(), &n, &l);
               s != SATALG_OK) {
      return from_status(s);
    }
  }

  char* text = nullptr;
  satalg_status status;
  if (command == "spectrum") {
    status = satalg_spectrum(model.ptr, &opt, &text);
  } else if (command == "verify") {
    status = satalg_verify(model.ptr, a.suite.c_str(), &opt, &text);
  } else if (command == "ladder") {
    status = satalg_ladder(model.ptr, n, l, a.ops.c_str(), &opt, &text);
  } else {
    status = satalg_export(model.ptr, n, l, &opt, &text);
  }
  if (text) {
    const std::string out(text);
    satalg_string_free(text);
    if (const int w = write_output(out, a.out); w != kExitPass) return w;
  }
  if (status == SATALG_VERIFICATION_FAILED) {
    std::cerr << "satalg: " << command << ": " << satalg_last_error() << "\n";
  }
  return from_status(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type E factorization and so(2,2) satellite-algebra verification lab"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", a.model, "model JSON file")->required();
    sub->add_option("--grid", a.grid, "grid point count")->check(CLI::Range(5, 10000001));
    sub->add_option("--domain", a.domain, "domain override lo:hi");
    sub->add_option("--out", a.out, "write output to a file instead of stdout");
    sub->add_option("--format", a.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto tolerances = [&](CLI::App* sub) {
    sub->add_option("--tol", a.tol, "identity tolerance (default 1e-8)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--norm-tol", a.norm_tol, "normalization tolerance (default 1e-6)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--oracle-tol", a.oracle_tol,
                    "relative FD oracle tolerance (default 1e-4)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form spectrum, optional FD oracle");
  common(spectrum);
  tolerances(spectrum);
  spectrum->add_flag("--oracle", a.oracle, "compare with the finite-difference eigensolver");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  tolerances(verify);
  verify->add_option("--suite", a.suite, "factorization, algebra, coefficients, spectrum or all")
      ->check(CLI::IsMember({"factorization", "algebra", "coefficients", "spectrum", "all"}));

  CLI::App* ladder = app.add_subcommand("ladder", "apply a chain of shift generators");
  common(ladder);
  ladder->add_option("--tol", a.tol, "annihilation threshold (default 1e-8)")
      ->check(CLI::PositiveNumber);
  ladder->add_option("--state", a.state, "start state: n or n,l (default: ground state)");
  ladder->add_option("--ops", a.ops, "comma-separated S+,S-,T+,T-, applied left to right")
      ->required();

  CLI::App* exporter = app.add_subcommand("export", "sample an eigenfunction");
  common(exporter);
  exporter->add_option("--state", a.state, "state: n or n,l (default: ground state)");
  exporter->add_flag("--weighted", a.weighted, "Kepler: export psi instead of phi = sinh(x) psi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  for (CLI::App* sub : app.get_subcommands()) return run(sub->get_name(), a);
  return kExitUsage;
}
