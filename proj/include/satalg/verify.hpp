#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satalg/models.hpp"

namespace satalg {

/// One verified invariant instance. Skipped checks count as passing and carry
/// the reason in `note`.
struct Check {
  std::string id;
  std::string description;
  std::string group;
  double measured = 0.0;
  double bound = 0.0;
  std::string relation = "<=";  // measured <= bound, or ">=" for order estimates
  bool pass = false;
  bool skipped = false;
  std::string note;
};

struct RunReport {
  std::string suite;
  std::string model;
  std::vector<Check> checks;
  bool overall = true;
  double seconds = 0.0;
};

enum class Suite { factorization, algebra, coefficients, spectrum, all };

std::optional<Suite> parse_suite(std::string_view name);
const char* to_string(Suite suite);

struct Tolerances {
  double identity = 1e-8;   // residuals, commutators, Casimir, coefficients, ladder relation
  double norm = 1e-6;
  double oracle = 1e-4;     // relative energy gap to the FD eigensolver
  double exact = 1e-10;     // labels, satellite maps, epsilon flip, two-route lambda
  double fd = 1e-6;         // FD ladder application and proportionality fits
};

struct VerifyOptions {
  Tolerances tol;
  int grid = kDefaultGridCount;
  std::optional<Domain> domain;
  int random_functions = 5;
  std::uint32_t seed = 20240611u;
};

std::vector<Check> spectrum_checks(const ModelPtr& model, const VerifyOptions& options);
std::vector<Check> factorization_checks(const ModelPtr& model, const VerifyOptions& options);
std::vector<Check> algebra_checks(const ModelPtr& model, const VerifyOptions& options);
std::vector<Check> coefficient_checks(const ModelPtr& model, const VerifyOptions& options);
/// Model-independent self-checks of the numerics layer (derivatives, Simpson
/// order, FD eigensolver order).
std::vector<Check> numerics_checks();

RunReport run_suite(const ModelPtr& model, Suite suite, const VerifyOptions& options);

/// Relative gap |a - b| / max(|a|, |b|, floor).
double relative_difference(double a, double b, double floor = 1.0);

}  // namespace satalg
