#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satalg/factorization.hpp"
#include "satalg/realization.hpp"
#include "satalg/transform.hpp"

namespace satalg {

enum class ModelKind { gmp, rosen_morse, kepler };

inline constexpr int kDefaultGridCount = 4001;
// Point count for normalization quadrature (Simpson on the auto-sized grid).
inline constexpr int kNormalizationCount = 16001;

/// GMP and Rosen-Morse use n only; Kepler uses the principal n and l.
struct QuantumNumbers {
  int n = 0;
  int l = 0;
  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

struct StateLabels {
  double s = 0.0;
  double t = 0.0;
};

struct Domain {
  double lo = 0.0;
  double hi = 1.0;
};

using ParamList = std::vector<std::pair<std::string, double>>;

struct NamedValue {
  std::string name;
  double value = 0.0;
};

class Model;
using ModelPtr = std::shared_ptr<const Model>;

/// Result of a satellite-parameter map. `model` is null when the mapped
/// parameters violate the family's constraints.
struct SatelliteTarget {
  ModelPtr model;
  ParamList params;
  QuantumNumbers qn;
  bool normalizable = false;
  std::string note;
};

/// One independent finite-difference eigenproblem and the states it covers,
/// in ascending order.
struct OracleProblem {
  Potential potential;
  double kinetic = 0.5;
  Grid grid;
  std::vector<QuantumNumbers> states;
  double energy_scale = 1.0;   // E = energy_scale * eigenvalue + energy_shift
  double energy_shift = 0.0;
};

class Model {
 public:
  virtual ~Model() = default;

  virtual ModelKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual ParamList params() const = 0;

  /// Admissible (normalizable) bound states in ascending energy order.
  virtual std::vector<QuantumNumbers> states() const = 0;
  virtual bool admissible(const QuantumNumbers& qn) const = 0;
  virtual double energy(const QuantumNumbers& qn) const = 0;
  virtual std::string state_name(const QuantumNumbers& qn) const = 0;

  // Type E view.
  virtual TypeEProblem type_e_problem() const = 0;
  ClassTag class_tag() const { return classify_problem(type_e_problem()); }
  virtual double type_e_m(const QuantumNumbers& qn) const = 0;
  virtual double type_e_l(const QuantumNumbers& qn) const = 0;
  /// lambda from the closed-form energy through the model's own map.
  virtual double lambda_from_energy(const QuantumNumbers& qn) const = 0;
  /// Eigenfunction of the type E equation in its own coordinate.
  virtual WavefunctionPtr type_e_function(const QuantumNumbers& qn) const = 0;
  virtual Grid type_e_grid(int count, std::optional<Domain> domain = {}) const = 0;

  // Physical view.
  virtual WavefunctionPtr eigenfunction(const QuantumNumbers& qn) const = 0;
  /// Grid sized so every admissible state has decayed to ~1e-12 at the ends;
  /// carries the model's measure. Used for norms and the oracle.
  virtual Grid default_grid(int count, std::optional<Domain> domain = {}) const = 0;
  /// Standard identity-check domain in the physical coordinate.
  virtual Grid check_grid(int count, std::optional<Domain> domain = {}) const = 0;

  // Algebra view.
  int epsilon() const { return epsilon_; }
  /// sign(q) of the type E problem.
  virtual int canonical_epsilon() const = 0;
  /// (s, t) under the current epsilon.
  virtual StateLabels labels(const QuantumNumbers& qn) const = 0;
  virtual GeneratorRealization realization() const = 0;
  virtual double casimir_label(const QuantumNumbers& qn) const { return type_e_m(qn); }
  /// Closed-form coefficient c in G psi = c psi'. Throws `unavailable` for
  /// families without published coefficients; empty when the closed form
  /// has a negative radicand (non-normalizable target).
  virtual std::optional<std::complex<double>> predicted_coefficient(
      const QuantumNumbers& qn, Generator which, Direction direction) const = 0;
  virtual SatelliteTarget satellite_map(const QuantumNumbers& qn, Generator which,
                                        Direction direction) const = 0;
  virtual double conserved_quantity(const QuantumNumbers& qn) const = 0;
  virtual std::string conserved_name() const = 0;
  /// Label identities that must vanish (checked against 1e-10).
  virtual std::vector<NamedValue> label_identities(const QuantumNumbers& qn) const = 0;
  virtual ModelPtr with_epsilon(int epsilon) const = 0;

  // Oracle.
  virtual std::vector<OracleProblem> oracle_problems(int count,
                                                     std::optional<Domain> domain = {}) const = 0;

 protected:
  int epsilon_ = 1;
};

struct GMPParams {
  double D = 0.0;
  double b = 0.0;
  double a = 1.0;
  double mu = 1.0;
  double hbar = 1.0;
};

struct RosenMorseParams {
  double B = 0.0;
  double C = 0.0;
  double alpha = 1.0;
  double mu = 1.0;
  double hbar = 1.0;
};

struct KeplerParams {
  double nu = 0.0;
  double R = 1.0;
};

/// `require_states` additionally rejects parameter sets without bound states.
ModelPtr make_gmp(const GMPParams& p, bool require_states = true);
ModelPtr make_rosen_morse(const RosenMorseParams& p, bool require_states = true);
ModelPtr make_kepler(const KeplerParams& p, bool require_states = true);

/// Builds a model from a family name ("gmp", "rosen_morse", "kepler") and a
/// parameter list named exactly as the parameter records. Unknown or missing
/// fields are rejected.
ModelPtr build_model(const std::string& family, const ParamList& params);

/// Parses {"model": ..., "params": {...}}.
ModelPtr load_model_json(const std::string& text);
ModelPtr load_model_file(const std::string& path);

const char* to_string(ModelKind kind);
const char* to_string(Generator g);
const char* to_string(Direction d);

/// Largest integer strictly smaller than x.
int largest_integer_below(double x);

}  // namespace satalg
