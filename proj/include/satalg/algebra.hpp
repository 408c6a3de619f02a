#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satalg/models.hpp"

namespace satalg {

/// Complex scalar with binary128 parts, used for operator coefficients.
struct WideComplex {
  Wide re = 0;
  Wide im = 0;

  friend WideComplex operator*(WideComplex a, WideComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend WideComplex operator*(WideComplex a, Wide s) { return {a.re * s, a.im * s}; }
  friend WideComplex operator-(WideComplex a) { return {-a.re, -a.im}; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

/// Extended eigenfunction e^{i(s xi + t eta)} phase x_part(x) with the angular
/// factors kept symbolic. `m_label` is NaN for test functions.
struct ExtendedState {
  double s = 0.0;
  double t = 0.0;
  double m_label = 0.0;
  WideComplex phase{1, 0};
  RealFunctionPtr x_part;
  ModelPtr model;
  std::optional<QuantumNumbers> qn;
  bool normalizable = false;
};

/// One term c f(x) of a linear combination sharing the same angular factor.
struct Term {
  WideComplex coefficient{1, 0};
  RealFunctionPtr f;
};
using Combination = std::vector<Term>;

Combination as_combination(const ExtendedState& state);
Combination scaled(Combination c, WideComplex factor);
Combination concat(Combination a, const Combination& b);

/// Closed-form eigenstate with the model's current epsilon.
ExtendedState make_extended_state(const ModelPtr& model, const QuantumNumbers& qn);
/// Arbitrary x-part with chosen labels (not an eigenstate).
ExtendedState make_test_state(const ModelPtr& model, RealFunctionPtr f, double s, double t);

struct RelationResidual {
  std::string name;
  double residual = 0.0;
};

/// The so(2,2) = su(1,1) + su(1,1) generators in one model's realization.
class SatelliteAlgebra {
 public:
  explicit SatelliteAlgebra(const GeneratorRealization& realization);
  explicit SatelliteAlgebra(const Model& model) : SatelliteAlgebra(model.realization()) {}

  /// S+- or T+-: shifts the label by +-1 and maps the x-part. The image keeps
  /// the source binding with the quantum numbers cleared.
  ExtendedState shift(const ExtendedState& state, Generator which, Direction direction) const;
  /// shift() followed by rebinding an eigenstate to the satellite model and
  /// quantum numbers of the model's parameter map; normalizability is
  /// re-evaluated. Test states keep their binding.
  ExtendedState apply_shift(const ExtendedState& state, Generator which,
                            Direction direction) const;
  /// S0 = s or T0 = t on the state.
  ExtendedState diagonal(const ExtendedState& state, Generator which) const;
  /// Differential Casimir through the type E frame.
  ExtendedState casimir(const ExtendedState& state) const;
  /// -X+ X- + X0 (X0 - 1) by composing generator images (X = S or T).
  Combination casimir_algebraic(const ExtendedState& state,
                                Generator which = Generator::S) const;

  /// The fifteen defining relations evaluated on the state: each residual is
  /// sup |LHS - RHS| over the grid relative to sup |state|.
  std::vector<RelationResidual> commutator_residuals(const ExtendedState& state,
                                                     const Grid& grid) const;

  const GeneratorRealization& realization() const { return r_; }

 private:
  GeneratorRealization r_;
};

/// sup over the grid of |sum of terms|, relative to `reference` when it is
/// positive and to max_k sup |term_k| otherwise. Evaluated in binary128.
double cancellation_residual(const Combination& terms, const Grid& grid, double reference = 0.0);

/// sup over the grid of |combination| (binary128 evaluation, double result).
double sup_norm(const Combination& c, const Grid& grid);

struct CasimirCheck {
  double expected = 0.0;      // m(m+1)
  double eigenvalue = 0.0;    // weighted projection <f, C f> / <f, f>
  double eigen_residual = 0.0;      // sup |C f - m(m+1) f| / (max(1, m(m+1)) sup|f|)
  double operational_residual = 0.0;  // differential vs algebraic form
};

CasimirCheck casimir_check(const SatelliteAlgebra& algebra, const ExtendedState& state,
                           const Grid& grid);

/// Differential vs algebraic Casimir only (any state).
double casimir_operational_residual(const SatelliteAlgebra& algebra, const ExtendedState& state,
                                    const Grid& grid);

struct ShiftMeasurement {
  std::complex<double> coefficient;  // image = coefficient * target
  double magnitude = 0.0;
  double residual = 0.0;             // proportionality misfit
  bool annihilated = false;          // no target: magnitude = sup|image| / sup|f|
};

/// Measures G psi against a normalized target state (weighted least squares
/// under the grid's measure) or, without a target, the relative sup norm of
/// the image.
ShiftMeasurement measure_shift(const SatelliteAlgebra& algebra, const ExtendedState& state,
                               Generator which, Direction direction,
                               const RealFunction* target, const Grid& grid);

/// Sums of two or three Gaussians placed in the middle of the domain, from a
/// seeded mt19937.
std::vector<RealFunctionPtr> random_smooth_functions(Domain domain, int count,
                                                     std::uint32_t seed);

}  // namespace satalg
