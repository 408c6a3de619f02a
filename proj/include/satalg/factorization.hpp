#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "satalg/function.hpp"
#include "satalg/numerics.hpp"

namespace satalg {

enum class ClassTag { I, II };
enum class Geometry { hyperbolic, trigonometric };

/// Where the type E coordinate xbar = x + p sits relative to the real axis.
/// `imaginary_half_period` is p = i pi / (2 alpha): coth -> tanh,
/// 1/sinh^2 -> -sech^2 and sinh^2 -> -cosh^2 on the real line.
enum class OffsetKind { real, imaginary_half_period };

enum class LadderSign { plus, minus };

/// Hyperbolic type E factorizable problem
///   psi'' - [m(m+1) alpha^2 / sinh^2(alpha xbar) + 2 alpha q coth(alpha xbar)] psi
///         + lambda psi = 0.
struct TypeEProblem {
  double alpha = 1.0;
  OffsetKind offset = OffsetKind::real;
  double p_offset = 0.0;  // real part of the shift; only used for OffsetKind::real
  double q = 0.0;
  std::vector<double> m_values;

  double L(double m) const;

  /// coth(alpha xbar), 1/sinh^2(alpha xbar) and sinh^2(alpha xbar) written on
  /// the real coordinate x.
  template <class T>
  Jet<T> coth_bar(const Jet<T>& x) const;
  template <class T>
  Jet<T> csch2_bar(const Jet<T>& x) const;
  template <class T>
  Jet<T> sinh2_bar(const Jet<T>& x) const;

  /// k(x, m) = m alpha coth(alpha xbar) + q/m.
  template <class T>
  Jet<T> k(const Jet<T>& x, double m) const;
  /// r(x, m) = -m(m+1) alpha^2 / sinh^2(alpha xbar) - 2 alpha q coth(alpha xbar).
  template <class T>
  Jet<T> r(const Jet<T>& x, double m) const;
};

/// Validates alpha > 0, q != 0, m >= 0 and strict monotonicity of L over
/// m_values. Trigonometric geometry is rejected as out of scope.
TypeEProblem make_type_e_problem(double alpha, double q, std::vector<double> m_values,
                                 OffsetKind offset = OffsetKind::real, double p_offset = 0.0,
                                 Geometry geometry = Geometry::hyperbolic);

/// Type A constants (complex in general).
struct TypeAProblem {
  std::complex<double> abar{1.0, 0.0};
  std::complex<double> cbar{0.0, 0.0};
  std::complex<double> dbar{0.0, 0.0};
  double pbar = 0.0;
};

struct TypeEFunctions {
  std::function<double(double)> r;
  std::function<double(double)> k;
  double L = 0.0;
};

struct TypeAFunctions {
  std::function<std::complex<double>(double)> r;
  std::function<std::complex<double>(double)> k;
  std::complex<double> L;
};

TypeEFunctions factorization_functions(const TypeEProblem& problem, double m);
TypeAFunctions factorization_functions(const TypeAProblem& problem, double m);

ClassTag classify_problem(const TypeEProblem& problem);

/// L(l+1) for class I, L(l) for class II.
double eigenvalue_lambda(const TypeEProblem& problem, double l, ClassTag cls);

/// H^{+-}(m) f = +-f' + k(x, m) f as an evaluable function.
RealFunctionPtr apply_ladder(const TypeEProblem& problem, double m, LadderSign sign,
                             RealFunctionPtr f);

struct FactorizationResidual {
  double res1 = 0.0;
  std::optional<double> res2;  // empty when m = 0 (k(x, 0) is undefined)
};

/// res1: H+(m+1) H-(m+1) f - [lambda - L(m+1)] f; res2: H-(m) H+(m) f -
/// [lambda - L(m)] f. Each is a sup over the grid interior (endpoints
/// excluded) relative to sup|f| max(1, |lambda - L|).
FactorizationResidual factorization_residual(const TypeEProblem& problem, double m,
                                             double lambda, const RealFunction& f,
                                             const Grid& grid);

struct LadderStep {
  double coefficient = 0.0;
  double predicted = 0.0;
  double residual = 0.0;
};

/// Raising: H-(m+1) f_m against f_{m+1}, predicted sqrt(lambda - L(m+1)).
/// Lowering: H+(m) f_m against f_{m-1}, predicted sqrt(lambda - L(m)).
/// Without a target the coefficient is sup|image| / sup|f_m| (annihilation).
LadderStep ladder_step_check(const TypeEProblem& problem, double m, double lambda,
                             RealFunctionPtr f_m, RealFunctionPtr f_target,
                             const Grid& grid, LadderSign direction = LadderSign::minus);

struct Proportionality {
  std::complex<double> c;
  double residual = 0.0;
};

/// Weighted least-squares scalar c minimizing ||f - c g|| under the grid's
/// quadrature weights; residual = ||f - c g|| / ||f||.
Proportionality proportional_coefficient(std::span<const std::complex<double>> f,
                                         std::span<const std::complex<double>> g,
                                         std::span<const double> weights);
Proportionality proportional_coefficient(std::span<const double> f, std::span<const double> g,
                                         std::span<const double> weights);

}  // namespace satalg
