#include "satalg/transform.hpp"

#include <algorithm>
#include <cmath>

namespace satalg {

namespace {

double label_base(double l, ClassTag cls) { return cls == ClassTag::I ? l + 1.0 : l; }

}  // namespace

std::array<BridgeSolution, 2> solve_bridge(const TypeEProblem& problem, double l, ClassTag cls,
                                           int epsilon) {
  if (epsilon != 1 && epsilon != -1) {
    throw Error(ErrorCode::invalid_parameter, "epsilon must be +1 or -1");
  }
  const double base = label_base(l, cls);
  if (base == 0.0) {
    throw Error(ErrorCode::division_by_zero,
                cls == ClassTag::I ? "bridge needs l + 1 != 0" : "bridge needs l != 0");
  }
  using C = std::complex<double>;
  const C a(0.0, problem.alpha);
  const C i(0.0, 1.0);
  // i eps q / (a base) is real for a = i alpha.
  const C imag_term = i * double(epsilon) * problem.q / (a * base);
  const C real_term = double(epsilon) * base;

  BridgeSolution s1;
  s1.branch = Branch::sol1;
  s1.epsilon = epsilon;
  s1.dbar = real_term;
  s1.mbar_plus_cbar = imag_term - 0.5;
  s1.s = imag_term.real();
  s1.t = real_term.real();

  BridgeSolution s2 = s1;
  s2.branch = Branch::sol2;
  s2.dbar = imag_term;
  s2.mbar_plus_cbar = real_term - 0.5;
  return {s1, s2};
}

int choose_epsilon(const TypeEProblem& problem) {
  if (problem.q == 0.0) throw Error(ErrorCode::invalid_parameter, "q != 0 violated");
  return problem.q > 0.0 ? 1 : -1;
}

LabelIdentities label_consistency(const BridgeSolution& sol, const TypeEProblem& problem,
                                  double lambda) {
  const double a2 = problem.alpha * problem.alpha;
  return {std::abs(sol.s * sol.s + sol.t * sol.t + lambda / a2),
          std::abs(sol.s * sol.t - problem.q / problem.alpha)};
}

double lambda_link_residual(const BridgeSolution& sol, const TypeEProblem& problem,
                            double lambda) {
  using C = std::complex<double>;
  const C a(0.0, problem.alpha);
  const C d = sol.dbar;
  const C value = -problem.q * problem.q / (d * d) + a * a * d * d;
  return std::abs(value - lambda) / std::max(1.0, std::abs(lambda));
}

TypeAProblem to_type_a(const BridgeSolution& sol) {
  TypeAProblem p;
  p.abar = 1.0;
  p.pbar = 0.0;
  p.dbar = sol.dbar;
  p.cbar = sol.mbar_plus_cbar;
  return p;
}

SatelliteShift satellite_shift(const TypeEProblem& problem, double l, ClassTag cls,
                               int epsilon, Generator which, Direction direction) {
  const double base = label_base(l, cls);
  if (base == 0.0) throw Error(ErrorCode::division_by_zero, "satellite shift at zero label");
  const int sign = direction_sign(direction);
  SatelliteShift out;
  if (which == Generator::S) {
    out.l = l;
    out.q = problem.q + sign * epsilon * problem.alpha * base;
  } else {
    out.l = l + sign * epsilon;
    out.q = problem.q * (base + sign * epsilon) / base;
  }
  return out;
}

}  // namespace satalg
