#pragma once

#include <array>
#include <complex>

#include "satalg/factorization.hpp"

namespace satalg {

enum class Branch { sol1, sol2 };

/// Link constants of the type E -> type A bridge for one branch and sign,
/// with the real hyperbolic labels (s, t).
struct BridgeSolution {
  std::complex<double> dbar;
  std::complex<double> mbar_plus_cbar;  // mbar + cbar (not + 1/2)
  int epsilon = 1;
  Branch branch = Branch::sol1;
  double s = 0.0;
  double t = 0.0;
};

/// Both branches for label l. Class I uses l + 1 in the formulas, class II
/// uses l. The type E constant a is i alpha.
std::array<BridgeSolution, 2> solve_bridge(const TypeEProblem& problem, double l, ClassTag cls,
                                           int epsilon);

/// sign(q).
int choose_epsilon(const TypeEProblem& problem);

struct LabelIdentities {
  double id1 = 0.0;  // |s^2 + t^2 + lambda / alpha^2|
  double id2 = 0.0;  // |s t - q / alpha|
};

LabelIdentities label_consistency(const BridgeSolution& sol, const TypeEProblem& problem,
                                  double lambda);

/// |-q^2 / dbar^2 + a^2 dbar^2 - lambda| relative to max(1, |lambda|), a = i alpha.
double lambda_link_residual(const BridgeSolution& sol, const TypeEProblem& problem,
                            double lambda);

/// Type A problem carried by a bridge solution (abar = 1, pbar = 0, mbar = 0).
TypeAProblem to_type_a(const BridgeSolution& sol);

enum class Generator { S, T };
enum class Direction { plus, minus };

inline int direction_sign(Direction d) { return d == Direction::plus ? 1 : -1; }

struct SatelliteShift {
  double l = 0.0;
  double q = 0.0;
};

/// Generic label bookkeeping of a shift: S+- keeps l and moves q by
/// +-eps alpha (l+1); T+- moves l by +-eps and rescales q by (l+1+-eps)/(l+1).
/// Class II reads l for l+1 throughout.
SatelliteShift satellite_shift(const TypeEProblem& problem, double l, ClassTag cls,
                               int epsilon, Generator which, Direction direction);

}  // namespace satalg
