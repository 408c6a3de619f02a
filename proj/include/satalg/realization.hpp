#pragma once

#include <complex>

#include "satalg/function.hpp"

namespace satalg {

/// Concrete first-order form of the shift generators in a model's own
/// coordinate. On an x-part f carrying labels (s, t):
///   S+- f = phase [ +-A f' + (s + shift) B f + t C f ],  s -> s +- 1
///   T+- f = phase [ +-A f' + (t + shift) B f + s C f ],  t -> t +- 1
/// with shift = shift_plus or shift_minus.
///
/// The Casimir is written through the type E frame: with g = gauge (or 1),
///   C f = (1/g) (sinh2 / alpha^2) [ dscale^2 (g f)'' - 2 alpha q coth (g f)
///                                   + lambda (g f) ],
/// q = alpha s t and lambda = -alpha^2 (s^2 + t^2).
struct GeneratorRealization {
  RealFunctionPtr A;
  RealFunctionPtr B;
  RealFunctionPtr C;
  double shift_plus = 0.0;
  double shift_minus = 0.0;
  std::complex<double> phase{1.0, 0.0};

  double alpha = 1.0;
  double dscale = 1.0;
  RealFunctionPtr sinh2;
  RealFunctionPtr coth;
  RealFunctionPtr gauge;  // may be null
};

}  // namespace satalg
