#pragma once

// Scalar back ends for jet arithmetic. Identity checks (factorization,
// commutators, Casimir) run in binary128 because the generator coefficients
// grow like exp(2|x|) in the tails and double rounding swamps the residual.

#include <quadmath.h>

#include <cmath>

namespace satalg {

using Wide = __float128;

namespace sm {

inline double exp(double x) { return std::exp(x); }
inline double expm1(double x) { return std::expm1(x); }
inline double log(double x) { return std::log(x); }
inline double log1p(double x) { return std::log1p(x); }
inline double pow(double x, double p) { return std::pow(x, p); }
inline double sqrt(double x) { return std::sqrt(x); }
inline double sinh(double x) { return std::sinh(x); }
inline double cosh(double x) { return std::cosh(x); }
inline double tanh(double x) { return std::tanh(x); }
inline double abs(double x) { return std::abs(x); }

inline Wide exp(Wide x) { return expq(x); }
inline Wide expm1(Wide x) { return expm1q(x); }
inline Wide log(Wide x) { return logq(x); }
inline Wide log1p(Wide x) { return log1pq(x); }
inline Wide pow(Wide x, Wide p) { return powq(x, p); }
inline Wide sqrt(Wide x) { return sqrtq(x); }
inline Wide sinh(Wide x) { return sinhq(x); }
inline Wide cosh(Wide x) { return coshq(x); }
inline Wide tanh(Wide x) { return tanhq(x); }
inline Wide abs(Wide x) { return fabsq(x); }

}  // namespace sm

inline double to_double(double x) { return x; }
inline double to_double(Wide x) { return static_cast<double>(x); }

}  // namespace satalg
