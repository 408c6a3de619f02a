#pragma once

#include "satalg/jet.hpp"

namespace satalg {

// Tolerance used to decide whether a hypergeometric parameter is a
// nonpositive integer.
inline constexpr double kIntegerTolerance = 1e-9;

/// Real Gamma function (Lanczos, g = 7, nine coefficients; reflection below
/// 1/2). Throws ErrorCode::pole at nonpositive integers.
double gamma_real(double x);

/// log Gamma(x) for x > 0, same approximation; safe where Gamma overflows.
double log_gamma_real(double x);

/// Parameter triple of the Gauss hypergeometric series 2F1(a, b; c; w).
struct Hyp2F1Spec {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;

  /// True iff a or b is a nonpositive integer (within kIntegerTolerance).
  bool terminating() const;
  /// Polynomial degree of a terminating series; -1 otherwise.
  int degree() const;
};

/// 2F1(a, b; c; w). Terminating series are summed exactly for any real w;
/// otherwise |w| < 1 is required. T is double or Wide.
template <class T>
T hyp2f1(const Hyp2F1Spec& spec, T w);

/// d^order/dw^order 2F1 via (a)_k (b)_k / (c)_k 2F1(a+k, b+k; c+k; w).
template <class T>
T hyp2f1_derivative(const Hyp2F1Spec& spec, T w, int order);

/// 2F1 composed with a jet argument (all derivatives up to the jet order).
template <class T>
Jet<T> hyp2f1(const Hyp2F1Spec& spec, const Jet<T>& w);

extern template double hyp2f1<double>(const Hyp2F1Spec&, double);
extern template Wide hyp2f1<Wide>(const Hyp2F1Spec&, Wide);
extern template double hyp2f1_derivative<double>(const Hyp2F1Spec&, double, int);
extern template Wide hyp2f1_derivative<Wide>(const Hyp2F1Spec&, Wide, int);
extern template RealJet hyp2f1<double>(const Hyp2F1Spec&, const RealJet&);
extern template WideJet hyp2f1<Wide>(const Hyp2F1Spec&, const WideJet&);

}  // namespace satalg
