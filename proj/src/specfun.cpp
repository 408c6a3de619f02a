#include "satalg/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

namespace satalg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::pole: return "pole";
    case ErrorCode::domain: return "domain";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::classification: return "classification";
    case ErrorCode::invalid_parameter: return "invalid_parameter";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::out_of_scope: return "out_of_scope";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::no_convergence: return "no_convergence";
    case ErrorCode::unavailable: return "unavailable";
    case ErrorCode::parse: return "parse";
  }
  return "unknown";
}

namespace {

bool is_nonpositive_integer(double v) {
  const double r = std::round(v);
  return r <= 0.0 && std::abs(v - r) <= kIntegerTolerance;
}

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double pochhammer(double x, int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= x + i;
  return p;
}

}  // namespace

double gamma_real(double x) {
  if (is_nonpositive_integer(x)) {
    throw Error(ErrorCode::pole, "gamma pole at x = " + std::to_string(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_real(1.0 - x));
  }
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

double log_gamma_real(double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::domain, "log_gamma_real needs x > 0");
  if (x < 0.5) return std::log(gamma_real(x));
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

bool Hyp2F1Spec::terminating() const {
  return is_nonpositive_integer(a) || is_nonpositive_integer(b);
}

int Hyp2F1Spec::degree() const {
  int d = -1;
  for (double p : {a, b}) {
    if (is_nonpositive_integer(p)) {
      const int n = static_cast<int>(-std::round(p));
      d = (d < 0) ? n : std::min(d, n);
    }
  }
  return d;
}

template <class T>
T hyp2f1(const Hyp2F1Spec& spec, T w) {
  const int deg = spec.degree();
  const bool c_pole = is_nonpositive_integer(spec.c);
  const int c_index = c_pole ? static_cast<int>(-std::round(spec.c)) : -1;
  const T a = spec.a, b = spec.b, c = spec.c;

  if (deg >= 0) {
    // (c)_k vanishes for k > c_index, so the pole is hit iff c_index < deg.
    if (c_pole && c_index < deg) {
      throw Error(ErrorCode::pole, "2F1: c is a nonpositive integer before termination");
    }
    T term = 1, sum = 1;
    for (int k = 0; k < deg; ++k) {
      term *= (a + k) * (b + k) / ((c + k) * T(k + 1)) * w;
      sum += term;
    }
    return sum;
  }
  if (c_pole) throw Error(ErrorCode::pole, "2F1: c is a nonpositive integer");
  if (!(sm::abs(w) < T(1))) {
    throw Error(ErrorCode::domain, "2F1: non-terminating series needs |w| < 1");
  }
  const T tol = std::is_same_v<T, double> ? T(1e-17) : T(1e-34);
  T term = 1, sum = 1;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * T(k + 1)) * w;
    sum += term;
    if (sm::abs(term) <= tol * sm::abs(sum)) return sum;
  }
  throw Error(ErrorCode::no_convergence, "2F1 series did not converge");
}

template <class T>
T hyp2f1_derivative(const Hyp2F1Spec& spec, T w, int order) {
  if (order < 0) throw Error(ErrorCode::out_of_range, "negative derivative order");
  const int deg = spec.degree();
  if (deg >= 0 && order > deg) return T(0);
  const double factor = pochhammer(spec.a, order) * pochhammer(spec.b, order) /
                        pochhammer(spec.c, order);
  if (!std::isfinite(factor)) {
    throw Error(ErrorCode::pole, "2F1 derivative: c hits a nonpositive integer");
  }
  return T(factor) * hyp2f1<T>({spec.a + order, spec.b + order, spec.c + order}, w);
}

template <class T>
Jet<T> hyp2f1(const Hyp2F1Spec& spec, const Jet<T>& w) {
  std::array<T, kJetOrder + 1> d{};
  for (int k = 0; k <= kJetOrder; ++k) d[k] = hyp2f1_derivative<T>(spec, w.value(), k);
  return compose(w, d);
}

template double hyp2f1<double>(const Hyp2F1Spec&, double);
template Wide hyp2f1<Wide>(const Hyp2F1Spec&, Wide);
template double hyp2f1_derivative<double>(const Hyp2F1Spec&, double, int);
template Wide hyp2f1_derivative<Wide>(const Hyp2F1Spec&, Wide, int);
template RealJet hyp2f1<double>(const Hyp2F1Spec&, const RealJet&);
template WideJet hyp2f1<Wide>(const Hyp2F1Spec&, const WideJet&);

}  // namespace satalg
