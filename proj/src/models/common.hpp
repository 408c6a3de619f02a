#pragma once

// Helpers shared by the three model families.

#include <cmath>
#include <sstream>
#include <string>

#include "satalg/error.hpp"
#include "satalg/models.hpp"
#include "satalg/numerics.hpp"
#include "satalg/specfun.hpp"

namespace satalg::detail {

// Every admissible state has decayed by about e^-28 at the end of the
// auto-sized domain.
inline constexpr double kDecayLengths = 28.0;
inline constexpr int kNormalizationCount = satalg::kNormalizationCount;
inline constexpr double kHalfLineStart = 1e-6;

inline void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::invalid_parameter, message);
}

inline void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::invalid_parameter, std::string(name) + " must be finite");
  }
}

inline Grid domain_grid(Domain d, int count, Weight w = {}) {
  return Grid::uniform(d.lo, d.hi, count, std::move(w));
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

/// Integer-valued labels keep the double label exact; the 2F1 parameters are
/// built from the same doubles in every back end.
inline Hyp2F1Spec spec(double a, double b, double c) { return Hyp2F1Spec{a, b, c}; }

/// (s, t) -> (-s, -t) when the requested sign differs from the canonical one.
inline StateLabels orient(StateLabels canonical, int epsilon, int canonical_epsilon) {
  if (epsilon == canonical_epsilon) return canonical;
  return {-canonical.s, -canonical.t};
}

inline void check_epsilon(int epsilon) {
  if (epsilon != 1 && epsilon != -1) {
    throw Error(ErrorCode::invalid_parameter, "epsilon must be +1 or -1");
  }
}

/// phase * sqrt(num / den). Empty when the radicand is negative or the
/// denominator vanishes; radicands within rounding of zero give 0.
inline std::optional<std::complex<double>> radical_coefficient(double num, double den,
                                                               std::complex<double> phase) {
  if (den == 0.0 || !std::isfinite(num) || !std::isfinite(den)) return std::nullopt;
  double r = num / den;
  if (r < 0.0) {
    if (std::abs(num) > 1e-12 * (1.0 + std::abs(den))) return std::nullopt;
    r = 0.0;
  }
  return phase * std::sqrt(r);
}

inline double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace satalg::detail
