#pragma once

// Coefficient measurement shared by the verification suites and the ladder
// command.

#include <complex>
#include <optional>

#include "satalg/algebra.hpp"

namespace satalg::detail {

/// Measured |c| for G psi: least squares against the normalized satellite
/// eigenfunction when it exists, else the relative sup norm of the image.
struct CoefficientMeasurement {
  SatelliteTarget target;
  ShiftMeasurement shift;
  bool against_target = false;
};

CoefficientMeasurement measure(const ModelPtr& model, const QuantumNumbers& qn, Generator g,
                               Direction d, const Grid& grid);

struct Prediction {
  bool available = true;  // false: family has no closed form
  std::optional<std::complex<double>> value;
};

Prediction predict(const Model& model, const QuantumNumbers& qn, Generator g, Direction d);

}  // namespace satalg::detail
