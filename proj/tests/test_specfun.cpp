#include <doctest.h>

#include <cmath>

#include "satalg/error.hpp"
#include "satalg/specfun.hpp"

using namespace satalg;
using doctest::Approx;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("gamma_real reference values") {
  CHECK(gamma_real(1.0) == Approx(1.0).epsilon(1e-14));
  CHECK(gamma_real(0.5) == Approx(1.772453850905516).epsilon(1e-13));
  CHECK(gamma_real(4.5) == Approx(11.63172839656745).epsilon(1e-13));
  CHECK(gamma_real(6.0) == Approx(120.0).epsilon(1e-13));
}

TEST_CASE("gamma_real recurrence and reflection") {
  for (double x : {0.5, 1.5, 3.531, 7.25}) {
    CHECK(gamma_real(x + 1.0) == Approx(x * gamma_real(x)).epsilon(1e-12));
  }
  for (double x : {0.25, 0.6, -1.3}) {
    CHECK(gamma_real(x) * gamma_real(1.0 - x) ==
          Approx(kPi / std::sin(kPi * x)).epsilon(1e-10));
  }
}

TEST_CASE("gamma_real poles") {
  CHECK_THROWS_AS(gamma_real(0.0), Error);
  CHECK_THROWS_AS(gamma_real(-3.0), Error);
}

TEST_CASE("log_gamma_real matches log of gamma_real") {
  for (double x : {0.3, 1.0, 2.5, 17.25, 40.0}) {
    CHECK(log_gamma_real(x) == Approx(std::log(gamma_real(x))).epsilon(1e-12));
  }
  CHECK(log_gamma_real(200.0) == Approx(std::lgamma(200.0)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma_real(-1.0), Error);
}

TEST_CASE("terminating 2F1") {
  CHECK(Hyp2F1Spec{0, 7, 2}.terminating());
  CHECK(Hyp2F1Spec{-2, 1, 2}.degree() == 2);
  CHECK_FALSE(Hyp2F1Spec{0.5, 1, 2}.terminating());
  CHECK(hyp2f1(Hyp2F1Spec{0, 7, 2}, 0.3) == 1.0);
  CHECK(hyp2f1(Hyp2F1Spec{-1, 2, 4}, 1.0) == Approx(0.5).epsilon(1e-15));
  CHECK(hyp2f1(Hyp2F1Spec{-2, 1, 2}, 1.0) == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(hyp2f1(Hyp2F1Spec{-3, 2.5, 1.5}, 0.0) == 1.0);
}

TEST_CASE("non-terminating 2F1 inside the unit disc") {
  // 2F1(1, 1; 2; w) = -log(1 - w) / w
  for (double w : {-0.8, -0.3, 0.2, 0.6}) {
    CHECK(hyp2f1(Hyp2F1Spec{1, 1, 2}, w) == Approx(-std::log1p(-w) / w).epsilon(1e-12));
  }
  CHECK_THROWS_AS(hyp2f1(Hyp2F1Spec{0.5, 1, 2}, 1.2), Error);
  CHECK_THROWS_AS(hyp2f1(Hyp2F1Spec{0.5, 1, -2}, 0.1), Error);
}

TEST_CASE("2F1 derivatives") {
  CHECK(hyp2f1_derivative(Hyp2F1Spec{0, 7, 2}, 0.3, 1) == 0.0);
  CHECK(hyp2f1_derivative(Hyp2F1Spec{-1, 2, 4}, 0.9, 1) == Approx(-0.5).epsilon(1e-15));
  CHECK(hyp2f1_derivative(Hyp2F1Spec{-2, 1, 2}, 0.4, 1) ==
        Approx(-1.0 + 0.8 / 3.0).epsilon(1e-14));

  // Against central differences over [-0.9, 0.9].
  const Hyp2F1Spec specs[] = {{-4, 6.5, 2.25}, {0.7, 1.3, 2.9}};
  for (const Hyp2F1Spec& s : specs) {
    for (int i = 0; i < 50; ++i) {
      const double w = -0.9 + 1.8 * i / 49.0;
      const double h = 1e-6;
      const double fd = (hyp2f1(s, w + h) - hyp2f1(s, w - h)) / (2 * h);
      CHECK(hyp2f1_derivative(s, w, 1) == Approx(fd).epsilon(1e-7));
      const double fd2 = (hyp2f1_derivative(s, w + h, 1) - hyp2f1_derivative(s, w - h, 1)) / (2 * h);
      CHECK(hyp2f1_derivative(s, w, 2) == Approx(fd2).epsilon(1e-6));
    }
  }
}

TEST_CASE("2F1 on jets carries the chain rule") {
  const Hyp2F1Spec s{-3, 4.5, 1.75};
  const RealJet w = RealJet::variable(0.35);
  const RealJet f = hyp2f1(s, w);
  CHECK(f.value() == Approx(hyp2f1(s, 0.35)).epsilon(1e-15));
  CHECK(f.derivative(1) == Approx(hyp2f1_derivative(s, 0.35, 1)).epsilon(1e-14));
  CHECK(f.derivative(2) == Approx(hyp2f1_derivative(s, 0.35, 2)).epsilon(1e-13));
}
