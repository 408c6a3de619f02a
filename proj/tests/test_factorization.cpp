#include <doctest.h>

#include <cmath>
#include <complex>

#include "satalg/error.hpp"
#include "satalg/factorization.hpp"
#include "satalg/models.hpp"

using namespace satalg;
using doctest::Approx;

TEST_CASE("type E L(m) and k(x, m)") {
  const TypeEProblem p = make_type_e_problem(1.0, -6.0, {1.0, 2.0});
  CHECK(p.L(1.0) == Approx(-37.0));
  CHECK(p.L(2.0) == Approx(-13.0));

  const TypeEProblem r = make_type_e_problem(1.0, 3.0, {2.0, 3.0, 4.0});
  const TypeEFunctions fns = factorization_functions(r, 2.0);
  CHECK(fns.L == Approx(-6.25));
  for (double x : {0.3, 1.0, 2.5}) {
    CHECK(fns.k(x) == Approx(2.0 / std::tanh(x) + 1.5).epsilon(1e-14));
    const double s = std::sinh(x);
    CHECK(fns.r(x) == Approx(-6.0 / (s * s) - 6.0 / std::tanh(x)).epsilon(1e-14));
  }
}

TEST_CASE("imaginary half-period offset turns coth into tanh") {
  const TypeEProblem p =
      make_type_e_problem(1.0, 3.0, {2.0, 3.0}, OffsetKind::imaginary_half_period);
  const TypeEFunctions fns = factorization_functions(p, 3.0);
  CHECK(fns.k(0.7) == Approx(3.0 * std::tanh(0.7) + 1.0).epsilon(1e-14));
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(make_type_e_problem(0.0, 1.0, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(make_type_e_problem(1.0, 0.0, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(make_type_e_problem(1.0, 1.0, {-1.0, 2.0}), Error);
  try {
    make_type_e_problem(1.0, 1.0, {1.0, 2.0}, OffsetKind::real, 0.0, Geometry::trigonometric);
    FAIL("trigonometric geometry accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::out_of_scope);
  }
}

TEST_CASE("classification and eigenvalue rule") {
  const TypeEProblem inc = make_type_e_problem(1.0, -6.0, {1.0, 2.0});
  CHECK(classify_problem(inc) == ClassTag::I);
  CHECK(eigenvalue_lambda(inc, 1.0, ClassTag::I) == Approx(-13.0));

  const TypeEProblem dec = make_type_e_problem(1.0, 3.0, {2.0, 3.0, 4.0});
  CHECK(classify_problem(dec) == ClassTag::II);
  CHECK(eigenvalue_lambda(dec, 3.0, ClassTag::II) == Approx(-10.0));

  // L(1) = -10, L(2) = -6.25, L(3) = -10.
  try {
    make_type_e_problem(1.0, 3.0, {1.0, 2.0, 3.0});
    FAIL("non-monotonic L accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::classification);
  }
}

TEST_CASE("ladder operators are undefined at m = 0") {
  const TypeEProblem p = make_type_e_problem(1.0, -6.25, {1.0, 2.0});
  const RealFunctionPtr f = make_function([](const auto& x) { return exp(-x); });
  try {
    apply_ladder(p, 0.0, LadderSign::plus, f);
    FAIL("m = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::division_by_zero);
  }
}

TEST_CASE("factorization residual on Kepler eigenfunctions") {
  const ModelPtr kepler = make_kepler({6.25, 1.0});
  const TypeEProblem p = kepler->type_e_problem();
  const Grid g = kepler->type_e_grid(4001);
  for (const QuantumNumbers& qn : kepler->states()) {
    const double m = kepler->type_e_m(qn);
    const double lambda = eigenvalue_lambda(p, kepler->type_e_l(qn), ClassTag::I);
    const FactorizationResidual r =
        factorization_residual(p, m, lambda, *kepler->type_e_function(qn), g);
    CHECK(r.res1 < 1e-8);
    if (m == 0.0) {
      CHECK_FALSE(r.res2.has_value());
    } else {
      REQUIRE(r.res2.has_value());
      CHECK(*r.res2 < 1e-8);
    }
  }

  // A perturbed eigenfunction fails.
  const WavefunctionPtr psi = kepler->type_e_function({2, 1});
  const RealFunctionPtr bent = make_function([psi](const auto& x) {
    using J = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<J, RealJet>) {
      return psi->jet(x.value()) * (1.0 + 0.05 * x);
    } else {
      return psi->wide_jet(x.value()) * (Wide(1) + Wide(0.05) * x);
    }
  });
  const double lambda = eigenvalue_lambda(p, 2.0 - 1.0, ClassTag::I);
  CHECK(factorization_residual(p, 1.0, lambda, *bent, g).res1 > 1e-3);
}

TEST_CASE("Kepler l-step coefficient") {
  const ModelPtr kepler = make_kepler({6.25, 1.0});
  const TypeEProblem p = kepler->type_e_problem();
  const Grid g = kepler->type_e_grid(4001);
  // n = 2: lambda = L(2) = -4 - 6.25^2 / 4, L(1) = -1 - 6.25^2.
  const double lambda = -13.765625;
  const LadderStep step = ladder_step_check(p, 0.0, lambda, kepler->type_e_function({2, 0}),
                                            kepler->type_e_function({2, 1}), g);
  CHECK(step.predicted == Approx(std::sqrt(lambda + 40.0625)).epsilon(1e-14));
  CHECK(step.predicted == Approx(5.128048).epsilon(1e-6));
  CHECK(std::abs(step.coefficient - step.predicted) / step.predicted < 1e-8);
  CHECK(step.residual < 1e-8);

  // Lowering back recovers the same magnitude.
  const LadderStep down =
      ladder_step_check(p, 1.0, lambda, kepler->type_e_function({2, 1}),
                        kepler->type_e_function({2, 0}), g, LadderSign::plus);
  CHECK(std::abs(down.coefficient - step.predicted) / step.predicted < 1e-8);

  // Chain top: l = n - 1 is annihilated by the raising operator.
  const LadderStep top =
      ladder_step_check(p, 1.0, lambda, kepler->type_e_function({2, 1}), nullptr, g);
  CHECK(top.coefficient < 1e-8);

  // Mismatched target.
  const LadderStep wrong = ladder_step_check(p, 0.0, lambda, kepler->type_e_function({2, 0}),
                                             kepler->type_e_function({1, 0}), g);
  CHECK(wrong.residual > 1e-3);
}

TEST_CASE("proportional_coefficient") {
  const Grid g = Grid::uniform(-1.0, 1.0, 201);
  const std::vector<double> w = quadrature_weights(g);
  std::vector<double> even, odd, twice;
  for (double x : g.points()) {
    even.push_back(1.0 + x * x);
    odd.push_back(x);
    twice.push_back(2.0 * (1.0 + x * x));
  }
  const Proportionality p = proportional_coefficient(twice, even, w);
  CHECK(p.c.real() == Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(p.c.imag()) < 1e-15);
  CHECK(p.residual < 1e-14);

  const Proportionality o = proportional_coefficient(odd, even, w);
  CHECK(std::abs(o.c) < 1e-12);
  CHECK(o.residual == Approx(1.0).epsilon(1e-10));

  std::vector<std::complex<double>> fc, gc;
  for (double x : g.points()) {
    gc.emplace_back(x * x + 0.5, 0.0);
    fc.push_back(std::complex<double>(0.0, -3.0) * gc.back());
  }
  const Proportionality pc = proportional_coefficient(fc, gc, w);
  CHECK(std::abs(pc.c - std::complex<double>(0.0, -3.0)) < 1e-13);

  const std::vector<double> zeros(201, 0.0);
  CHECK_THROWS_AS(proportional_coefficient(even, zeros, w), Error);
}
