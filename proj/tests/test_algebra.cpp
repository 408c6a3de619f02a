#include <doctest.h>

#include <cmath>

#include "satalg/algebra.hpp"
#include "satalg/models.hpp"

using namespace satalg;
using doctest::Approx;

namespace {

ModelPtr gmp() { return make_gmp({8.0, 1.0, 1.0, 1.0, 1.0}); }
ModelPtr rm() { return make_rosen_morse({3.0, 6.0, 1.0, 1.0, 1.0}); }
ModelPtr kepler() { return make_kepler({6.25, 1.0}); }

double worst(const std::vector<RelationResidual>& rs) {
  double w = 0.0;
  for (const auto& r : rs) w = std::max(w, r.residual);
  return w;
}

}  // namespace

TEST_CASE("fifteen relations hold on eigenstates") {
  for (const ModelPtr& m : {gmp(), rm(), kepler()}) {
    const SatelliteAlgebra alg(*m);
    const Grid g = m->check_grid(801);
    for (const QuantumNumbers& qn : m->states()) {
      const auto rs = alg.commutator_residuals(make_extended_state(m, qn), g);
      CHECK(rs.size() == 15);
      CAPTURE(m->name());
      CHECK(worst(rs) < 1e-8);
    }
  }
}

TEST_CASE("relations hold on random test functions") {
  const ModelPtr m = rm();
  const SatelliteAlgebra alg(*m);
  const Grid g = m->check_grid(801);
  for (const RealFunctionPtr& f : random_smooth_functions({-4.0, 4.0}, 3, 7u)) {
    CHECK(worst(alg.commutator_residuals(make_test_state(m, f, 0.3, -1.7), g)) < 1e-8);
  }
}

TEST_CASE("Casimir eigenvalues") {
  const ModelPtr r = rm();
  const CasimirCheck cr =
      casimir_check(SatelliteAlgebra(*r), make_extended_state(r, {1, 0}), r->check_grid(801));
  CHECK(cr.expected == 12.0);
  CHECK(cr.eigenvalue == Approx(12.0).epsilon(1e-10));
  CHECK(cr.eigen_residual < 1e-8);
  CHECK(cr.operational_residual < 1e-8);

  const ModelPtr g = gmp();
  const CasimirCheck cg =
      casimir_check(SatelliteAlgebra(*g), make_extended_state(g, {0, 0}), g->check_grid(801));
  CHECK(cg.eigenvalue == Approx(16.0).epsilon(1e-8));

  const ModelPtr k = kepler();
  const CasimirCheck ck =
      casimir_check(SatelliteAlgebra(*k), make_extended_state(k, {2, 1}), k->check_grid(801));
  CHECK(ck.eigenvalue == Approx(2.0).epsilon(1e-8));
}

TEST_CASE("both Casimir forms agree") {
  const ModelPtr k = kepler();
  const SatelliteAlgebra alg(*k);
  const ExtendedState st = make_extended_state(k, {2, 1});
  const Combination diff = concat(alg.casimir_algebraic(st, Generator::S),
                                  scaled(alg.casimir_algebraic(st, Generator::T), {-1, 0}));
  CHECK(cancellation_residual(diff, k->check_grid(801),
                              sup_norm(as_combination(st), k->check_grid(801))) < 1e-10);
}

TEST_CASE("measured shift coefficients") {
  const ModelPtr k = kepler();
  const SatelliteAlgebra alg(*k);
  const ExtendedState st = make_extended_state(k, {2, 1});
  const ExtendedState image = alg.apply_shift(st, Generator::S, Direction::plus);
  REQUIRE(image.qn.has_value());
  REQUIRE(image.model);
  CHECK(image.s == Approx(4.125));
  const WavefunctionPtr target = image.model->eigenfunction(*image.qn);
  const ShiftMeasurement sm = measure_shift(alg, st, Generator::S, Direction::plus, target.get(),
                                            k->check_grid(4001));
  CHECK(sm.magnitude == Approx(2.196428571428571).epsilon(1e-8));
  CHECK(sm.residual < 1e-8);

  // Chain top: T+ annihilates n_r = 0.
  const ShiftMeasurement zero =
      measure_shift(alg, st, Generator::T, Direction::plus, nullptr, k->check_grid(4001));
  CHECK(zero.annihilated);
  CHECK(zero.magnitude < 1e-8);

  const ModelPtr r = rm();
  const SatelliteAlgebra ralg(*r);
  const ExtendedState rs = make_extended_state(r, {0, 0});
  const ExtendedState rimg = ralg.apply_shift(rs, Generator::T, Direction::minus);
  REQUIRE(rimg.qn.has_value());
  const WavefunctionPtr rtarget = rimg.model->eigenfunction(*rimg.qn);
  const ShiftMeasurement rm_t = measure_shift(ralg, rs, Generator::T, Direction::minus,
                                              rtarget.get(), r->check_grid(4001));
  CHECK(rm_t.magnitude == Approx(std::sqrt(96.0 / 9.0)).epsilon(1e-8));
  CHECK(rm_t.residual < 1e-8);
}

TEST_CASE("diagonal generators read the labels") {
  const ModelPtr r = rm();
  const SatelliteAlgebra alg(*r);
  const ExtendedState st = make_extended_state(r, {0, 0});
  const Grid g = r->check_grid(201);
  const Combination d = concat(as_combination(alg.diagonal(st, Generator::T)),
                               scaled(as_combination(st), {-3, 0}));
  CHECK(cancellation_residual(d, g, sup_norm(as_combination(st), g)) < 1e-14);
}

TEST_CASE("random functions are reproducible") {
  const auto a = random_smooth_functions({0.0, 10.0}, 2, 11u);
  const auto b = random_smooth_functions({0.0, 10.0}, 2, 11u);
  CHECK(a[1]->value(4.2) == b[1]->value(4.2));
}
