#include <doctest.h>

#include <cmath>
#include <string>

#include "satalg/error.hpp"
#include "satalg/models.hpp"
#include "satalg/numerics.hpp"

using namespace satalg;
using doctest::Approx;

namespace {

ModelPtr gmp() { return make_gmp({8.0, 1.0, 1.0, 1.0, 1.0}); }
ModelPtr rm() { return make_rosen_morse({3.0, 6.0, 1.0, 1.0, 1.0}); }
ModelPtr kepler() { return make_kepler({6.25, 1.0}); }

double param(const ParamList& list, const std::string& name) {
  for (const auto& [k, v] : list) {
    if (k == name) return v;
  }
  FAIL("missing parameter " << name);
  return 0.0;
}

std::string error_text(const std::string& json) {
  try {
    load_model_json(json);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("state counts") {
  CHECK(gmp()->states().size() == 3);
  CHECK(rm()->states().size() == 2);
  const auto ks = kepler()->states();
  REQUIRE(ks.size() == 3);
  CHECK(ks[0] == QuantumNumbers{1, 0});
  CHECK(largest_integer_below(2.5) == 2);
  CHECK(largest_integer_below(3.0) == 2);
}

TEST_CASE("closed-form energies") {
  CHECK(rm()->energy({0, 0}) == Approx(-5.0).epsilon(1e-14));
  CHECK(rm()->energy({1, 0}) == Approx(-3.125).epsilon(1e-14));
  CHECK(kepler()->energy({1, 0}) == Approx(-13.28125).epsilon(1e-14));
  CHECK(kepler()->energy({2, 0}) == Approx(-0.1328125).epsilon(1e-12));
  CHECK(kepler()->energy({2, 1}) == Approx(-0.1328125).epsilon(1e-12));
  CHECK(gmp()->energy({0, 0}) == Approx(3.406128).epsilon(1e-6));
  CHECK_FALSE(rm()->admissible({2, 0}));
  CHECK_FALSE(kepler()->admissible({2, 2}));
  CHECK_FALSE(kepler()->admissible({3, 0}));
  CHECK(kepler()->admissible({2, 1}));
  CHECK_THROWS_AS(rm()->eigenfunction({2, 0}), Error);
}

TEST_CASE("type E maps and two-route lambda") {
  CHECK(gmp()->type_e_l({0, 0}) == Approx(3.531129).epsilon(1e-6));
  // lambda = -(s^2 + t^2) with t = -(m + 1), s = 48 / (m + 1), m (m + 1) = 16.
  const double N = 0.5 * (1.0 + std::sqrt(65.0));
  CHECK(gmp()->lambda_from_energy({0, 0}) == Approx(-(N * N + 48.0 * 48.0 / (N * N))).epsilon(1e-12));
  CHECK(rm()->type_e_l({0, 0}) == 3.0);
  CHECK(rm()->lambda_from_energy({0, 0}) == Approx(-10.0).epsilon(1e-14));
  CHECK(rm()->class_tag() == ClassTag::II);
  CHECK(kepler()->class_tag() == ClassTag::I);
  CHECK(kepler()->lambda_from_energy({2, 1}) == Approx(-13.765625).epsilon(1e-13));

  for (const ModelPtr& m : {gmp(), rm(), kepler()}) {
    const TypeEProblem p = m->type_e_problem();
    for (const QuantumNumbers& qn : m->states()) {
      const double rule = eigenvalue_lambda(p, m->type_e_l(qn), m->class_tag());
      const double map = m->lambda_from_energy(qn);
      CHECK(std::abs(rule - map) <= 1e-10 * std::max(1.0, std::abs(map)));
    }
  }
}

TEST_CASE("labels") {
  const StateLabels g = gmp()->labels({0, 0});
  CHECK(g.s == Approx(10.593387).epsilon(1e-6));
  CHECK(g.t == Approx(-4.531129).epsilon(1e-6));
  const StateLabels r = rm()->labels({1, 0});
  CHECK(r.s == Approx(1.5));
  CHECK(r.t == Approx(2.0));
  const StateLabels k = kepler()->labels({2, 1});
  CHECK(k.s == Approx(3.125));
  CHECK(k.t == Approx(-2.0));

  for (const ModelPtr& m : {gmp(), rm(), kepler()}) {
    for (const QuantumNumbers& qn : m->states()) {
      for (const NamedValue& v : m->label_identities(qn)) CHECK(std::abs(v.value) < 1e-10);
    }
  }
}

TEST_CASE("epsilon flip negates the labels") {
  const ModelPtr flipped = rm()->with_epsilon(-1);
  CHECK(flipped->epsilon() == -1);
  CHECK(rm()->canonical_epsilon() == 1);
  const StateLabels a = rm()->labels({0, 0});
  const StateLabels b = flipped->labels({0, 0});
  CHECK(b.s == Approx(-a.s));
  CHECK(b.t == Approx(-a.t));
}

TEST_CASE("eigenfunctions are normalized under the declared measure") {
  for (const ModelPtr& m : {gmp(), rm(), kepler()}) {
    const Grid g = m->default_grid(kNormalizationCount);
    for (const QuantumNumbers& qn : m->states()) {
      CAPTURE(m->name());
      CAPTURE(qn.n);
      CHECK(quadrature_norm(*m->eigenfunction(qn), g) == Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("eigenfunction shapes") {
  // RM n = 0 is e^{-x} sech^3 x up to normalization.
  const WavefunctionPtr psi = rm()->eigenfunction({0, 0});
  const double ratio = psi->value(0.7) / psi->value(-0.4);
  const double expect = (std::exp(-0.7) / std::pow(std::cosh(0.7), 3)) /
                        (std::exp(0.4) / std::pow(std::cosh(0.4), 3));
  CHECK(ratio == Approx(expect).epsilon(1e-13));

  // Kepler (2, 1) has n_r = 0: psi is sinh(x) e^{-3.125 x} up to normalization.
  const WavefunctionPtr k = kepler()->eigenfunction({2, 1});
  CHECK(k->value(1.5) / k->value(0.5) ==
        Approx(std::sinh(1.5) / std::sinh(0.5) * std::exp(-3.125)).epsilon(1e-12));
}

TEST_CASE("predicted coefficients") {
  const auto t_minus = rm()->predicted_coefficient({0, 0}, Generator::T, Direction::minus);
  REQUIRE(t_minus.has_value());
  // (s, t, m) = (1, 3, 3): radicand 2 * 4 * 2 * 6 * 1 / (3 * 1 * 3) = 96/9.
  CHECK(std::abs(*t_minus) == Approx(std::sqrt(96.0 / 9.0)).epsilon(1e-13));
  CHECK(std::abs(t_minus->real()) < 1e-15);

  const auto s_plus = kepler()->predicted_coefficient({2, 1}, Generator::S, Direction::plus);
  REQUIRE(s_plus.has_value());
  CHECK(std::abs(*s_plus) == Approx(2.196430).epsilon(1e-6));

  const auto top = kepler()->predicted_coefficient({2, 1}, Generator::T, Direction::plus);
  REQUIRE(top.has_value());
  CHECK(std::abs(*top) == 0.0);

  try {
    gmp()->predicted_coefficient({0, 0}, Generator::S, Direction::plus);
    FAIL("GMP coefficient available");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unavailable);
  }
}

TEST_CASE("satellite maps") {
  const SatelliteTarget k = kepler()->satellite_map({2, 1}, Generator::S, Direction::plus);
  REQUIRE(k.model);
  CHECK(param(k.params, "nu") == 8.25);
  CHECK(param(k.params, "R") == Approx(1.32));
  CHECK(k.model->labels(k.qn).s == Approx(4.125));
  CHECK(k.model->conserved_quantity(k.qn) == kepler()->conserved_quantity({2, 1}));

  const SatelliteTarget r = rm()->satellite_map({0, 0}, Generator::S, Direction::plus);
  REQUIRE(r.model);
  CHECK(param(r.params, "B") == Approx(6.0));
  CHECK(param(r.params, "C") == 6.0);
  CHECK(r.qn.n == 0);

  const ModelPtr g = gmp();
  const StateLabels before = g->labels({0, 0});
  const SatelliteTarget gs = g->satellite_map({0, 0}, Generator::S, Direction::plus);
  REQUIRE(gs.model);
  const double kb2 = param(gs.params, "b") * param(gs.params, "b") *
                     2.0 * param(gs.params, "D") / (param(gs.params, "a") * param(gs.params, "a"));
  CHECK(kb2 == Approx(16.0).epsilon(1e-12));
  const StateLabels after = gs.model->labels(gs.qn);
  CHECK(std::abs(after.s - (before.s + 1.0)) < 1e-10);
  CHECK(std::abs(after.t - before.t) < 1e-10);
  CHECK(std::abs(gs.model->conserved_quantity(gs.qn) - 16.0) < 1e-10);
}

TEST_CASE("parameter validation") {
  CHECK(error_text(R"({"model":"rosen_morse","params":{"B":13,"C":6}})").find("|B| < 2C") !=
        std::string::npos);
  CHECK_FALSE(error_text(R"({"model":"kepler","params":{"nu":6.25,"radius":1}})").empty());
  CHECK_FALSE(error_text(R"({"model":"kepler","params":{"nu":-1}})").empty());
  CHECK_FALSE(error_text(R"({"model":"morse","params":{}})").empty());
  CHECK_FALSE(error_text("{not json").empty());
  CHECK_FALSE(error_text(R"({"model":"gmp","params":{"D":8,"b":"one"}})").empty());
  // nu below 1 leaves no bound state.
  CHECK_FALSE(error_text(R"({"model":"kepler","params":{"nu":0.5}})").empty());
  CHECK(make_kepler({0.5, 1.0}, false)->states().empty());

  const ModelPtr m = load_model_json(R"({"model":"kepler","params":{"nu":6.25}})");
  CHECK(m->kind() == ModelKind::kepler);
  CHECK(param(m->params(), "R") == 1.0);
}
