#include <doctest.h>

#include <cmath>

#include "satalg/error.hpp"
#include "satalg/transform.hpp"

using namespace satalg;
using doctest::Approx;

TEST_CASE("bridge labels, class I") {
  const TypeEProblem p = make_type_e_problem(1.0, -6.0, {1.0, 2.0});
  const double lambda = eigenvalue_lambda(p, 1.0, ClassTag::I);
  const auto sols = solve_bridge(p, 1.0, ClassTag::I, -1);
  CHECK(sols[0].s == Approx(3.0));
  CHECK(sols[0].t == Approx(-2.0));
  CHECK(sols[0].branch == Branch::sol1);
  CHECK(sols[1].branch == Branch::sol2);
  for (const BridgeSolution& s : sols) {
    const LabelIdentities id = label_consistency(s, p, lambda);
    CHECK(id.id1 < 1e-12);
    CHECK(id.id2 < 1e-12);
    CHECK(lambda_link_residual(s, p, lambda) < 1e-12);
  }
  // sol2 swaps the roles of the two link constants.
  CHECK(std::abs(sols[0].dbar - std::complex<double>(-2.0, 0.0)) < 1e-12);
  CHECK(std::abs(sols[1].dbar - std::complex<double>(3.0, 0.0)) < 1e-12);
}

TEST_CASE("bridge labels, class II") {
  // Rosen-Morse reference set: alpha = 1, q = alpha beta / 2 = 3, l = 3.
  const TypeEProblem p =
      make_type_e_problem(1.0, 3.0, {2.0, 3.0}, OffsetKind::imaginary_half_period);
  const auto sols = solve_bridge(p, 3.0, ClassTag::II, 1);
  CHECK(sols[0].s == Approx(1.0));
  CHECK(sols[0].t == Approx(3.0));
  const double lambda = eigenvalue_lambda(p, 3.0, ClassTag::II);
  CHECK(lambda == Approx(-10.0));
  CHECK(label_consistency(sols[0], p, lambda).id1 < 1e-12);

  const auto flipped = solve_bridge(p, 3.0, ClassTag::II, -1);
  CHECK(flipped[0].s == Approx(-1.0));
  CHECK(flipped[0].t == Approx(-3.0));

  try {
    solve_bridge(p, 0.0, ClassTag::II, 1);
    FAIL("l = 0 accepted for class II");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::division_by_zero);
  }
  CHECK_THROWS_AS(solve_bridge(p, 3.0, ClassTag::II, 0), Error);
}

TEST_CASE("choose_epsilon follows sign(q)") {
  CHECK(choose_epsilon(make_type_e_problem(1.0, 3.0, {2.0, 3.0})) == 1);
  CHECK(choose_epsilon(make_type_e_problem(1.0, -6.0, {1.0, 2.0})) == -1);
}

TEST_CASE("type A image of a bridge solution") {
  const TypeEProblem p = make_type_e_problem(1.0, -6.0, {1.0, 2.0});
  const auto sols = solve_bridge(p, 1.0, ClassTag::I, 1);
  const TypeAProblem a = to_type_a(sols[0]);
  CHECK(a.abar == std::complex<double>(1.0, 0.0));
  CHECK(a.pbar == 0.0);
  CHECK(a.dbar == sols[0].dbar);
}

TEST_CASE("satellite shift bookkeeping") {
  const TypeEProblem p = make_type_e_problem(1.0, -6.0, {1.0, 2.0});
  const SatelliteShift s = satellite_shift(p, 1.0, ClassTag::I, 1, Generator::S, Direction::plus);
  CHECK(s.l == 1.0);
  CHECK(s.q == Approx(-6.0 + 2.0));
  const SatelliteShift t = satellite_shift(p, 1.0, ClassTag::I, 1, Generator::T, Direction::plus);
  CHECK(t.l == 2.0);
  CHECK(t.q == Approx(-6.0 * 3.0 / 2.0));
  const SatelliteShift u =
      satellite_shift(p, 1.0, ClassTag::I, -1, Generator::T, Direction::plus);
  CHECK(u.l == 0.0);
  CHECK(u.q == Approx(-3.0));
}
