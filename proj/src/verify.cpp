#include "satalg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "satalg/algebra.hpp"
#include "satalg/error.hpp"
#include "satalg/factorization.hpp"
#include "satalg/numerics.hpp"
#include "satalg/transform.hpp"
#include "coefficients.hpp"

namespace satalg {

namespace detail {

CoefficientMeasurement measure(const ModelPtr& model, const QuantumNumbers& qn, Generator g,
                               Direction d, const Grid& grid) {
  CoefficientMeasurement out;
  const SatelliteAlgebra alg(*model);
  const ExtendedState state = make_extended_state(model, qn);
  out.target = model->satellite_map(qn, g, d);
  if (out.target.model && out.target.normalizable) {
    const WavefunctionPtr f = out.target.model->eigenfunction(out.target.qn);
    out.shift = measure_shift(alg, state, g, d, f.get(), grid);
    out.against_target = true;
  } else {
    out.shift = measure_shift(alg, state, g, d, nullptr, grid);
  }
  return out;
}

Prediction predict(const Model& model, const QuantumNumbers& qn, Generator g, Direction d) {
  Prediction p;
  try {
    p.value = model.predicted_coefficient(qn, g, d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::unavailable) throw;
    p.available = false;
  }
  return p;
}

}  // namespace detail

namespace {

using detail::CoefficientMeasurement;
using detail::measure;
using detail::predict;
using detail::Prediction;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Check make_check(std::string id, std::string description, std::string group, double measured,
                 double bound, std::string relation = "<=") {
  Check c;
  c.relation = relation;
  c.id = std::move(id);
  c.description = std::move(description);
  c.group = std::move(group);
  c.measured = measured;
  c.bound = bound;
  c.pass = std::isfinite(measured) && (relation == ">=" ? measured >= bound : measured <= bound);
  return c;
}

Check skipped_check(std::string id, std::string description, std::string group, double bound,
                    std::string note, double measured = kNaN) {
  Check c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.group = std::move(group);
  c.measured = measured;
  c.bound = bound;
  c.pass = true;
  c.skipped = true;
  c.note = std::move(note);
  return c;
}

std::string num(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(12);
  os << v;
  return os.str();
}

std::string tag(const Model& model, const QuantumNumbers& qn) {
  return "[" + model.state_name(qn) + "]";
}

std::string eps_tag(int eps) { return eps > 0 ? "[eps=+1]" : "[eps=-1]"; }

std::string op_tag(Generator g, Direction d) {
  return std::string(to_string(g)) + (d == Direction::plus ? "+" : "-");
}

Direction opposite(Direction d) { return d == Direction::plus ? Direction::minus : Direction::plus; }

// Applies +-d/dx + k with a five-point derivative of step h and compares with
// the analytic ladder image on interior points whose stencil stays inside the
// grid. Relative to max(sup |image|, sup |f|).
double ladder_fd_gap(const TypeEProblem& problem, double m_op, LadderSign sign,
                     const RealFunctionPtr& f, const Grid& grid) {
  const RealFunctionPtr image = apply_ladder(problem, m_op, sign, f);
  const TypeEFunctions fk = factorization_functions(problem, m_op);
  const double h = 1e-3 * (grid.hi - grid.lo) / 40.0;
  const double sgn = sign == LadderSign::plus ? 1.0 : -1.0;
  double worst = 0.0, scale = 0.0;
  for (int i = 2; i + 2 < grid.count; ++i) {
    const double x = grid.x(i);
    if (x - 2.0 * h <= grid.lo || x + 2.0 * h >= grid.hi) continue;
    const double d = (f->value(x - 2.0 * h) - 8.0 * f->value(x - h) + 8.0 * f->value(x + h) -
                      f->value(x + 2.0 * h)) /
                     (12.0 * h);
    const double fx = f->value(x);
    const double fd = sgn * d + fk.k(x) * fx;
    const double an = image->value(x);
    worst = std::max(worst, std::abs(fd - an));
    scale = std::max({scale, std::abs(an), std::abs(fx)});
  }
  return scale > 0.0 ? worst / scale : worst;
}

// Observed order from successive doublings, reported to two decimals: the
// ratio of a p-th order method tends to 2^p from either side.
double lowest_order(const std::vector<double>& errors) {
  double order = INFINITY;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    order = std::min(order, std::log2(errors[i] / errors[i + 1]));
  }
  return std::round(order * 100.0) / 100.0;
}

// Where some bound state exceeds 1e-3 of the largest sup: generic test
// functions live there, as eigenstates do. Outside it the generator
// coefficients (up to e^x for Kepler) would multiply undecayed tails.
Domain bound_state_support(const Model& model, const Grid& grid) {
  std::vector<double> env(static_cast<std::size_t>(grid.count), 0.0);
  for (const QuantumNumbers& qn : model.states()) {
    const WavefunctionPtr f = model.eigenfunction(qn);
    for (int i = 0; i < grid.count; ++i) {
      env[i] = std::max(env[i], std::abs(f->value(grid.x(i))));
    }
  }
  const double peak = sup_abs(env);
  int first = 0, last = grid.count - 1;
  while (first < last && env[first] < 1e-3 * peak) ++first;
  while (last > first && env[last] < 1e-3 * peak) --last;
  return {grid.x(first), grid.x(last)};
}

}  // namespace

double relative_difference(double a, double b, double floor) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "factorization") return Suite::factorization;
  if (name == "algebra") return Suite::algebra;
  if (name == "coefficients") return Suite::coefficients;
  if (name == "spectrum") return Suite::spectrum;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::factorization: return "factorization";
    case Suite::algebra: return "algebra";
    case Suite::coefficients: return "coefficients";
    case Suite::spectrum: return "spectrum";
    case Suite::all: return "all";
  }
  return "?";
}

std::vector<Check> spectrum_checks(const ModelPtr& model, const VerifyOptions& options) {
  std::vector<Check> out;
  const Tolerances& tol = options.tol;
  for (const OracleProblem& op : model->oracle_problems(options.grid, options.domain)) {
    const std::vector<double> eig = fd_eigensolve_extrapolated(
        op.potential, op.grid, static_cast<int>(op.states.size()), op.kinetic);
    for (std::size_t i = 0; i < op.states.size(); ++i) {
      const QuantumNumbers& qn = op.states[i];
      const double closed = model->energy(qn);
      const double fd = op.energy_scale * eig[i] + op.energy_shift;
      out.push_back(make_check("spectrum.oracle" + tag(*model, qn),
                               "closed-form E = " + num(closed) + " vs FD eigensolver " + num(fd),
                               "oracle", relative_difference(closed, fd, 0.0), tol.oracle));
    }
  }
  const Grid norm_grid = model->default_grid(kNormalizationCount, options.domain);
  const Grid fine = model->check_grid(10 * (options.grid - 1) + 1, options.domain);
  for (const QuantumNumbers& qn : model->states()) {
    const WavefunctionPtr f = model->eigenfunction(qn);
    out.push_back(make_check("spectrum.norm" + tag(*model, qn),
                             "|integral of weight |psi|^2 - 1|", "norm",
                             std::abs(quadrature_norm(*f, norm_grid) - 1.0), tol.norm));
    for (int order : {1, 2}) {
      out.push_back(make_check("spectrum.derivative" + tag(*model, qn) + "[d" +
                                   std::to_string(order) + "]",
                               "analytic vs five-point FD derivative of order " +
                                   std::to_string(order),
                               "derivative", fd_derivative_check(*f, fine, order), 1e-7));
    }
  }
  return out;
}

std::vector<Check> factorization_checks(const ModelPtr& model, const VerifyOptions& options) {
  std::vector<Check> out;
  const Tolerances& tol = options.tol;
  const TypeEProblem problem = model->type_e_problem();
  const ClassTag cls = model->class_tag();
  const Grid grid = model->type_e_grid(options.grid, options.domain);
  const std::string cls_name = cls == ClassTag::I ? "class I" : "class II";

  for (const QuantumNumbers& qn : model->states()) {
    const std::string st = tag(*model, qn);
    const double m = model->type_e_m(qn);
    const double l = model->type_e_l(qn);
    const double lambda = model->lambda_from_energy(qn);
    const double lambda_rule = eigenvalue_lambda(problem, l, cls);
    out.push_back(make_check("factorization.lambda" + st,
                             "lambda from E_n (" + num(lambda) + ") vs " + cls_name +
                                 " rule (" + num(lambda_rule) + ")",
                             "lambda", relative_difference(lambda, lambda_rule), tol.exact));

    const RealFunctionPtr f = model->type_e_function(qn);
    const FactorizationResidual res = factorization_residual(problem, m, lambda, *f, grid);
    out.push_back(make_check("factorization.res1" + st,
                             "H+(m+1) H-(m+1) f - [lambda - L(m+1)] f", "residual", res.res1,
                             tol.identity));
    if (res.res2) {
      out.push_back(make_check("factorization.res2" + st, "H-(m) H+(m) f - [lambda - L(m)] f",
                               "residual", *res.res2, tol.identity));
    } else {
      out.push_back(skipped_check("factorization.res2" + st, "H-(m) H+(m) f - [lambda - L(m)] f",
                                  "residual", tol.identity, "m = 0: k(x, 0) is undefined"));
    }

    out.push_back(make_check("factorization.ladder_fd" + st + "[H-(m+1)]",
                             "analytic H-(m+1) f vs FD application", "ladder-fd",
                             ladder_fd_gap(problem, m + 1.0, LadderSign::minus, f, grid),
                             tol.fd));
    if (m != 0.0) {
      out.push_back(make_check("factorization.ladder_fd" + st + "[H+(m)]",
                               "analytic H+(m) f vs FD application", "ladder-fd",
                               ladder_fd_gap(problem, m, LadderSign::plus, f, grid), tol.fd));
    }

    // Chain top m = l.
    if (std::abs(m - l) <= 1e-12 * std::max(1.0, std::abs(l))) {
      const LadderSign dir = cls == ClassTag::I ? LadderSign::minus : LadderSign::plus;
      const LadderStep top = ladder_step_check(problem, m, lambda, f, nullptr, grid, dir);
      const std::string op = cls == ClassTag::I ? "H-(l+1)" : "H+(l)";
      out.push_back(make_check("factorization.chain_top" + st,
                               op + " annihilates the chain top (sup|image| / sup|f|, predicted " +
                                   num(top.predicted) + ")",
                               "annihilation", top.coefficient, tol.identity));
    }

    // l-chains at fixed lambda exist inside one model only for Kepler.
    if (model->kind() == ModelKind::kepler) {
      for (int step : {+1, -1}) {
        const QuantumNumbers next{qn.n, qn.l + step};
        if (!model->admissible(next)) continue;
        const LadderSign dir = step > 0 ? LadderSign::minus : LadderSign::plus;
        const LadderStep s =
            ladder_step_check(problem, m, lambda, f, model->type_e_function(next), grid, dir);
        const std::string name = step > 0 ? "raise" : "lower";
        const std::string op = step > 0 ? "H-(m+1)" : "H+(m)";
        out.push_back(make_check("factorization.ladder" + st + "[" + name + "]",
                                 op + " coefficient " + num(s.coefficient) + " vs sqrt(lambda - L) = " +
                                     num(s.predicted),
                                 "ladder", relative_difference(std::abs(s.coefficient), s.predicted),
                                 tol.identity));
        out.push_back(make_check("factorization.ladder_fit" + st + "[" + name + "]",
                                 op + " image proportional to " + model->state_name(next),
                                 "ladder", s.residual, tol.identity));
      }
    }

    // Bridge to type A, both signs and both branches.
    for (int eps : {+1, -1}) {
      const auto sols = solve_bridge(problem, l, cls, eps);
      const double scale = std::max(1.0, std::abs(lambda) / (problem.alpha * problem.alpha));
      for (const BridgeSolution& sol : sols) {
        const std::string b = sol.branch == Branch::sol1 ? "[sol1]" : "[sol2]";
        const LabelIdentities ids = label_consistency(sol, problem, lambda);
        out.push_back(make_check("factorization.bridge" + st + eps_tag(eps) + b + "[st]",
                                 "s t - q/alpha", "bridge", ids.id2 / scale, tol.exact));
        out.push_back(make_check("factorization.bridge" + st + eps_tag(eps) + b + "[s2+t2]",
                                 "s^2 + t^2 + lambda/alpha^2", "bridge", ids.id1 / scale,
                                 tol.exact));
        out.push_back(make_check("factorization.bridge" + st + eps_tag(eps) + b + "[lambda]",
                                 "-q^2/dbar^2 + a^2 dbar^2 - lambda", "bridge",
                                 lambda_link_residual(sol, problem, lambda), tol.exact));
      }
      const double swap =
          std::max(std::abs(sols[0].dbar - (sols[1].mbar_plus_cbar + 0.5)),
                   std::abs(sols[1].dbar - (sols[0].mbar_plus_cbar + 0.5))) /
          std::max(1.0, std::abs(sols[0].dbar));
      out.push_back(make_check("factorization.bridge" + st + eps_tag(eps) + "[swap]",
                               "sol1 dbar = sol2 mbar+cbar+1/2 and vice versa", "bridge", swap,
                               tol.exact));
      const StateLabels ml = model->with_epsilon(eps)->labels(qn);
      const double gap = std::max(relative_difference(sols[0].s, ml.s),
                                  relative_difference(sols[0].t, ml.t));
      out.push_back(make_check("factorization.bridge" + st + eps_tag(eps) + "[labels]",
                               "bridge (s, t) = model labels (" + num(ml.s) + ", " + num(ml.t) + ")",
                               "bridge", gap, tol.exact));
    }
  }
  return out;
}

std::vector<Check> algebra_checks(const ModelPtr& model, const VerifyOptions& options) {
  std::vector<Check> out;
  const Tolerances& tol = options.tol;
  const Grid grid = model->check_grid(options.grid, options.domain);

  auto relations = [&](const std::string& prefix, const SatelliteAlgebra& alg,
                       const ExtendedState& state) {
    for (const RelationResidual& r : alg.commutator_residuals(state, grid)) {
      out.push_back(make_check("algebra.commutator" + prefix + "{" + r.name + "}",
                               "sup|LHS - RHS| / sup|psi|", "commutator", r.residual,
                               tol.identity));
    }
  };

  for (int eps : {model->epsilon(), -model->epsilon()}) {
    const ModelPtr me = eps == model->epsilon() ? model : model->with_epsilon(eps);
    const SatelliteAlgebra alg(*me);
    const bool primary = eps == model->epsilon();
    for (const QuantumNumbers& qn : me->states()) {
      const std::string st = tag(*me, qn) + (primary ? "" : eps_tag(eps));
      const ExtendedState state = make_extended_state(me, qn);
      if (primary) relations(st, alg, state);
      const CasimirCheck cc = casimir_check(alg, state, grid);
      out.push_back(make_check("algebra.casimir" + st + "[eigenvalue]",
                               "projected Casimir eigenvalue " + num(cc.eigenvalue) +
                                   " vs m(m+1) = " + num(cc.expected),
                               "casimir", relative_difference(cc.eigenvalue, cc.expected),
                               tol.identity));
      out.push_back(make_check("algebra.casimir" + st + "[pointwise]",
                               "sup|C psi - m(m+1) psi| / (max(1, m(m+1)) sup|psi|)", "casimir",
                               cc.eigen_residual, tol.identity));
      out.push_back(make_check("algebra.casimir" + st + "[operational]",
                               "differential Casimir vs -S+S- + S0(S0-1)", "casimir",
                               cc.operational_residual, tol.identity));
      if (!primary) continue;
      const double ref = sup_norm(as_combination(state), grid) *
                         std::max(1.0, std::abs(cc.expected));
      const double st_gap = cancellation_residual(
          concat(alg.casimir_algebraic(state, Generator::S),
                 scaled(alg.casimir_algebraic(state, Generator::T), {-1, 0})),
          grid, ref);
      out.push_back(make_check("algebra.casimir" + st + "[S-vs-T]",
                               "-S+S- + S0(S0-1) vs -T+T- + T0(T0-1)", "casimir", st_gap,
                               tol.exact));
    }
  }

  // Generic smooth functions carrying the labels of the ground state.
  const QuantumNumbers ground = model->states().front();
  const StateLabels gl = model->labels(ground);
  const SatelliteAlgebra alg(*model);
  const auto funcs = random_smooth_functions(bound_state_support(*model, grid),
                                             options.random_functions, options.seed);
  for (std::size_t k = 0; k < funcs.size(); ++k) {
    const ExtendedState state = make_test_state(model, funcs[k], gl.s, gl.t);
    const std::string st = "[random " + std::to_string(k + 1) + "]";
    relations(st, alg, state);
    const double ref = sup_norm(as_combination(state), grid);
    const ExtendedState c = alg.casimir(state);
    const double gap = cancellation_residual(
        concat(as_combination(c), scaled(alg.casimir_algebraic(state), {-1, 0})), grid,
        ref * std::max(1.0, gl.s * gl.s + gl.t * gl.t));
    out.push_back(make_check("algebra.casimir" + st + "[operational]",
                             "differential Casimir vs -S+S- + S0(S0-1)", "casimir", gap,
                             tol.identity));
  }
  return out;
}

std::vector<Check> coefficient_checks(const ModelPtr& model, const VerifyOptions& options) {
  std::vector<Check> out;
  const Tolerances& tol = options.tol;
  const Grid grid = model->check_grid(options.grid, options.domain);
  const int eps0 = model->epsilon();
  const ModelPtr flipped = model->with_epsilon(-eps0);

  for (const QuantumNumbers& qn : model->states()) {
    for (const ModelPtr& me : {model, flipped}) {
      const bool primary = me == model;
      const std::string st = tag(*me, qn) + (primary ? "" : eps_tag(me->epsilon()));
      const double c0 = me->conserved_quantity(qn);
      const StateLabels l0 = me->labels(qn);

      for (const NamedValue& id : me->label_identities(qn)) {
        out.push_back(make_check("coefficients.labels" + st + "{" + id.name + "}",
                                 "label identity " + id.name, "labels", id.value, tol.exact));
      }

      for (Generator g : {Generator::S, Generator::T}) {
        for (Direction d : {Direction::plus, Direction::minus}) {
          const std::string op = "[" + op_tag(g, d) + "]";
          const CoefficientMeasurement cm = measure(me, qn, g, d, grid);
          const Prediction pred = predict(*me, qn, g, d);
          const double measured = cm.shift.magnitude;

          // Closed-form coefficient.
          const std::string cid = "coefficients.coefficient" + st + op;
          if (!pred.available) {
            out.push_back(skipped_check(cid, "|" + op_tag(g, d) + " coefficient| vs closed form",
                                        "coefficient", tol.identity,
                                        "skipped: closed form unavailable", measured));
          } else if (pred.value && std::abs(*pred.value) == 0.0) {
            out.push_back(make_check(cid,
                                     op_tag(g, d) + " annihilates (closed form 0); measured " +
                                         "sup|image| / sup|psi|",
                                     "coefficient", measured, tol.identity));
          } else if (!cm.against_target) {
            out.push_back(skipped_check(cid, "|" + op_tag(g, d) + " coefficient| vs closed form",
                                        "coefficient", tol.identity,
                                        "target not normalizable: " + cm.target.note));
          } else if (!pred.value) {
            out.push_back(make_check(cid, "closed form undefined for a normalizable target",
                                     "coefficient", kNaN, tol.identity));
          } else {
            const double p = std::abs(*pred.value);
            out.push_back(make_check(cid,
                                     "|" + op_tag(g, d) + " coefficient| " + num(measured) +
                                         " vs closed form " + num(p),
                                     "coefficient", relative_difference(measured, p, 0.0),
                                     tol.identity));
          }
          if (cm.against_target) {
            out.push_back(make_check("coefficients.proportionality" + st + op,
                                     op_tag(g, d) + " psi proportional to the satellite " +
                                         "eigenfunction " + me->state_name(cm.target.qn),
                                     "proportionality", cm.shift.residual, tol.fd));
          }

          // Satellite map.
          const std::string sid = "coefficients.satellite" + st + op;
          if (!cm.target.model) {
            out.push_back(skipped_check(sid + "[labels]", "mapped labels", "satellite", tol.exact,
                                        "mapped parameters outside the family: " +
                                            cm.target.note));
          } else {
            StateLabels want = l0;
            (g == Generator::S ? want.s : want.t) += direction_sign(d);
            const StateLabels got = cm.target.model->labels(cm.target.qn);
            out.push_back(make_check(
                sid + "[labels]",
                "rebuilt labels (" + num(got.s) + ", " + num(got.t) + ") vs (" + num(want.s) +
                    ", " + num(want.t) + ")",
                "satellite",
                std::max(relative_difference(got.s, want.s), relative_difference(got.t, want.t)),
                tol.exact));
            const double c1 = cm.target.model->conserved_quantity(cm.target.qn);
            out.push_back(make_check(sid + "[conserved]",
                                     me->conserved_name() + " " + num(c1) + " vs " + num(c0),
                                     "satellite", relative_difference(c1, c0), tol.exact));
          }

          // epsilon flip: G(d) under -eps acts as -G(-d) under eps.
          if (!primary) {
            const CoefficientMeasurement ref = measure(model, qn, g, opposite(d), grid);
            out.push_back(make_check("coefficients.epsilon" + tag(*me, qn) + op,
                                     "|" + op_tag(g, d) + "| at eps=" +
                                         std::to_string(me->epsilon()) + " vs |" +
                                         op_tag(g, opposite(d)) + "| at eps=" +
                                         std::to_string(eps0),
                                     "epsilon",
                                     relative_difference(measured, ref.shift.magnitude),
                                     tol.exact));
            const Prediction pref = predict(*model, qn, g, opposite(d));
            if (pred.available && pred.value && pref.value) {
              out.push_back(make_check(
                  "coefficients.epsilon_closed_form" + tag(*me, qn) + op,
                  "closed-form magnitudes under both signs", "epsilon",
                  relative_difference(std::abs(*pred.value), std::abs(*pref.value)), tol.exact));
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<Check> numerics_checks() {
  std::vector<Check> out;
  {
    const Grid g = Grid::uniform(0.1, 10.0, 9901);
    auto f = [](double x) { return std::exp(-3.125 * x) * std::sinh(x); };
    auto d1 = [](double x) {
      return std::exp(-3.125 * x) * (std::cosh(x) - 3.125 * std::sinh(x));
    };
    auto d2 = [](double x) {
      return std::exp(-3.125 * x) *
             ((1.0 + 3.125 * 3.125) * std::sinh(x) - 2.0 * 3.125 * std::cosh(x));
    };
    out.push_back(make_check("numerics.derivative[d1]",
                             "e^{-3.125x} sinh x on [0.1, 10], h = 1e-3", "numerics",
                             fd_derivative_check(f, d1, g, 1), 1e-7));
    out.push_back(make_check("numerics.derivative[d2]",
                             "e^{-3.125x} sinh x on [0.1, 10], h = 1e-3", "numerics",
                             fd_derivative_check(f, d2, g, 2), 1e-7));
  }
  {
    // Simpson on |e^{-x^2/4}|^2 over [0, 2] against the error function.
    const double exact = std::sqrt(std::acos(-1.0) / 2.0) * std::erf(std::sqrt(2.0));
    const auto f = make_function([](const auto& x) { return exp(x * x * -0.25); });
    std::vector<double> errs;
    for (int n : {21, 41, 81, 161, 321}) {
      errs.push_back(std::abs(quadrature_norm(*f, Grid::uniform(0.0, 2.0, n)) - exact));
    }
    out.push_back(make_check("numerics.simpson_order",
                             "observed Simpson order over 4 doublings (bound: order >= 4)",
                             "numerics", lowest_order(errs), 4.0, ">="));
  }
  {
    const Potential v = [](double x) { return 0.5 * x * x; };
    std::vector<double> errs;
    for (int n : {401, 801, 1601}) {
      const auto e = fd_eigensolve(v, Grid::uniform(-8.0, 8.0, n), 3);
      double worst = 0.0;
      for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(e[k] - (k + 0.5)));
      errs.push_back(worst);
    }
    out.push_back(make_check("numerics.eigensolver_order",
                             "observed FD eigensolver order on x^2/2 (bound: order >= 2)",
                             "numerics", lowest_order(errs), 2.0, ">="));
    const auto ex = fd_eigensolve_extrapolated(v, Grid::uniform(-8.0, 8.0, 4001), 3);
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(ex[k] - (k + 0.5)));
    out.push_back(make_check("numerics.eigensolver_harmonic",
                             "lowest three of x^2/2 vs 0.5, 1.5, 2.5", "numerics", worst, 1e-5));
  }
  return out;
}

RunReport run_suite(const ModelPtr& model, Suite suite, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.suite = to_string(suite);
  report.model = model->name();
  auto add = [&](std::vector<Check> checks) {
    for (Check& c : checks) report.checks.push_back(std::move(c));
  };
  const bool all = suite == Suite::all;
  if (all || suite == Suite::spectrum) add(spectrum_checks(model, options));
  if (all || suite == Suite::factorization) add(factorization_checks(model, options));
  if (all || suite == Suite::algebra) add(algebra_checks(model, options));
  if (all || suite == Suite::coefficients) add(coefficient_checks(model, options));

  std::set<std::string> seen;
  for (const Check& c : report.checks) {
    if (!seen.insert(c.id).second) {
      throw Error(ErrorCode::degenerate, "duplicate check id " + c.id);
    }
    report.overall = report.overall && c.pass;
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace satalg
