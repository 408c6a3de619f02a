#include "satalg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "satalg/error.hpp"

namespace satalg {

namespace {

template <class T>
Jet<T> eval(const RealFunction& f, T x) {
  if constexpr (std::is_same_v<T, double>) {
    return f.jet(x);
  } else {
    return f.wide_jet(x);
  }
}

// +-A f' + cb B f + cc C f
class ShiftImage final : public RealFunction {
 public:
  ShiftImage(const GeneratorRealization& r, RealFunctionPtr f, int sign, Wide cb, Wide cc)
      : r_(r), f_(std::move(f)), sign_(sign), cb_(cb), cc_(cc) {}

  RealJet jet(double x) const override { return apply(x); }
  WideJet wide_jet(Wide x) const override { return apply(x); }

 private:
  template <class T>
  Jet<T> apply(T x) const {
    const Jet<T> f = eval(*f_, x);
    const Jet<T> df = f.differentiate();
    return eval(*r_.A, x) * df * T(sign_) + eval(*r_.B, x) * f * T(cb_) +
           eval(*r_.C, x) * f * T(cc_);
  }

  GeneratorRealization r_;
  RealFunctionPtr f_;
  int sign_;
  Wide cb_, cc_;
};

// (1/g) (sinh2 / alpha^2) [dscale^2 (g f)'' - 2 alpha q coth (g f) + lambda (g f)]
class CasimirImage final : public RealFunction {
 public:
  CasimirImage(const GeneratorRealization& r, RealFunctionPtr f, double s, double t)
      : r_(r), f_(std::move(f)) {
    const Wide a = r.alpha, ws = s, wt = t;
    two_alpha_q_ = Wide(2) * a * a * ws * wt;
    lambda_ = -a * a * (ws * ws + wt * wt);
    inv_alpha2_ = Wide(1) / (a * a);
    dscale2_ = Wide(r.dscale) * Wide(r.dscale);
  }

  RealJet jet(double x) const override { return apply(x); }
  WideJet wide_jet(Wide x) const override { return apply(x); }

 private:
  template <class T>
  Jet<T> apply(T x) const {
    Jet<T> g = eval(*f_, x);
    Jet<T> gauge;
    if (r_.gauge) {
      gauge = eval(*r_.gauge, x);
      g = gauge * g;
    }
    const Jet<T> g2 = g.differentiate().differentiate();
    Jet<T> inner = g2 * T(dscale2_) - eval(*r_.coth, x) * g * T(two_alpha_q_) + g * T(lambda_);
    Jet<T> out = eval(*r_.sinh2, x) * inner * T(inv_alpha2_);
    if (r_.gauge) out = out / gauge;
    return out;
  }

  GeneratorRealization r_;
  RealFunctionPtr f_;
  Wide two_alpha_q_, lambda_, inv_alpha2_, dscale2_;
};

GeneratorRealization memoized(const GeneratorRealization& r) {
  if (!r.A || !r.B || !r.C || !r.sinh2 || !r.coth) {
    throw Error(ErrorCode::invalid_parameter, "incomplete generator realization");
  }
  GeneratorRealization m = r;
  m.A = memoize(r.A);
  m.B = memoize(r.B);
  m.C = memoize(r.C);
  m.sinh2 = memoize(r.sinh2);
  m.coth = memoize(r.coth);
  if (r.gauge) m.gauge = memoize(r.gauge);
  return m;
}

WideComplex to_wide(std::complex<double> c) { return {Wide(c.real()), Wide(c.imag())}; }

struct PointValue {
  Wide re = 0, im = 0;
  Wide abs() const { return sm::sqrt(re * re + im * im); }
};

PointValue value_at(const Term& term, Wide x) {
  const Wide v = term.f->wide_jet(x).value();
  return {term.coefficient.re * v, term.coefficient.im * v};
}

enum class Op { S0, Sp, Sm, T0, Tp, Tm };

const char* op_name(Op op) {
  switch (op) {
    case Op::S0: return "S0";
    case Op::Sp: return "S+";
    case Op::Sm: return "S-";
    case Op::T0: return "T0";
    case Op::Tp: return "T+";
    case Op::Tm: return "T-";
  }
  return "?";
}

}  // namespace

Combination as_combination(const ExtendedState& state) { return {{state.phase, state.x_part}}; }

Combination scaled(Combination c, WideComplex factor) {
  for (Term& t : c) t.coefficient = t.coefficient * factor;
  return c;
}

Combination concat(Combination a, const Combination& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ExtendedState make_extended_state(const ModelPtr& model, const QuantumNumbers& qn) {
  if (!model) throw Error(ErrorCode::invalid_parameter, "null model");
  const StateLabels st = model->labels(qn);
  ExtendedState out;
  out.s = st.s;
  out.t = st.t;
  out.m_label = model->casimir_label(qn);
  out.x_part = memoize(model->eigenfunction(qn));
  out.model = model;
  out.qn = qn;
  out.normalizable = true;
  return out;
}

ExtendedState make_test_state(const ModelPtr& model, RealFunctionPtr f, double s, double t) {
  ExtendedState out;
  out.s = s;
  out.t = t;
  out.m_label = std::numeric_limits<double>::quiet_NaN();
  out.x_part = memoize(std::move(f));
  out.model = model;
  return out;
}

SatelliteAlgebra::SatelliteAlgebra(const GeneratorRealization& realization)
    : r_(memoized(realization)) {}

ExtendedState SatelliteAlgebra::shift(const ExtendedState& state, Generator which,
                                      Direction direction) const {
  const int sign = direction_sign(direction);
  const Wide shift = sign > 0 ? r_.shift_plus : r_.shift_minus;
  const Wide own = which == Generator::S ? Wide(state.s) : Wide(state.t);
  const Wide other = which == Generator::S ? Wide(state.t) : Wide(state.s);
  ExtendedState out = state;
  if (which == Generator::S) {
    out.s = state.s + sign;
  } else {
    out.t = state.t + sign;
  }
  out.phase = state.phase * to_wide(r_.phase);
  out.x_part = memoize(std::make_shared<ShiftImage>(r_, state.x_part, sign, own + shift, other));
  out.qn.reset();
  out.normalizable = false;
  return out;
}

ExtendedState SatelliteAlgebra::apply_shift(const ExtendedState& state, Generator which,
                                            Direction direction) const {
  ExtendedState out = shift(state, which, direction);
  if (state.model && state.qn) {
    const SatelliteTarget target = state.model->satellite_map(*state.qn, which, direction);
    out.model = target.model;
    if (target.model) out.qn = target.qn;
    out.normalizable = target.normalizable;
  }
  return out;
}

ExtendedState SatelliteAlgebra::diagonal(const ExtendedState& state, Generator which) const {
  ExtendedState out = state;
  out.phase = state.phase * Wide(which == Generator::S ? state.s : state.t);
  return out;
}

ExtendedState SatelliteAlgebra::casimir(const ExtendedState& state) const {
  ExtendedState out = state;
  out.x_part = memoize(std::make_shared<CasimirImage>(r_, state.x_part, state.s, state.t));
  return out;
}

Combination SatelliteAlgebra::casimir_algebraic(const ExtendedState& state,
                                                Generator which) const {
  const ExtendedState pm = shift(shift(state, which, Direction::minus), which, Direction::plus);
  const ExtendedState s0 = diagonal(state, which);
  const ExtendedState s0s0 = diagonal(s0, which);
  Combination out = scaled(as_combination(pm), {-1, 0});
  out = concat(out, as_combination(s0s0));
  return concat(out, scaled(as_combination(s0), {-1, 0}));
}

std::vector<RelationResidual> SatelliteAlgebra::commutator_residuals(const ExtendedState& state,
                                                                     const Grid& grid) const {
  auto apply = [this](const ExtendedState& st, Op op) {
    switch (op) {
      case Op::S0: return diagonal(st, Generator::S);
      case Op::Sp: return shift(st, Generator::S, Direction::plus);
      case Op::Sm: return shift(st, Generator::S, Direction::minus);
      case Op::T0: return diagonal(st, Generator::T);
      case Op::Tp: return shift(st, Generator::T, Direction::plus);
      case Op::Tm: return shift(st, Generator::T, Direction::minus);
    }
    return st;
  };
  // [X, Y] psi = X(Y psi) - Y(X psi)
  auto commutator = [&](Op x, Op y) {
    return concat(as_combination(apply(apply(state, y), x)),
                  scaled(as_combination(apply(apply(state, x), y)), {-1, 0}));
  };

  const double ref = sup_norm(as_combination(state), grid);
  std::vector<RelationResidual> out;
  for (Generator g : {Generator::S, Generator::T}) {
    const bool s = g == Generator::S;
    const Op zero = s ? Op::S0 : Op::T0, plus = s ? Op::Sp : Op::Tp, minus = s ? Op::Sm : Op::Tm;
    const std::string z = op_name(zero), p = op_name(plus), m = op_name(minus);
    // [X0, X+] = X+, [X0, X-] = -X-, [X+, X-] = -2 X0
    out.push_back({"[" + z + "," + p + "] = " + p,
                   cancellation_residual(concat(commutator(zero, plus),
                                                scaled(as_combination(apply(state, plus)), {-1, 0})),
                                         grid, ref)});
    out.push_back({"[" + z + "," + m + "] = -" + m,
                   cancellation_residual(concat(commutator(zero, minus),
                                                as_combination(apply(state, minus))),
                                         grid, ref)});
    out.push_back({"[" + p + "," + m + "] = -2" + z,
                   cancellation_residual(concat(commutator(plus, minus),
                                                scaled(as_combination(apply(state, zero)), {2, 0})),
                                         grid, ref)});
  }
  for (Op x : {Op::S0, Op::Sp, Op::Sm}) {
    for (Op y : {Op::T0, Op::Tp, Op::Tm}) {
      out.push_back({"[" + std::string(op_name(x)) + "," + op_name(y) + "] = 0",
                     cancellation_residual(commutator(x, y), grid, ref)});
    }
  }
  return out;
}

double cancellation_residual(const Combination& terms, const Grid& grid, double reference) {
  Wide largest = 0, worst = 0;
  std::vector<Wide> term_sup(terms.size(), Wide(0));
  for (int i = 0; i < grid.count; ++i) {
    const Wide x = grid.x(i);
    PointValue sum;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const PointValue v = value_at(terms[k], x);
      sum.re += v.re;
      sum.im += v.im;
      term_sup[k] = std::max(term_sup[k], v.abs());
    }
    worst = std::max(worst, sum.abs());
  }
  for (Wide s : term_sup) largest = std::max(largest, s);
  if (reference > 0.0) largest = reference;
  if (largest == 0) return 0.0;
  return to_double(worst / largest);
}

double sup_norm(const Combination& c, const Grid& grid) {
  Wide sup = 0;
  for (int i = 0; i < grid.count; ++i) {
    const Wide x = grid.x(i);
    PointValue sum;
    for (const Term& t : c) {
      const PointValue v = value_at(t, x);
      sum.re += v.re;
      sum.im += v.im;
    }
    sup = std::max(sup, sum.abs());
  }
  return to_double(sup);
}

double casimir_operational_residual(const SatelliteAlgebra& algebra, const ExtendedState& state,
                                    const Grid& grid) {
  const Combination alg = algebra.casimir_algebraic(state);
  const Combination diff = as_combination(algebra.casimir(state));
  const Combination gap = concat(alg, scaled(diff, {-1, 0}));
  Wide scale = sup_norm(diff, grid);
  for (const Term& t : alg) scale = std::max(scale, Wide(sup_norm({t}, grid)));
  if (scale == 0) return 0.0;
  return sup_norm(gap, grid) / to_double(scale);
}

CasimirCheck casimir_check(const SatelliteAlgebra& algebra, const ExtendedState& state,
                           const Grid& grid) {
  CasimirCheck out;
  const double m = state.m_label;
  out.expected = m * (m + 1.0);
  const ExtendedState c = algebra.casimir(state);
  const std::vector<double> w = quadrature_weights(grid);
  Wide fcf = 0, ff = 0, sup_f = 0, sup_gap = 0;
  const Wide expected = Wide(m) * (Wide(m) + Wide(1));
  for (int i = 0; i < grid.count; ++i) {
    const Wide x = grid.x(i);
    const Wide f = state.x_part->wide_jet(x).value();
    const Wide cf = c.x_part->wide_jet(x).value();
    fcf += Wide(w[i]) * f * cf;
    ff += Wide(w[i]) * f * f;
    sup_f = std::max(sup_f, sm::abs(f));
    sup_gap = std::max(sup_gap, sm::abs(cf - expected * f));
  }
  if (ff == 0) throw Error(ErrorCode::degenerate, "Casimir check on a zero state");
  out.eigenvalue = to_double(fcf / ff);
  out.eigen_residual =
      to_double(sup_gap / (sup_f * std::max(Wide(1), sm::abs(expected))));
  out.operational_residual = casimir_operational_residual(algebra, state, grid);
  return out;
}

ShiftMeasurement measure_shift(const SatelliteAlgebra& algebra, const ExtendedState& state,
                               Generator which, Direction direction, const RealFunction* target,
                               const Grid& grid) {
  const ExtendedState image = algebra.shift(state, which, direction);
  const std::complex<double> phase = image.phase.to_complex();
  std::vector<std::complex<double>> img(static_cast<std::size_t>(grid.count));
  double sup_img = 0.0, sup_src = 0.0;
  for (int i = 0; i < grid.count; ++i) {
    const Wide x = grid.x(i);
    img[i] = phase * to_double(image.x_part->wide_jet(x).value());
    sup_img = std::max(sup_img, std::abs(img[i]));
    sup_src = std::max(sup_src, std::abs(state.phase.to_complex() *
                                         to_double(state.x_part->wide_jet(x).value())));
  }
  ShiftMeasurement out;
  if (!target) {
    out.annihilated = true;
    out.magnitude = sup_src > 0.0 ? sup_img / sup_src : 0.0;
    return out;
  }
  std::vector<std::complex<double>> tgt(img.size());
  for (int i = 0; i < grid.count; ++i) tgt[i] = target->value(grid.x(i));
  const Proportionality fit = proportional_coefficient(img, tgt, quadrature_weights(grid));
  // The source carries its own phase; report the coefficient on the bare state.
  out.coefficient = fit.c / state.phase.to_complex();
  out.magnitude = std::abs(out.coefficient);
  out.residual = fit.residual;
  return out;
}

std::vector<RealFunctionPtr> random_smooth_functions(Domain domain, int count,
                                                     std::uint32_t seed) {
  std::mt19937 rng(seed);
  const double span = domain.hi - domain.lo;
  std::uniform_real_distribution<double> centre(domain.lo + 0.3 * span, domain.lo + 0.7 * span);
  std::uniform_real_distribution<double> width(0.03 * span, 0.08 * span);
  std::uniform_real_distribution<double> amplitude(-1.0, 1.0);
  std::uniform_int_distribution<int> bumps(2, 3);
  std::vector<RealFunctionPtr> out;
  for (int k = 0; k < count; ++k) {
    struct Bump {
      double c, w, a;
    };
    std::vector<Bump> bs;
    const int nb = bumps(rng);
    for (int j = 0; j < nb; ++j) {
      const double c = centre(rng), w = width(rng), a = amplitude(rng);
      bs.push_back({c, w, a});
    }
    out.push_back(make_function([bs](const auto& x) {
      using J = std::decay_t<decltype(x)>;
      using T = typename J::value_type;
      J sum(T(0));
      for (const Bump& b : bs) {
        const J u = (x - T(b.c)) / T(b.w);
        sum += exp(u * u * T(-0.5)) * T(b.a);
      }
      return sum;
    }));
  }
  return out;
}

}  // namespace satalg
