#include "satalg/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace satalg {

double TypeEProblem::L(double m) const {
  if (m == 0.0) throw Error(ErrorCode::division_by_zero, "L(m) undefined at m = 0");
  return -alpha * alpha * m * m - q * q / (m * m);
}

template <class T>
Jet<T> TypeEProblem::coth_bar(const Jet<T>& x) const {
  const Jet<T> u = (x + T(p_offset)) * T(alpha);
  if (offset == OffsetKind::imaginary_half_period) return tanh(u);
  if (u.value() == T(0)) throw Error(ErrorCode::domain, "coth(alpha xbar) singular at xbar = 0");
  return coth(u);
}

template <class T>
Jet<T> TypeEProblem::csch2_bar(const Jet<T>& x) const {
  const Jet<T> u = (x + T(p_offset)) * T(alpha);
  if (offset == OffsetKind::imaginary_half_period) {
    const Jet<T> c = cosh(u);
    return -(Jet<T>(T(1)) / (c * c));
  }
  if (u.value() == T(0)) throw Error(ErrorCode::domain, "1/sinh^2 singular at xbar = 0");
  const Jet<T> s = sinh(u);
  return Jet<T>(T(1)) / (s * s);
}

template <class T>
Jet<T> TypeEProblem::sinh2_bar(const Jet<T>& x) const {
  const Jet<T> u = (x + T(p_offset)) * T(alpha);
  if (offset == OffsetKind::imaginary_half_period) {
    const Jet<T> c = cosh(u);
    return -(c * c);
  }
  const Jet<T> s = sinh(u);
  return s * s;
}

template <class T>
Jet<T> TypeEProblem::k(const Jet<T>& x, double m) const {
  if (m == 0.0) throw Error(ErrorCode::division_by_zero, "k(x, m) undefined at m = 0");
  return coth_bar(x) * T(m * alpha) + T(q / m);
}

template <class T>
Jet<T> TypeEProblem::r(const Jet<T>& x, double m) const {
  return csch2_bar(x) * T(-m * (m + 1.0) * alpha * alpha) - coth_bar(x) * T(2.0 * alpha * q);
}

template RealJet TypeEProblem::coth_bar(const RealJet&) const;
template WideJet TypeEProblem::coth_bar(const WideJet&) const;
template RealJet TypeEProblem::csch2_bar(const RealJet&) const;
template WideJet TypeEProblem::csch2_bar(const WideJet&) const;
template RealJet TypeEProblem::sinh2_bar(const RealJet&) const;
template WideJet TypeEProblem::sinh2_bar(const WideJet&) const;
template RealJet TypeEProblem::k(const RealJet&, double) const;
template WideJet TypeEProblem::k(const WideJet&, double) const;
template RealJet TypeEProblem::r(const RealJet&, double) const;
template WideJet TypeEProblem::r(const WideJet&, double) const;

namespace {

enum class Trend { increasing, decreasing, neither };

Trend l_trend(const TypeEProblem& p) {
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < p.m_values.size(); ++i) {
    const double a = p.L(p.m_values[i - 1]), b = p.L(p.m_values[i]);
    if (!(b > a)) inc = false;
    if (!(b < a)) dec = false;
  }
  if (inc) return Trend::increasing;
  if (dec) return Trend::decreasing;
  return Trend::neither;
}

}  // namespace

TypeEProblem make_type_e_problem(double alpha, double q, std::vector<double> m_values,
                                 OffsetKind offset, double p_offset, Geometry geometry) {
  if (geometry == Geometry::trigonometric) {
    throw Error(ErrorCode::out_of_scope,
                "trigonometric type E problems are out of scope (hyperbolic only)");
  }
  if (!(alpha > 0.0)) throw Error(ErrorCode::invalid_parameter, "alpha > 0 violated");
  if (q == 0.0 || !std::isfinite(q)) throw Error(ErrorCode::invalid_parameter, "q != 0 violated");
  if (m_values.empty()) throw Error(ErrorCode::invalid_parameter, "m_values is empty");
  for (std::size_t i = 0; i < m_values.size(); ++i) {
    if (!(m_values[i] > 0.0)) {
      throw Error(ErrorCode::invalid_parameter, "m values must be positive (L(0) undefined)");
    }
    if (i > 0 && !(m_values[i] > m_values[i - 1])) {
      throw Error(ErrorCode::invalid_parameter, "m values must be strictly increasing");
    }
  }
  TypeEProblem p{alpha, offset, p_offset, q, std::move(m_values)};
  if (p.m_values.size() >= 2 && l_trend(p) == Trend::neither) {
    throw Error(ErrorCode::classification, "L(m) is not monotonic over the m range");
  }
  return p;
}

TypeEFunctions factorization_functions(const TypeEProblem& problem, double m) {
  if (m == 0.0) throw Error(ErrorCode::division_by_zero, "type E functions need m != 0");
  TypeEFunctions out;
  out.L = problem.L(m);
  out.r = [problem, m](double x) { return problem.r(RealJet(x), m).value(); };
  out.k = [problem, m](double x) { return problem.k(RealJet(x), m).value(); };
  return out;
}

TypeAFunctions factorization_functions(const TypeAProblem& problem, double m) {
  using C = std::complex<double>;
  const C a = problem.abar, c = problem.cbar, d = problem.dbar;
  const double p = problem.pbar;
  TypeAFunctions out;
  out.L = a * a * (m + c) * (m + c);
  out.r = [=](double y) {
    const C u = a * (y + p);
    const C s = std::sin(u);
    if (std::abs(s) == 0.0) throw Error(ErrorCode::domain, "type A r singular");
    // The equation is chi'' + r chi + lambda chi = 0, so r carries the minus.
    return -(a * a * (m + c) * (m + c + 1.0) + d * d + 2.0 * a * d * (m + c + 0.5) * std::cos(u)) /
           (s * s);
  };
  out.k = [=](double y) {
    const C u = a * (y + p);
    const C s = std::sin(u);
    if (std::abs(s) == 0.0) throw Error(ErrorCode::domain, "type A k singular");
    return (m + c) * a * std::cos(u) / s + d / s;
  };
  return out;
}

ClassTag classify_problem(const TypeEProblem& problem) {
  if (problem.m_values.size() < 2) {
    throw Error(ErrorCode::classification, "classification needs at least two m values");
  }
  switch (l_trend(problem)) {
    case Trend::increasing: return ClassTag::I;
    case Trend::decreasing: return ClassTag::II;
    case Trend::neither: break;
  }
  throw Error(ErrorCode::classification, "L(m) is not monotonic over the m range");
}

double eigenvalue_lambda(const TypeEProblem& problem, double l, ClassTag cls) {
  return cls == ClassTag::I ? problem.L(l + 1.0) : problem.L(l);
}

namespace {

class LadderImage final : public RealFunction {
 public:
  LadderImage(TypeEProblem problem, double m, LadderSign sign, RealFunctionPtr f)
      : problem_(std::move(problem)), m_(m), sign_(sign), f_(std::move(f)) {
    if (m == 0.0) throw Error(ErrorCode::division_by_zero, "H(m) undefined at m = 0");
  }

  RealJet jet(double x) const override { return apply(f_->jet(x), RealJet::variable(x)); }
  WideJet wide_jet(Wide x) const override {
    return apply(f_->wide_jet(x), WideJet::variable(x));
  }

 private:
  template <class T>
  Jet<T> apply(const Jet<T>& f, const Jet<T>& x) const {
    const Jet<T> df = f.differentiate();
    const Jet<T> kf = problem_.k(x, m_) * f;
    return sign_ == LadderSign::plus ? df + kf : kf - df;
  }

  TypeEProblem problem_;
  double m_;
  LadderSign sign_;
  RealFunctionPtr f_;
};

// Pointwise sup of |(op f)(x) - shift f(x)| over the interior, relative.
double relative_residual(const RealFunction& image, const RealFunction& f, double shift,
                         const Grid& grid) {
  double worst = 0.0, fmax = 0.0;
  for (int i = 1; i + 1 < grid.count; ++i) {
    const double x = grid.x(i);
    const double fv = f.value(x);
    worst = std::max(worst, std::abs(image.value(x) - shift * fv));
    fmax = std::max(fmax, std::abs(fv));
  }
  if (fmax == 0.0) throw Error(ErrorCode::degenerate, "function vanishes on the grid");
  return worst / (fmax * std::max(1.0, std::abs(shift)));
}

class BorrowedFunction final : public RealFunction {
 public:
  explicit BorrowedFunction(const RealFunction& f) : f_(f) {}
  RealJet jet(double x) const override { return f_.jet(x); }
  WideJet wide_jet(Wide x) const override { return f_.wide_jet(x); }

 private:
  const RealFunction& f_;
};

}  // namespace

RealFunctionPtr apply_ladder(const TypeEProblem& problem, double m, LadderSign sign,
                             RealFunctionPtr f) {
  return std::make_shared<LadderImage>(problem, m, sign, std::move(f));
}

FactorizationResidual factorization_residual(const TypeEProblem& problem, double m,
                                             double lambda, const RealFunction& f,
                                             const Grid& grid) {
  auto base = std::make_shared<BorrowedFunction>(f);
  FactorizationResidual out;
  {
    auto lowered = apply_ladder(problem, m + 1.0, LadderSign::minus, base);
    auto back = apply_ladder(problem, m + 1.0, LadderSign::plus, lowered);
    out.res1 = relative_residual(*back, f, lambda - problem.L(m + 1.0), grid);
  }
  if (m != 0.0) {
    auto raised = apply_ladder(problem, m, LadderSign::plus, base);
    auto back = apply_ladder(problem, m, LadderSign::minus, raised);
    out.res2 = relative_residual(*back, f, lambda - problem.L(m), grid);
  }
  return out;
}

LadderStep ladder_step_check(const TypeEProblem& problem, double m, double lambda,
                             RealFunctionPtr f_m, RealFunctionPtr f_target, const Grid& grid,
                             LadderSign direction) {
  const bool raising = direction == LadderSign::minus;
  const double m_op = raising ? m + 1.0 : m;
  auto image = apply_ladder(problem, m_op, direction, f_m);

  LadderStep out;
  const double gap = lambda - problem.L(m_op);
  if (std::abs(gap) <= 1e-10 * std::max(1.0, std::abs(lambda))) {
    out.predicted = 0.0;
  } else {
    out.predicted = gap > 0.0 ? std::sqrt(gap) : std::nan("");
  }

  const auto img = sample(*image, grid);
  if (!f_target) {
    const auto base = sample(*f_m, grid);
    out.coefficient = sup_abs(img) / sup_abs(base);
    out.residual = out.coefficient;
    return out;
  }
  const auto tgt = sample(*f_target, grid);
  const auto w = quadrature_weights(grid);
  const auto fit = proportional_coefficient(img, tgt, w);
  out.coefficient = fit.c.real();
  out.residual = fit.residual;
  return out;
}

Proportionality proportional_coefficient(std::span<const std::complex<double>> f,
                                         std::span<const std::complex<double>> g,
                                         std::span<const double> weights) {
  if (f.size() != g.size() || f.size() != weights.size()) {
    throw Error(ErrorCode::invalid_parameter, "proportional_coefficient: size mismatch");
  }
  std::complex<double> gf = 0.0;
  double gg = 0.0, ff = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    gf += weights[i] * std::conj(g[i]) * f[i];
    gg += weights[i] * std::norm(g[i]);
    ff += weights[i] * std::norm(f[i]);
  }
  if (gg < 1e-24 * ff || gg == 0.0) {
    throw Error(ErrorCode::degenerate, "proportional_coefficient: g is numerically zero");
  }
  Proportionality out;
  out.c = gf / gg;
  if (ff == 0.0) return out;
  double rr = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) rr += weights[i] * std::norm(f[i] - out.c * g[i]);
  out.residual = std::sqrt(rr / ff);
  return out;
}

Proportionality proportional_coefficient(std::span<const double> f, std::span<const double> g,
                                         std::span<const double> weights) {
  std::vector<std::complex<double>> fc(f.begin(), f.end()), gc(g.begin(), g.end());
  return proportional_coefficient(fc, gc, weights);
}

}  // namespace satalg
