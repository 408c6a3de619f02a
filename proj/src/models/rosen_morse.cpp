// Hyperbolic Rosen-Morse potential V(x) = B tanh(alpha x) - C sech^2(alpha x).
// Type E with the imaginary half-period offset, q = alpha beta / 2, class II.

#include <cmath>
#include <memory>

#include "common.hpp"

namespace satalg {

namespace {

using detail::require;

class RosenMorseModel final : public Model {
 public:
  RosenMorseModel(const RosenMorseParams& p, bool require_states) : p_(p) {
    detail::require_finite(p.B, "B");
    detail::require_finite(p.C, "C");
    detail::require_finite(p.alpha, "alpha");
    detail::require_finite(p.mu, "mu");
    detail::require_finite(p.hbar, "hbar");
    require(p.C > 0.0, "C > 0 violated");
    require(p.alpha > 0.0, "alpha > 0 violated");
    require(p.mu > 0.0, "mu > 0 violated");
    require(p.hbar > 0.0, "hbar > 0 violated");
    // B = 0 (the symmetric Poschl-Teller well) is reachable as a satellite;
    // it has no sign of its own and is only built with an inherited epsilon.
    require(p.B != 0.0 || !require_states, "B != 0 violated (epsilon = B/|B| undefined)");
    require(std::abs(p.B) < 2.0 * p.C, "|B| < 2C violated");
    const double unit = 2.0 * p.mu / (p.hbar * p.hbar * p.alpha * p.alpha);
    beta_ = unit * p.B;
    gamma_ = unit * p.C;
    m_ = (-1.0 + std::sqrt(1.0 + 4.0 * gamma_)) / 2.0;
    n_max_ = largest_integer_below(m_ - std::sqrt(std::abs(beta_) / 2.0));
    if (require_states) {
      require(n_max_ >= 0, "bound states need m > sqrt(|beta|/2) (no admissible n)");
    }
    eps_c_ = p.B < 0.0 ? -1 : 1;
    epsilon_ = eps_c_;
  }

  ModelKind kind() const override { return ModelKind::rosen_morse; }
  std::string name() const override { return "rosen_morse"; }
  ParamList params() const override {
    return {{"B", p_.B}, {"C", p_.C}, {"alpha", p_.alpha}, {"mu", p_.mu}, {"hbar", p_.hbar}};
  }

  std::vector<QuantumNumbers> states() const override {
    std::vector<QuantumNumbers> out;
    for (int n = 0; n <= n_max_; ++n) out.push_back({n, 0});
    return out;
  }
  bool admissible(const QuantumNumbers& qn) const override {
    return qn.l == 0 && qn.n >= 0 && qn.n <= n_max_;
  }
  double energy(const QuantumNumbers& qn) const override {
    const double bn = m_ - qn.n;
    const double an = -beta_ / (2.0 * bn);
    return -p_.hbar * p_.hbar * p_.alpha * p_.alpha / (2.0 * p_.mu) * (an * an + bn * bn);
  }
  std::string state_name(const QuantumNumbers& qn) const override {
    return "n=" + std::to_string(qn.n);
  }

  TypeEProblem type_e_problem() const override {
    std::vector<double> ms;
    for (int n = std::max(n_max_, 0); n >= 0; --n) ms.push_back(m_ - n);
    if (ms.size() < 2) ms.push_back(m_ + 1.0);
    return make_type_e_problem(p_.alpha, 0.5 * p_.alpha * beta_, ms,
                               OffsetKind::imaginary_half_period);
  }
  double type_e_m(const QuantumNumbers&) const override { return m_; }
  double type_e_l(const QuantumNumbers& qn) const override { return m_ - qn.n; }
  double lambda_from_energy(const QuantumNumbers& qn) const override {
    return 2.0 * p_.mu * energy(qn) / (p_.hbar * p_.hbar);
  }
  WavefunctionPtr type_e_function(const QuantumNumbers& qn) const override {
    return eigenfunction(qn);
  }
  Grid type_e_grid(int count, std::optional<Domain> domain) const override {
    return check_grid(count, domain);
  }

  WavefunctionPtr eigenfunction(const QuantumNumbers& qn) const override {
    check(qn);
    const StateLabels st = canonical_labels(qn);
    return std::make_shared<ClosedFormWavefunction>(shape(qn.n, st), normalization(st),
                                                    "rosen_morse " + state_name(qn));
  }
  Grid default_grid(int count, std::optional<Domain> domain) const override {
    if (domain) return detail::domain_grid(*domain, count);
    double half = 12.0 / p_.alpha;
    if (n_max_ >= 0) {
      double kappa = INFINITY;
      for (int n = 0; n <= n_max_; ++n) {
        const double bn = m_ - n;
        kappa = std::min(kappa, p_.alpha * (bn - std::abs(beta_) / (2.0 * bn)));
      }
      half = std::max(half, detail::kDecayLengths / kappa);
    }
    return Grid::uniform(-half, half, count);
  }
  Grid check_grid(int count, std::optional<Domain> domain) const override {
    const double half = 12.0 / p_.alpha;
    return detail::domain_grid(domain.value_or(Domain{-half, half}), count);
  }

  int canonical_epsilon() const override { return eps_c_; }
  StateLabels labels(const QuantumNumbers& qn) const override {
    return detail::orient(canonical_labels(qn), epsilon_, eps_c_);
  }

  GeneratorRealization realization() const override {
    const double al = p_.alpha;
    GeneratorRealization g;
    g.A = make_function([al](const auto& x) { return cosh(x * al) / al; });
    g.B = make_function([al](const auto& x) { return sinh(x * al); });
    g.C = make_function([al](const auto& x) { return cosh(x * al); });
    g.phase = {0.0, 1.0};
    g.alpha = al;
    g.dscale = 1.0;
    // sinh^2 and coth of alpha (x + i pi / (2 alpha)) on the real line.
    g.sinh2 = make_function([al](const auto& x) {
      const auto c = cosh(x * al);
      return -(c * c);
    });
    g.coth = make_function([al](const auto& x) { return tanh(x * al); });
    return g;
  }

  std::optional<std::complex<double>> predicted_coefficient(
      const QuantumNumbers& qn, Generator which, Direction direction) const override {
    check(qn);
    const StateLabels st = labels(qn);
    const double s = st.s, t = st.t, m = m_, e = epsilon_;
    const double sg = direction_sign(direction);
    double num, den, sign;
    if (which == Generator::S) {
      num = (t - s) * (t + s) * (m - sg * s) * (m + sg * s + 1.0);
      den = (t - s - sg) * (t + s + sg);
      sign = e;
    } else {
      num = (t - s) * (t + s) * (t + sg) * (m - sg * t) * (m + sg * t + 1.0);
      den = t * (t - s + sg) * (t + s + sg);
      sign = -e;
    }
    return detail::radical_coefficient(num, den, {0.0, sign});
  }

  SatelliteTarget satellite_map(const QuantumNumbers& qn, Generator which,
                                Direction direction) const override {
    check(qn);
    const StateLabels st = labels(qn);
    const int sign = direction_sign(direction);
    SatelliteTarget out;
    out.qn = qn;
    RosenMorseParams np = p_;
    if (which == Generator::S) {
      np.B = p_.B * (st.s + sign) / st.s;
    } else {
      np.B = p_.B * (st.t + sign) / st.t;
      out.qn.n = qn.n - sign * epsilon_;
    }
    out.params = {{"B", np.B}, {"C", np.C}, {"alpha", np.alpha}, {"mu", np.mu}, {"hbar", np.hbar}};
    try {
      out.model = make_rosen_morse(np, false)->with_epsilon(epsilon_);
    } catch (const Error& e) {
      out.note = e.what();
      return out;
    }
    out.normalizable = out.model->admissible(out.qn);
    if (!out.normalizable) out.note = "mapped state " + state_name(out.qn) + " is not normalizable";
    return out;
  }

  double conserved_quantity(const QuantumNumbers&) const override { return p_.C; }
  std::string conserved_name() const override { return "C"; }

  std::vector<NamedValue> label_identities(const QuantumNumbers& qn) const override {
    // a_n and b_n straight from the potential parameters.
    const double bn = std::sqrt(gamma_ + 0.25) - qn.n - 0.5;
    const double an = -beta_ / (2.0 * bn);
    const StateLabels st = labels(qn);
    const double e = epsilon_;
    const double a2 = p_.alpha * p_.alpha;
    const double lambda = lambda_from_energy(qn);
    return {{"s + eps a_n", detail::relative_gap(st.s, -e * an)},
            {"t - eps b_n", detail::relative_gap(st.t, e * bn)},
            {"s t - q / alpha", detail::relative_gap(st.s * st.t, beta_ / 2.0)},
            {"s^2 + t^2 + lambda / alpha^2",
             detail::relative_gap(st.s * st.s + st.t * st.t, -lambda / a2)}};
  }

  ModelPtr with_epsilon(int epsilon) const override {
    detail::check_epsilon(epsilon);
    auto copy = std::make_shared<RosenMorseModel>(*this);
    copy->epsilon_ = epsilon;
    return copy;
  }

  std::vector<OracleProblem> oracle_problems(int count,
                                             std::optional<Domain> domain) const override {
    OracleProblem op;
    op.grid = default_grid(count, domain);
    const double B = p_.B, C = p_.C, al = p_.alpha;
    op.potential = [B, C, al](double x) {
      const double c = std::cosh(al * x);
      return B * std::tanh(al * x) - C / (c * c);
    };
    op.kinetic = p_.hbar * p_.hbar / (2.0 * p_.mu);
    op.states = states();
    return {op};
  }

 private:
  void check(const QuantumNumbers& qn) const {
    if (!admissible(qn)) {
      throw Error(ErrorCode::out_of_range,
                  "state " + state_name(qn) + " is outside 0 <= n <= " + std::to_string(n_max_));
    }
  }

  StateLabels canonical_labels(const QuantumNumbers& qn) const {
    const double l = m_ - qn.n;
    return {std::abs(beta_) / (2.0 * l), eps_c_ * l};
  }

  // e^{-eps s alpha x} cosh^{-eps t}(alpha x) 2F1(-n, 2 eps t + n + 1; eps (t - s) + 1; y),
  // y = (1 + tanh(alpha x)) / 2, in the canonical orientation.
  RealFunctionPtr shape(int n, StateLabels st) const {
    const double es = eps_c_ * st.s, et = eps_c_ * st.t, al = p_.alpha;
    const Hyp2F1Spec sp = detail::spec(-n, 2.0 * et + n + 1.0, et - es + 1.0);
    return make_function([es, et, al, sp](const auto& x) {
      using T = typename std::decay_t<decltype(x)>::value_type;
      const auto u = x * T(al);
      const auto pref = exp(-(u * T(es)) - log_cosh(u) * T(et));
      return pref * hyp2f1(sp, (tanh(u) + T(1)) * T(0.5));
    });
  }

  double normalization(StateLabels st) const {
    const double es = eps_c_ * st.s, et = eps_c_ * st.t, m = m_, t = st.t, s = st.s;
    const double radicand = eps_c_ * p_.alpha * (t - s) * (t + s) / t;
    const double log_ratio = log_gamma_real(m + et + 1.0) + log_gamma_real(m - es + 1.0) -
                             log_gamma_real(m - et + 1.0) - log_gamma_real(m + es + 1.0);
    const double log_n = -et * std::log(2.0) - log_gamma_real(et - es + 1.0) +
                         0.5 * (std::log(radicand) + log_ratio);
    return std::exp(log_n);
  }

  RosenMorseParams p_;
  double beta_ = 0.0, gamma_ = 0.0, m_ = 0.0;
  int n_max_ = -1;
  int eps_c_ = 1;
};

}  // namespace

ModelPtr make_rosen_morse(const RosenMorseParams& p, bool require_states) {
  return std::make_shared<RosenMorseModel>(p, require_states);
}

}  // namespace satalg
