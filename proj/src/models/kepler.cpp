// Coulomb problem in a space of constant negative curvature, radial part in
// the dimensionless form hbar = mu = 1, Z e^2 = nu / R. With
// psi = cosech(x) phi the phi equation is type E with alpha = 1, q = -nu,
// m -> l and lambda -> lambda - 1 - 2 nu (class I).

#include <cmath>
#include <memory>

#include "common.hpp"

namespace satalg {

namespace {

using detail::require;

class KeplerModel final : public Model {
 public:
  KeplerModel(const KeplerParams& p, bool require_states) : p_(p) {
    detail::require_finite(p.nu, "nu");
    detail::require_finite(p.R, "R");
    require(p.nu > 0.0, "nu > 0 violated");
    require(p.R > 0.0, "R > 0 violated");
    n_max_ = largest_integer_below(std::sqrt(p.nu));
    if (require_states) require(n_max_ >= 1, "bound states need sqrt(nu) > 1 (no admissible n)");
    epsilon_ = -1;
  }

  ModelKind kind() const override { return ModelKind::kepler; }
  std::string name() const override { return "kepler"; }
  ParamList params() const override { return {{"nu", p_.nu}, {"R", p_.R}}; }

  std::vector<QuantumNumbers> states() const override {
    std::vector<QuantumNumbers> out;
    for (int n = 1; n <= n_max_; ++n) {
      for (int l = 0; l < n; ++l) out.push_back({n, l});
    }
    return out;
  }
  bool admissible(const QuantumNumbers& qn) const override {
    return qn.n >= 1 && qn.n <= n_max_ && qn.l >= 0 && qn.l < qn.n;
  }
  double energy(const QuantumNumbers& qn) const override {
    const double n = qn.n, nu = p_.nu;
    return (nu - (n * n - 1.0) / 2.0 - nu * nu / (2.0 * n * n)) / (p_.R * p_.R);
  }
  std::string state_name(const QuantumNumbers& qn) const override {
    return "n=" + std::to_string(qn.n) + ",l=" + std::to_string(qn.l);
  }

  TypeEProblem type_e_problem() const override {
    std::vector<double> ms;
    for (int n = 1; n <= n_max_; ++n) ms.push_back(n);
    const double root = std::sqrt(p_.nu);
    if (ms.size() == 1) ms.push_back(0.5 * (1.0 + root));
    if (ms.empty()) ms = {0.5 * root, 0.75 * root};
    return make_type_e_problem(1.0, -p_.nu, ms);
  }
  double type_e_m(const QuantumNumbers& qn) const override { return qn.l; }
  double type_e_l(const QuantumNumbers& qn) const override { return qn.n - 1.0; }
  double lambda_from_energy(const QuantumNumbers& qn) const override {
    return 2.0 * p_.R * p_.R * energy(qn) - 1.0 - 2.0 * p_.nu;
  }
  WavefunctionPtr type_e_function(const QuantumNumbers& qn) const override {
    check(qn);
    return std::make_shared<ClosedFormWavefunction>(shape(qn, 1), normalization(qn),
                                                    "kepler phi " + state_name(qn));
  }
  Grid type_e_grid(int count, std::optional<Domain> domain) const override {
    return detail::domain_grid(domain.value_or(check_domain()), count);
  }

  WavefunctionPtr eigenfunction(const QuantumNumbers& qn) const override {
    check(qn);
    return std::make_shared<ClosedFormWavefunction>(shape(qn, 0), normalization(qn),
                                                    "kepler " + state_name(qn));
  }
  Grid default_grid(int count, std::optional<Domain> domain) const override {
    if (domain) return detail::domain_grid(*domain, count, measure());
    double hi = 40.0;
    if (n_max_ >= 1) {
      double kappa = INFINITY;
      for (int n = 1; n <= n_max_; ++n) kappa = std::min(kappa, p_.nu / n - n);
      hi = std::max(hi, detail::kDecayLengths / kappa);
    }
    return Grid::uniform(detail::kHalfLineStart, hi, count, measure());
  }
  Grid check_grid(int count, std::optional<Domain> domain) const override {
    return detail::domain_grid(domain.value_or(check_domain()), count, measure());
  }

  int canonical_epsilon() const override { return -1; }
  StateLabels labels(const QuantumNumbers& qn) const override {
    return detail::orient(default_labels(qn), epsilon_, -1);
  }

  GeneratorRealization realization() const override {
    GeneratorRealization g;
    g.A = make_function([](const auto& x) { return sinh(x); });
    g.B = make_function([](const auto& x) { return cosh(x); });
    g.C = make_function([](const auto& x) { return sinh(x); });
    // Conjugation by sinh turns the phi generators into the psi ones and
    // adds +-1 to the cosh term.
    g.shift_plus = 1.0;
    g.shift_minus = -1.0;
    g.alpha = 1.0;
    g.dscale = 1.0;
    g.sinh2 = make_function([](const auto& x) {
      const auto s = sinh(x);
      return s * s;
    });
    g.coth = make_function([](const auto& x) { return coth(x); });
    g.gauge = make_function([](const auto& x) { return sinh(x); });
    return g;
  }

  std::optional<std::complex<double>> predicted_coefficient(
      const QuantumNumbers& qn, Generator which, Direction direction) const override {
    check(qn);
    if (epsilon_ == -1) return default_coefficient(qn, which, direction);
    // Flipped labels: G+- acts as -G-+ of the default orientation.
    const Direction other = direction == Direction::plus ? Direction::minus : Direction::plus;
    const auto c = default_coefficient(qn, which, other);
    if (!c) return c;
    return -*c;
  }

  SatelliteTarget satellite_map(const QuantumNumbers& qn, Generator which,
                                Direction direction) const override {
    check(qn);
    const StateLabels st = labels(qn);
    const int sign = direction_sign(direction);
    SatelliteTarget out;
    out.qn = qn;
    double ratio;
    if (which == Generator::S) {
      ratio = (st.s + sign) / st.s;
    } else {
      ratio = (st.t + sign) / st.t;
      out.qn.n = qn.n + sign * epsilon_;
    }
    KeplerParams np{p_.nu * ratio, p_.R * ratio};
    out.params = {{"nu", np.nu}, {"R", np.R}};
    try {
      out.model = make_kepler(np, false)->with_epsilon(epsilon_);
    } catch (const Error& e) {
      out.note = e.what();
      return out;
    }
    out.normalizable = out.model->admissible(out.qn);
    if (!out.normalizable) out.note = "mapped state " + state_name(out.qn) + " is not normalizable";
    return out;
  }

  double conserved_quantity(const QuantumNumbers& qn) const override { return qn.l; }
  std::string conserved_name() const override { return "l"; }

  std::vector<NamedValue> label_identities(const QuantumNumbers& qn) const override {
    const StateLabels st = labels(qn);
    const double lambda_prime = lambda_from_energy(qn);
    return {{"s t + nu", detail::relative_gap(st.s * st.t, -p_.nu)},
            {"s^2 + t^2 + lambda'", detail::relative_gap(st.s * st.s + st.t * st.t, -lambda_prime)}};
  }

  ModelPtr with_epsilon(int epsilon) const override {
    detail::check_epsilon(epsilon);
    auto copy = std::make_shared<KeplerModel>(*this);
    copy->epsilon_ = epsilon;
    return copy;
  }

  std::vector<OracleProblem> oracle_problems(int count,
                                             std::optional<Domain> domain) const override {
    const Grid g = default_grid(count, domain);
    const double lo = domain ? domain->lo : 0.0;
    std::vector<OracleProblem> out;
    for (int l = 0; l < n_max_; ++l) {
      OracleProblem op;
      op.grid = Grid::uniform(lo, g.hi, count);
      const double nu = p_.nu, cent = l * (l + 1.0);
      op.potential = [nu, cent](double x) {
        const double s = std::sinh(x);
        return 0.5 * (cent / (s * s) - 2.0 * nu / std::tanh(x));
      };
      op.kinetic = 0.5;
      for (int n = l + 1; n <= n_max_; ++n) op.states.push_back({n, l});
      op.energy_scale = 1.0 / (p_.R * p_.R);
      op.energy_shift = (1.0 + 2.0 * nu) / (2.0 * p_.R * p_.R);
      out.push_back(std::move(op));
    }
    return out;
  }

 private:
  static Weight measure() {
    return [](double x) {
      const double s = std::sinh(x);
      return s * s;
    };
  }
  static Domain check_domain() { return {detail::kHalfLineStart, 40.0}; }

  void check(const QuantumNumbers& qn) const {
    if (!admissible(qn)) {
      throw Error(ErrorCode::out_of_range, "state " + state_name(qn) +
                                               " is outside 1 <= n <= " + std::to_string(n_max_) +
                                               ", 0 <= l < n");
    }
  }

  StateLabels default_labels(const QuantumNumbers& qn) const {
    return {p_.nu / qn.n, -static_cast<double>(qn.n)};
  }

  std::optional<std::complex<double>> default_coefficient(const QuantumNumbers& qn,
                                                          Generator which,
                                                          Direction direction) const {
    const StateLabels st = default_labels(qn);
    const double s = st.s, t = st.t, l = qn.l;
    const double sg = direction_sign(direction);
    if (which == Generator::S) {
      const double num = (s + t) * (s - t) * (s - sg * l) * (s + sg * l + sg);
      const double den = (s + t + sg) * (s - t + sg);
      return detail::radical_coefficient(num, den, 1.0);
    }
    const double num = (s + t) * (s - t) * (-t - sg) * (-t + sg * l) * (-t - sg * l - sg);
    const double den = (-t) * (s + t + sg) * (s - t - sg);
    return detail::radical_coefficient(num, den, -1.0);
  }

  // sinh^{l + extra} x e^{-(s + t + l + 1) x} 2F1(t + l + 1, s + l + 1; 2l + 2; 1 - e^{-2x})
  // with default labels; extra = 1 gives phi = sinh x psi.
  RealFunctionPtr shape(const QuantumNumbers& qn, int extra) const {
    const StateLabels st = default_labels(qn);
    const double s = st.s, t = st.t, l = qn.l;
    const Hyp2F1Spec sp = detail::spec(t + l + 1.0, s + l + 1.0, 2.0 * l + 2.0);
    const double power = l + extra;
    return make_function([s, t, l, power, sp](const auto& x) {
      using T = typename std::decay_t<decltype(x)>::value_type;
      const T rate = T(s) + T(t) + T(l) + T(1);
      const auto pref = exp(log_sinh(x) * T(power) - x * rate);
      return pref * hyp2f1(sp, -expm1(x * T(-2)));
    });
  }

  double normalization(const QuantumNumbers& qn) const {
    const StateLabels st = default_labels(qn);
    const double s = st.s, t = st.t, l = qn.l;
    const double log_ratio = log_gamma_real(l - t + 1.0) + log_gamma_real(s + l + 1.0) -
                             log_gamma_real(-t - l) - log_gamma_real(s - l);
    const double radicand = (s + t) * (s - t) / (-t);
    const double log_n = (l + 1.0) * std::log(2.0) - log_gamma_real(2.0 * l + 2.0) +
                         0.5 * (std::log(radicand) + log_ratio);
    return std::exp(log_n);
  }

  KeplerParams p_;
  int n_max_ = 0;
};

}  // namespace

ModelPtr make_kepler(const KeplerParams& p, bool require_states) {
  return std::make_shared<KeplerModel>(p, require_states);
}

}  // namespace satalg
