// Generalized Morse potential V(r) = D (1 - b / (e^{ar} - 1))^2 on r > 0.
// In xbar = a r / 2 it is a real-offset type E problem with alpha = 1,
// m(m+1) = k b^2 and q = -k b (b + 2), k = 2 mu D / (a hbar)^2.

#include <cmath>
#include <memory>
#include <mutex>

#include "common.hpp"

namespace satalg {

namespace {

using detail::require;

class GMPModel final : public Model {
 public:
  GMPModel(const GMPParams& p, bool require_states) : p_(p) {
    detail::require_finite(p.D, "D");
    detail::require_finite(p.b, "b");
    detail::require_finite(p.a, "a");
    detail::require_finite(p.mu, "mu");
    detail::require_finite(p.hbar, "hbar");
    require(p.D > 0.0, "D > 0 violated");
    require(p.b > 0.0, "b > 0 violated");
    require(p.a > 0.0, "a > 0 violated");
    require(p.mu > 0.0, "mu > 0 violated");
    require(p.hbar > 0.0, "hbar > 0 violated");
    k_ = 2.0 * p.mu * p.D / (p.a * p.a * p.hbar * p.hbar);
    K_ = k_ * p.b * p.b;
    m_ = (-1.0 + std::sqrt(1.0 + 4.0 * K_)) / 2.0;
    Q_ = k_ * p.b * (p.b + 2.0);
    n_max_ = largest_integer_below(std::sqrt(Q_) - m_ - 1.0);
    if (require_states) {
      require(n_max_ >= 0, "bound states need sqrt(k b (b+2)) > m + 1 (no admissible n)");
    }
    epsilon_ = -1;
    norms_ = std::make_shared<NormCache>();
  }

  ModelKind kind() const override { return ModelKind::gmp; }
  std::string name() const override { return "gmp"; }
  ParamList params() const override {
    return {{"D", p_.D}, {"b", p_.b}, {"a", p_.a}, {"mu", p_.mu}, {"hbar", p_.hbar}};
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
    const double N = big_n(qn);
    const double d = N - Q_ / N;
    return p_.D - p_.a * p_.a * p_.hbar * p_.hbar / (8.0 * p_.mu) * d * d;
  }
  std::string state_name(const QuantumNumbers& qn) const override {
    return "n=" + std::to_string(qn.n);
  }

  TypeEProblem type_e_problem() const override {
    std::vector<double> ms;
    for (int j = 0; j <= std::max(n_max_, 0) + 1; ++j) ms.push_back(m_ + j);
    return make_type_e_problem(1.0, -Q_, ms);
  }
  double type_e_m(const QuantumNumbers&) const override { return m_; }
  double type_e_l(const QuantumNumbers& qn) const override { return qn.n + m_; }
  double lambda_from_energy(const QuantumNumbers& qn) const override {
    const double eps = 2.0 * p_.mu * energy(qn) / (p_.a * p_.a * p_.hbar * p_.hbar);
    return 4.0 * (eps - k_) - 2.0 * Q_;
  }
  WavefunctionPtr type_e_function(const QuantumNumbers& qn) const override {
    check(qn);
    return std::make_shared<ClosedFormWavefunction>(shape_xbar(qn.n), norm(qn.n),
                                                    "gmp type E " + state_name(qn));
  }
  Grid type_e_grid(int count, std::optional<Domain> domain) const override {
    const Domain d = domain.value_or(check_domain());
    return Grid::uniform(0.5 * p_.a * d.lo, 0.5 * p_.a * d.hi, count);
  }

  WavefunctionPtr eigenfunction(const QuantumNumbers& qn) const override {
    check(qn);
    return std::make_shared<ClosedFormWavefunction>(shape_r(qn.n), norm(qn.n),
                                                    "gmp " + state_name(qn));
  }
  Grid default_grid(int count, std::optional<Domain> domain) const override {
    if (domain) return detail::domain_grid(*domain, count);
    double hi = 40.0 / p_.a;
    if (n_max_ >= 0) {
      const double N = n_max_ + m_ + 1.0;
      const double alpha_n = 0.5 * (Q_ / N - N);
      hi = std::max(hi, detail::kDecayLengths / (p_.a * alpha_n));
    }
    return Grid::uniform(detail::kHalfLineStart, hi, count);
  }
  Grid check_grid(int count, std::optional<Domain> domain) const override {
    return detail::domain_grid(domain.value_or(check_domain()), count);
  }

  int canonical_epsilon() const override { return -1; }
  StateLabels labels(const QuantumNumbers& qn) const override {
    const double N = big_n(qn);
    return detail::orient({Q_ / N, -N}, epsilon_, -1);
  }

  GeneratorRealization realization() const override {
    const double h = 0.5 * p_.a;
    GeneratorRealization g;
    g.A = make_function([h](const auto& r) { return sinh(r * h) / h; });
    g.B = make_function([h](const auto& r) { return cosh(r * h); });
    g.C = make_function([h](const auto& r) { return sinh(r * h); });
    g.alpha = 1.0;
    g.dscale = 1.0 / h;
    g.sinh2 = make_function([h](const auto& r) {
      const auto s = sinh(r * h);
      return s * s;
    });
    g.coth = make_function([h](const auto& r) { return coth(r * h); });
    return g;
  }

  std::optional<std::complex<double>> predicted_coefficient(const QuantumNumbers&, Generator,
                                                            Direction) const override {
    throw Error(ErrorCode::unavailable,
                "no closed-form shift coefficients for the GMP family; "
                "proportionality and the Casimir are checked instead");
  }

  SatelliteTarget satellite_map(const QuantumNumbers& qn, Generator which,
                                Direction direction) const override {
    check(qn);
    const StateLabels st = labels(qn);
    const int sign = direction_sign(direction);
    const double b = p_.b;
    SatelliteTarget out;
    out.qn = qn;
    double b_new;
    if (which == Generator::S) {
      b_new = 2.0 * K_ * b / (2.0 * K_ - sign * st.t * b);
    } else {
      b_new = 2.0 * st.t * b / (2.0 * st.t + sign * (b + 2.0));
      out.qn.n = qn.n + sign * epsilon_;
    }
    const double k_new = K_ / (b_new * b_new);
    GMPParams np = p_;
    np.b = b_new;
    np.D = p_.D * k_new / k_;
    out.params = {{"D", np.D}, {"b", np.b}, {"a", np.a}, {"mu", np.mu}, {"hbar", np.hbar}};
    try {
      out.model = make_gmp(np, false)->with_epsilon(epsilon_);
    } catch (const Error& e) {
      out.note = e.what();
      return out;
    }
    out.normalizable = out.model->admissible(out.qn);
    if (!out.normalizable) out.note = "mapped state " + state_name(out.qn) + " is not normalizable";
    return out;
  }

  double conserved_quantity(const QuantumNumbers&) const override { return K_; }
  std::string conserved_name() const override { return "kb^2"; }

  std::vector<NamedValue> label_identities(const QuantumNumbers& qn) const override {
    const double eps = 2.0 * p_.mu * energy(qn) / (p_.a * p_.a * p_.hbar * p_.hbar);
    const double an = std::sqrt(k_ - eps);
    const double bn = std::sqrt(an * an + Q_);
    const double sigma = epsilon_ == -1 ? 1.0 : -1.0;
    const StateLabels st = labels(qn);
    const double lambda = lambda_from_energy(qn);
    return {{"s - (alpha_n + beta_n)", detail::relative_gap(st.s, sigma * (an + bn))},
            {"t - (alpha_n - beta_n)", detail::relative_gap(st.t, sigma * (an - bn))},
            {"s t - q", detail::relative_gap(st.s * st.t, -Q_)},
            {"s^2 + t^2 + lambda", detail::relative_gap(st.s * st.s + st.t * st.t, -lambda)}};
  }

  ModelPtr with_epsilon(int epsilon) const override {
    detail::check_epsilon(epsilon);
    auto copy = std::make_shared<GMPModel>(*this);
    copy->epsilon_ = epsilon;
    return copy;
  }

  std::vector<OracleProblem> oracle_problems(int count,
                                             std::optional<Domain> domain) const override {
    OracleProblem op;
    const Grid g = default_grid(count, domain);
    op.grid = Grid::uniform(domain ? domain->lo : 0.0, g.hi, count);
    const double D = p_.D, b = p_.b, a = p_.a;
    op.potential = [D, b, a](double r) {
      const double w = 1.0 - b / std::expm1(a * r);
      return D * w * w;
    };
    op.kinetic = p_.hbar * p_.hbar / (2.0 * p_.mu);
    op.states = states();
    return {op};
  }

 private:
  Domain check_domain() const { return {detail::kHalfLineStart, 40.0 / p_.a}; }
  double big_n(const QuantumNumbers& qn) const { return qn.n + m_ + 1.0; }

  void check(const QuantumNumbers& qn) const {
    if (!admissible(qn)) {
      throw Error(ErrorCode::out_of_range,
                  "state " + state_name(qn) + " is outside 0 <= n <= " + std::to_string(n_max_));
    }
  }

  // y^alpha (1+y)^-beta 2F1(-n, n + 2t + 1; s + t + 1; -y), y = 1/(e^{2 xbar} - 1),
  // with (s, t) the canonical labels.
  auto formula(int n) const {
    const double N = n + m_ + 1.0;
    const double s = Q_ / N, t = -N;
    const Hyp2F1Spec sp = detail::spec(-n, n + 2.0 * t + 1.0, s + t + 1.0);
    return [s, t, sp](const auto& xb) {
      using T = typename std::decay_t<decltype(xb)>::value_type;
      const auto u = xb * T(2);
      const auto ly = -log(expm1(u));
      const T alpha = (T(s) + T(t)) / T(2), beta = (T(s) - T(t)) / T(2);
      const auto pref = exp(ly * alpha - (u + ly) * beta);
      return pref * hyp2f1(sp, -exp(ly));
    };
  }

  RealFunctionPtr shape_xbar(int n) const { return make_function(formula(n)); }

  RealFunctionPtr shape_r(int n) const {
    const double h = 0.5 * p_.a;
    return make_function([f = formula(n), h](const auto& r) {
      using T = typename std::decay_t<decltype(r)>::value_type;
      return f(r * T(h));
    });
  }

  // N_n has no closed form here; it is computed once by quadrature, on first
  // use, and shared by epsilon-flipped copies.
  struct NormCache {
    std::once_flag once;
    std::vector<double> values;
  };

  double norm(int n) const {
    std::call_once(norms_->once, [this] {
      const Grid g = default_grid(kNormalizationCount, std::nullopt);
      for (int j = 0; j <= n_max_; ++j) {
        norms_->values.push_back(1.0 / std::sqrt(quadrature_norm(*shape_r(j), g)));
      }
    });
    return norms_->values[static_cast<std::size_t>(n)];
  }

  GMPParams p_;
  double k_ = 0.0, K_ = 0.0, m_ = 0.0, Q_ = 0.0;
  int n_max_ = -1;
  std::shared_ptr<NormCache> norms_;
};

}  // namespace

ModelPtr make_gmp(const GMPParams& p, bool require_states) {
  return std::make_shared<GMPModel>(p, require_states);
}

}  // namespace satalg
