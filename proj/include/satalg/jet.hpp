#pragma once

// Truncated Taylor arithmetic (forward-mode derivatives of every order up to
// kJetOrder). A Jet holds the normalized Taylor coefficients c_k = f^(k)(x0)/k!
// of a function at a point, plus the highest order that is still exact.

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "satalg/error.hpp"
#include "satalg/scalar.hpp"

namespace satalg {

inline constexpr int kJetOrder = 5;

template <class T>
class Jet {
 public:
  static constexpr int kSize = kJetOrder + 1;
  using value_type = T;

  Jet() = default;
  Jet(T constant) { c_[0] = constant; }  // NOLINT(google-explicit-constructor)

  static Jet variable(T x0) {
    Jet j(x0);
    j.c_[1] = T(1);
    return j;
  }

  T value() const { return c_[0]; }
  T coefficient(int k) const { return c_[static_cast<std::size_t>(k)]; }
  void set_coefficient(int k, T v) { c_[static_cast<std::size_t>(k)] = v; }
  int order() const { return order_; }
  void limit_order(int order) { order_ = std::min(order_, order); }

  T derivative(int k) const {
    if (k > order_) {
      throw Error(ErrorCode::out_of_range,
                  "derivative of order " + std::to_string(k) +
                      " exceeds jet order " + std::to_string(order_));
    }
    T f = c_[static_cast<std::size_t>(k)];
    for (int i = 2; i <= k; ++i) f *= T(i);
    return f;
  }

  // d/dx of the underlying function; loses one order of exactness.
  Jet differentiate() const {
    Jet d;
    for (int k = 0; k < kJetOrder; ++k) {
      d.c_[static_cast<std::size_t>(k)] =
          T(k + 1) * c_[static_cast<std::size_t>(k + 1)];
    }
    d.order_ = order_ - 1;
    if (d.order_ < 0) {
      throw Error(ErrorCode::out_of_range,
                  "jet exhausted: no derivative information left");
    }
    return d;
  }

  Jet& operator+=(const Jet& o) {
    for (int k = 0; k < kSize; ++k) c_[k] += o.c_[k];
    order_ = std::min(order_, o.order_);
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k < kSize; ++k) c_[k] -= o.c_[k];
    order_ = std::min(order_, o.order_);
    return *this;
  }
  Jet& operator*=(T s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    std::array<T, kSize> r{};
    for (int i = 0; i < kSize; ++i) {
      for (int j = 0; i + j < kSize; ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = r;
    order_ = std::min(order_, o.order_);
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    std::array<T, kSize> q{};
    for (int k = 0; k < kSize; ++k) {
      T acc = c_[k];
      for (int j = 1; j <= k; ++j) acc -= o.c_[j] * q[k - j];
      q[k] = acc / o.c_[0];
    }
    c_ = q;
    order_ = std::min(order_, o.order_);
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator*(Jet a, T s) { return a *= s; }
  friend Jet operator*(T s, Jet a) { return a *= s; }
  friend Jet operator/(Jet a, T s) { return a *= T(1) / s; }
  friend Jet operator+(Jet a, T s) {
    a.c_[0] += s;
    return a;
  }
  friend Jet operator+(T s, Jet a) { return a + s; }
  friend Jet operator-(Jet a, T s) {
    a.c_[0] -= s;
    return a;
  }
  friend Jet operator-(T s, const Jet& a) { return -a + s; }
  friend Jet operator-(Jet a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }

 private:
  std::array<T, kSize> c_{};
  int order_ = kJetOrder;
};

using RealJet = Jet<double>;
using WideJet = Jet<Wide>;

template <class To, class From>
Jet<To> jet_cast(const Jet<From>& j) {
  Jet<To> r;
  for (int k = 0; k <= kJetOrder; ++k) r.set_coefficient(k, static_cast<To>(j.coefficient(k)));
  r.limit_order(j.order());
  return r;
}

// g(u) given the derivatives g^(k)(u0), k = 0..kJetOrder.
template <class T>
Jet<T> compose(const Jet<T>& u, std::span<const T> derivatives) {
  Jet<T> du = u - u.value();
  Jet<T> power(T(1));
  Jet<T> result;
  T factorial = 1;
  const int n = std::min<int>(kJetOrder, static_cast<int>(derivatives.size()) - 1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      power *= du;
      factorial *= T(k);
    }
    result += power * (derivatives[static_cast<std::size_t>(k)] / factorial);
  }
  result.limit_order(std::min(u.order(), n));
  return result;
}

template <class T, std::size_t N>
Jet<T> compose(const Jet<T>& u, const std::array<T, N>& d) {
  return compose(u, std::span<const T>(d.data(), d.size()));
}

template <class T>
Jet<T> compose(const Jet<T>& u, const std::vector<T>& d) {
  return compose(u, std::span<const T>(d.data(), d.size()));
}

namespace detail {

// Derivatives of tanh (or coth) expressed as polynomials in the function
// value h: d/du P(h) = P'(h) (1 - h^2). Returns [h, h', h'', ...].
template <class T>
std::vector<T> ratio_derivatives(T h, int count) {
  std::vector<T> poly{T(0), T(1)};  // P_0(h) = h
  std::vector<T> out;
  for (int k = 0; k < count; ++k) {
    T v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = v * h + poly[i];
    out.push_back(v);
    std::vector<T> dp(poly.size() > 1 ? poly.size() - 1 : 1, T(0));
    for (std::size_t i = 1; i < poly.size(); ++i) dp[i - 1] = poly[i] * T(i);
    std::vector<T> next(dp.size() + 2, T(0));
    for (std::size_t i = 0; i < dp.size(); ++i) {
      next[i] += dp[i];
      next[i + 2] -= dp[i];
    }
    poly = std::move(next);
  }
  return out;
}

// Derivatives of t -> t^p at t0 (falling-factorial times power).
template <class T>
std::array<T, kJetOrder + 1> power_derivatives(T t0, T p) {
  std::array<T, kJetOrder + 1> d;
  const T base = sm::pow(t0, p);
  T falling = 1, inv = 1;
  for (int k = 0; k <= kJetOrder; ++k) {
    d[k] = falling * base * inv;
    falling *= (p - T(k));
    inv /= t0;
  }
  return d;
}

}  // namespace detail

template <class T>
Jet<T> exp(const Jet<T>& u) {
  std::array<T, kJetOrder + 1> d;
  d.fill(sm::exp(u.value()));
  return compose(u, d);
}

template <class T>
Jet<T> expm1(const Jet<T>& u) {
  std::array<T, kJetOrder + 1> d;
  d.fill(sm::exp(u.value()));
  d[0] = sm::expm1(u.value());
  return compose(u, d);
}

template <class T>
Jet<T> log(const Jet<T>& u) {
  const T u0 = u.value();
  if (!(u0 > T(0))) throw Error(ErrorCode::domain, "log of non-positive jet");
  std::array<T, kJetOrder + 1> d;
  d[0] = sm::log(u0);
  T f = 1, inv = T(1) / u0, p = inv;
  for (int k = 1; k <= kJetOrder; ++k) {
    d[k] = ((k % 2) ? f : -f) * p;
    f *= T(k);
    p *= inv;
  }
  return compose(u, d);
}

template <class T>
Jet<T> log1p(const Jet<T>& u) {
  const T v = T(1) + u.value();
  if (!(v > T(0))) throw Error(ErrorCode::domain, "log1p argument <= -1");
  std::array<T, kJetOrder + 1> d;
  d[0] = sm::log1p(u.value());
  T f = 1, inv = T(1) / v, p = inv;
  for (int k = 1; k <= kJetOrder; ++k) {
    d[k] = ((k % 2) ? f : -f) * p;
    f *= T(k);
    p *= inv;
  }
  return compose(u, d);
}

template <class T>
Jet<T> pow(const Jet<T>& u, std::type_identity_t<T> p) {
  if (!(u.value() > T(0))) throw Error(ErrorCode::domain, "pow needs a positive base");
  return compose(u, detail::power_derivatives(u.value(), p));
}

template <class T>
Jet<T> sqrt(const Jet<T>& u) {
  return pow(u, T(0.5));
}

template <class T>
Jet<T> sinh(const Jet<T>& u) {
  const T s = sm::sinh(u.value()), c = sm::cosh(u.value());
  std::array<T, kJetOrder + 1> d;
  for (int k = 0; k <= kJetOrder; ++k) d[k] = (k % 2) ? c : s;
  return compose(u, d);
}

template <class T>
Jet<T> cosh(const Jet<T>& u) {
  const T s = sm::sinh(u.value()), c = sm::cosh(u.value());
  std::array<T, kJetOrder + 1> d;
  for (int k = 0; k <= kJetOrder; ++k) d[k] = (k % 2) ? s : c;
  return compose(u, d);
}

template <class T>
Jet<T> tanh(const Jet<T>& u) {
  return compose(u, detail::ratio_derivatives(sm::tanh(u.value()), kJetOrder + 1));
}

template <class T>
Jet<T> coth(const Jet<T>& u) {
  if (u.value() == T(0)) throw Error(ErrorCode::domain, "coth pole at 0");
  return compose(u, detail::ratio_derivatives(T(1) / sm::tanh(u.value()), kJetOrder + 1));
}

// log cosh(u) without overflow for large |u|.
template <class T>
Jet<T> log_cosh(const Jet<T>& u) {
  const T a = sm::abs(u.value());
  auto d = detail::ratio_derivatives(sm::tanh(u.value()), kJetOrder);
  d.insert(d.begin(), a + sm::log1p(sm::exp(T(-2) * a)) - sm::log(T(2)));
  return compose(u, d);
}

// log sinh(u) for u > 0 without overflow.
template <class T>
Jet<T> log_sinh(const Jet<T>& u) {
  const T u0 = u.value();
  if (!(u0 > T(0))) throw Error(ErrorCode::domain, "log sinh needs a positive argument");
  auto d = detail::ratio_derivatives(T(1) / sm::tanh(u0), kJetOrder);
  d.insert(d.begin(), u0 + sm::log(-sm::expm1(T(-2) * u0)) - sm::log(T(2)));
  return compose(u, d);
}

}  // namespace satalg
