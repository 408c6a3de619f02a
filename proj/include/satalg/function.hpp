#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "satalg/jet.hpp"

namespace satalg {

/// A real function of one variable that reports exact derivatives at a point
/// through a Taylor jet, in double or in binary128.
class RealFunction {
 public:
  virtual ~RealFunction() = default;
  virtual RealJet jet(double x) const = 0;
  virtual WideJet wide_jet(Wide x) const = 0;

  double value(double x) const { return jet(x).value(); }
  double derivative(double x, int order) const { return jet(x).derivative(order); }
  double operator()(double x) const { return value(x); }
};

using RealFunctionPtr = std::shared_ptr<const RealFunction>;

/// A function given by one generic formula over jets, instantiated for both
/// scalar back ends. `F` must accept Jet<double> and Jet<Wide>.
template <class F>
class FormulaFunction final : public RealFunction {
 public:
  explicit FormulaFunction(F formula) : formula_(std::move(formula)) {}
  RealJet jet(double x) const override { return formula_(RealJet::variable(x)); }
  WideJet wide_jet(Wide x) const override { return formula_(WideJet::variable(x)); }

 private:
  F formula_;
};

template <class F>
RealFunctionPtr make_function(F formula) {
  return std::make_shared<FormulaFunction<F>>(std::move(formula));
}

/// Closed-form eigenfunction: normalization x shape, where the shape is a
/// product of elementary prefactors and a terminating 2F1.
class ClosedFormWavefunction final : public RealFunction {
 public:
  ClosedFormWavefunction(RealFunctionPtr shape, double normalization, std::string label)
      : shape_(std::move(shape)), normalization_(normalization), label_(std::move(label)) {}

  RealJet jet(double x) const override { return shape_->jet(x) * normalization_; }
  WideJet wide_jet(Wide x) const override {
    return shape_->wide_jet(x) * Wide(normalization_);
  }

  double normalization() const { return normalization_; }
  const std::string& label() const { return label_; }
  const RealFunctionPtr& shape() const { return shape_; }

  std::shared_ptr<const ClosedFormWavefunction> rescaled(double normalization) const {
    return std::make_shared<ClosedFormWavefunction>(shape_, normalization, label_);
  }

 private:
  RealFunctionPtr shape_;
  double normalization_;
  std::string label_;
};

using WavefunctionPtr = std::shared_ptr<const ClosedFormWavefunction>;

/// Caches binary128 jets by abscissa. Identity checks evaluate the same base
/// state under many operator products on one grid.
class MemoizedFunction final : public RealFunction {
 public:
  explicit MemoizedFunction(RealFunctionPtr inner) : inner_(std::move(inner)) {}

  RealJet jet(double x) const override { return inner_->jet(x); }
  WideJet wide_jet(Wide x) const override {
    const double key = static_cast<double>(x);
    if (Wide(key) != x) return inner_->wide_jet(x);
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    WideJet j = inner_->wide_jet(x);
    cache_.emplace(key, j);
    return j;
  }

 private:
  RealFunctionPtr inner_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<double, WideJet> cache_;
};

inline RealFunctionPtr memoize(RealFunctionPtr f) {
  return std::make_shared<MemoizedFunction>(std::move(f));
}

}  // namespace satalg
