#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "satalg/function.hpp"

namespace satalg {

using Potential = std::function<double(double)>;
using Weight = std::function<double(double)>;

/// Uniform grid on [lo, hi] with an attached measure density (default 1).
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int count = 3;
  Weight weight;

  static Grid uniform(double lo, double hi, int count, Weight weight = {});

  double spacing() const { return (hi - lo) / (count - 1); }
  double x(int i) const { return i == count - 1 ? hi : lo + i * spacing(); }
  double weight_at(double x) const { return weight ? weight(x) : 1.0; }
  std::vector<double> points() const;
  Grid with_count(int n) const { return uniform(lo, hi, n, weight); }
};

/// Composite Simpson weights times the measure density. An even point count
/// closes the last panel with the trapezoid rule.
std::vector<double> quadrature_weights(const Grid& grid);

/// Integral of weight * |f|^2 over the grid.
double quadrature_norm(const RealFunction& f, const Grid& grid);
double quadrature_norm(std::span<const double> samples, const Grid& grid);

std::vector<double> sample(const RealFunction& f, const Grid& grid);

/// Max deviation between an analytic derivative and a five-point central
/// difference of f, over interior points where |f| > 1e-10 sup|f|, relative
/// to the largest analytic derivative seen there.
double fd_derivative_check(const std::function<double(double)>& f,
                           const std::function<double(double)>& analytic,
                           const Grid& grid, int order);
double fd_derivative_check(const RealFunction& f, const Grid& grid, int order);

/// Lowest `count` eigenvalues of -kinetic d^2/dx^2 + V on the grid interior
/// with Dirichlet ends (three-point Laplacian, Sturm bisection).
std::vector<double> fd_eigensolve(const Potential& potential, const Grid& grid, int count,
                                  double kinetic = 0.5);

/// Richardson extrapolation of fd_eigensolve over the grid and its 2x
/// coarsening (grid.count must be odd).
std::vector<double> fd_eigensolve_extrapolated(const Potential& potential, const Grid& grid,
                                               int count, double kinetic = 0.5);

double sup_abs(std::span<const double> v);
double sup_abs(std::span<const std::complex<double>> v);

}  // namespace satalg
