#include "satalg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace satalg {

Grid Grid::uniform(double lo, double hi, int count, Weight weight) {
  if (!(lo < hi)) throw Error(ErrorCode::invalid_parameter, "grid needs lo < hi");
  if (count < 3) throw Error(ErrorCode::invalid_parameter, "grid needs at least 3 points");
  return Grid{lo, hi, count, std::move(weight)};
}

std::vector<double> Grid::points() const {
  std::vector<double> p(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) p[static_cast<std::size_t>(i)] = x(i);
  return p;
}

std::vector<double> quadrature_weights(const Grid& grid) {
  const int n = grid.count;
  const double h = grid.spacing();
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  // Simpson over an even number of panels; a leftover panel gets trapezoid.
  const int simpson_last = (n % 2 == 1) ? n - 1 : n - 2;
  for (int i = 0; i <= simpson_last; ++i) {
    double c = (i == 0 || i == simpson_last) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    w[static_cast<std::size_t>(i)] += c * h / 3.0;
  }
  if (simpson_last == n - 2) {
    w[static_cast<std::size_t>(n - 2)] += 0.5 * h;
    w[static_cast<std::size_t>(n - 1)] += 0.5 * h;
  }
  if (grid.weight) {
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] *= grid.weight(grid.x(i));
  }
  return w;
}

std::vector<double> sample(const RealFunction& f, const Grid& grid) {
  std::vector<double> v(static_cast<std::size_t>(grid.count));
  for (int i = 0; i < grid.count; ++i) v[static_cast<std::size_t>(i)] = f.value(grid.x(i));
  return v;
}

double quadrature_norm(std::span<const double> samples, const Grid& grid) {
  const auto w = quadrature_weights(grid);
  double acc = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) acc += w[i] * samples[i] * samples[i];
  return acc;
}

double quadrature_norm(const RealFunction& f, const Grid& grid) {
  const auto v = sample(f, grid);
  return quadrature_norm(v, grid);
}

double fd_derivative_check(const std::function<double(double)>& f,
                           const std::function<double(double)>& analytic,
                           const Grid& grid, int order) {
  if (order != 1 && order != 2) {
    throw Error(ErrorCode::out_of_range, "fd_derivative_check supports orders 1 and 2");
  }
  const int n = grid.count;
  const double h = grid.spacing();
  std::vector<double> fv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) fv[static_cast<std::size_t>(i)] = f(grid.x(i));
  const double fmax = sup_abs(fv);
  double worst = 0.0, scale = 0.0;
  for (int i = 2; i + 2 < n; ++i) {
    const auto at = [&](int j) { return fv[static_cast<std::size_t>(j)]; };
    if (std::abs(at(i)) <= 1e-10 * fmax) continue;
    double fd;
    if (order == 1) {
      fd = (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * h);
    } else {
      fd = (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * at(i) + 16.0 * at(i + 1) - at(i + 2)) /
           (12.0 * h * h);
    }
    const double an = analytic(grid.x(i));
    worst = std::max(worst, std::abs(fd - an));
    scale = std::max(scale, std::abs(an));
  }
  return scale > 0.0 ? worst / scale : worst;
}

double fd_derivative_check(const RealFunction& f, const Grid& grid, int order) {
  return fd_derivative_check([&](double x) { return f.value(x); },
                             [&](double x) { return f.derivative(x, order); }, grid, order);
}

namespace {

// Number of eigenvalues of the symmetric tridiagonal matrix below `lambda`.
int sturm_count(const std::vector<double>& diag, double off2, double lambda) {
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    q = diag[i] - lambda - (i == 0 ? 0.0 : off2 / q);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> fd_eigensolve(const Potential& potential, const Grid& grid, int count,
                                  double kinetic) {
  const int n = grid.count - 2;
  if (count < 1 || count > n) {
    throw Error(ErrorCode::out_of_range, "fd_eigensolve: bad eigenvalue count");
  }
  const double h = grid.spacing();
  const double off = -kinetic / (h * h);
  std::vector<double> diag(static_cast<std::size_t>(n));
  double lo = std::numeric_limits<double>::max(), hi = std::numeric_limits<double>::lowest();
  for (int i = 0; i < n; ++i) {
    const double v = potential(grid.x(i + 1));
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::domain, "fd_eigensolve: potential not finite at grid interior");
    }
    const double d = 2.0 * kinetic / (h * h) + v;
    diag[static_cast<std::size_t>(i)] = d;
    lo = std::min(lo, d - 2.0 * std::abs(off));
    hi = std::max(hi, d + 2.0 * std::abs(off));
  }
  const double off2 = off * off;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    double a = lo, b = hi;
    int iter = 0;
    while (b - a > 1e-14 * std::max(1.0, std::abs(a) + std::abs(b))) {
      if (++iter > 10000) {
        throw Error(ErrorCode::no_convergence,
                    "fd_eigensolve: bisection cap reached for eigenvalue " + std::to_string(k));
      }
      const double mid = 0.5 * (a + b);
      if (sturm_count(diag, off2, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    values.push_back(0.5 * (a + b));
  }
  return values;
}

std::vector<double> fd_eigensolve_extrapolated(const Potential& potential, const Grid& grid,
                                               int count, double kinetic) {
  if (grid.count % 2 == 0) {
    throw Error(ErrorCode::invalid_parameter, "Richardson extrapolation needs an odd count");
  }
  const auto fine = fd_eigensolve(potential, grid, count, kinetic);
  const auto coarse = fd_eigensolve(potential, grid.with_count((grid.count + 1) / 2), count,
                                    kinetic);
  std::vector<double> out(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return out;
}

double sup_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double sup_abs(std::span<const std::complex<double>> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace satalg
