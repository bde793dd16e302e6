#include "afm/radial.hpp"

#include "afm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace afm {

namespace {

// Three-point derivative on a non-uniform grid.
double slope_at(const std::vector<double>& x, const std::vector<double>& y, std::size_t i) {
  const std::size_t n = x.size();
  if (n < 2) {
    return 0.0;
  }
  if (i == 0) {
    return (y[1] - y[0]) / (x[1] - x[0]);
  }
  if (i == n - 1) {
    return (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
  }
  const double h0 = x[i] - x[i - 1];
  const double h1 = x[i + 1] - x[i];
  return (-h1 / (h0 * (h0 + h1))) * y[i - 1] + ((h1 - h0) / (h0 * h1)) * y[i] + (h0 / (h1 * (h0 + h1))) * y[i + 1];
}

} // namespace

double RadialFunction::operator()(double r) const {
  if (grid.size() < 2 || r < grid.front() || r > grid.back()) {
    return 0.0;
  }
  auto it = std::upper_bound(grid.begin(), grid.end(), r);
  std::size_t i = static_cast<std::size_t>(it - grid.begin());
  i = std::clamp<std::size_t>(i, 1, grid.size() - 1) - 1;
  const double x0 = grid[i];
  const double h = grid[i + 1] - x0;
  const double t = (r - x0) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double m0 = slope_at(grid, values, i) * h;
  const double m1 = slope_at(grid, values, i + 1) * h;
  return (2 * t3 - 3 * t2 + 1) * values[i] + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * values[i + 1] +
         (t3 - t2) * m1;
}

double RadialFunction::radial(double r) const {
  if (grid.size() < 3) {
    return 0.0;
  }
  if (r <= grid[1]) {
    // u(r)/r extrapolated from the first non-origin samples.
    const std::size_t j = grid[0] > 0.0 ? 0 : 1;
    const double a = values[j] / grid[j];
    const double b = values[j + 1] / grid[j + 1];
    if (r <= 0.0) {
      return a + (b - a) * (0.0 - grid[j]) / (grid[j + 1] - grid[j]);
    }
    return a + (b - a) * (r - grid[j]) / (grid[j + 1] - grid[j]);
  }
  return (*this)(r) / r;
}

double RadialFunction::norm() const {
  std::vector<double> y(values.size());
  std::transform(values.begin(), values.end(), y.begin(), [](double u) { return u * u; });
  return simpson(grid, y);
}

int RadialFunction::nodes(double floor) const {
  double peak = 0.0;
  for (const double u : values) {
    peak = std::max(peak, std::abs(u));
  }
  const double cut = floor * peak;
  int count = 0;
  int last = 0;
  for (const double u : values) {
    if (std::abs(u) <= cut) {
      continue;
    }
    const int s = u > 0.0 ? 1 : -1;
    if (last != 0 && s != last) {
      ++count;
    }
    last = s;
  }
  return count;
}

double simpson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DomainError("simpson: size mismatch");
  }
  const std::size_t n = x.size();
  if (n < 2) {
    return 0.0;
  }
  if (n == 2) {
    return 0.5 * (x[1] - x[0]) * (y[0] + y[1]);
  }
  double sum = 0.0;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const double h0 = x[i + 1] - x[i];
    const double h1 = x[i + 2] - x[i + 1];
    const double hs = h0 + h1;
    sum += hs / 6.0 * ((2.0 - h1 / h0) * y[i] + hs * hs / (h0 * h1) * y[i + 1] + (2.0 - h0 / h1) * y[i + 2]);
  }
  if (i + 1 < n) {
    // Last interval [x_{n-2}, x_{n-1}] from the parabola through the last three points.
    const double h0 = x[n - 2] - x[n - 3];
    const double h1 = x[n - 1] - x[n - 2];
    sum += h1 / 6.0 *
           ((3.0 - h1 / (h0 + h1)) * y[n - 1] + (3.0 + h1 / h0) * y[n - 2] - h1 * h1 / (h0 * (h0 + h1)) * y[n - 3]);
  }
  return sum;
}

RadialFunction tabulate(const std::function<double(double)>& radial, std::vector<double> grid, double energy,
                        QuantumNumbers q) {
  RadialFunction f;
  f.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    f.values[i] = grid[i] * radial(grid[i]);
  }
  f.grid = std::move(grid);
  f.energy = energy;
  f.q = q;
  return f;
}

std::vector<double> uniform_grid(double r_max, int n) {
  if (!(r_max > 0.0) || n < 2) {
    throw DomainError("uniform_grid: need r_max > 0 and at least two intervals");
  }
  std::vector<double> g(static_cast<std::size_t>(n) + 1);
  const double h = r_max / n;
  for (int i = 0; i <= n; ++i) {
    g[static_cast<std::size_t>(i)] = h * i;
  }
  return g;
}

} // namespace afm
