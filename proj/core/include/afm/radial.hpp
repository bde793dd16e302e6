#pragma once

#include "afm/quantum.hpp"

#include <functional>
#include <span>
#include <vector>

namespace afm {

// Reduced radial function u(r) = r R(r) sampled on a strictly increasing grid
// starting at (or very near) the origin. Normalized as  int u^2 dr = 1.
struct RadialFunction {
  std::vector<double> grid;
  std::vector<double> values;
  double energy = 0.0;
  QuantumNumbers q;

  double r_max() const { return grid.empty() ? 0.0 : grid.back(); }

  // Cubic Hermite interpolation of u; zero outside the grid.
  double operator()(double r) const;

  // R(r) = u(r)/r (the r -> 0 limit is taken from the first grid points).
  double radial(double r) const;

  // int u^2 dr over the grid.
  double norm() const;

  // Interior sign changes of u, ignoring samples below `floor` max|u|.
  int nodes(double floor = 1e-10) const;
};

// Composite Simpson rule for samples on an arbitrary increasing grid. An odd
// trailing interval is closed with a three-point quadratic fit.
double simpson(std::span<const double> x, std::span<const double> y);

// Tabulate an analytic radial function R(r) as u = r R(r) on `grid`.
RadialFunction tabulate(const std::function<double(double)>& radial, std::vector<double> grid, double energy,
                        QuantumNumbers q);

// n + 1 equally spaced points on [0, r_max].
std::vector<double> uniform_grid(double r_max, int n);

} // namespace afm
