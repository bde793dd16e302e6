#include "afm/overlaps.hpp"

#include "afm/errors.hpp"
#include "afm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace afm {

namespace {

constexpr int kMaxIndex = 12;

void check_args(int n, int n_prime, int l, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("dilated overlap: a must be positive");
  }
  if (n < 0 || n_prime < 0 || l < 0 || n > kMaxIndex || n_prime > kMaxIndex || l > kMaxIndex) {
    throw DomainError("dilated overlap: indices must lie in [0, 12]");
  }
}

double lfact(int k) { return specfun::ln_gamma(k + 1.0); }

// x^k with integer k >= 0 and 0^0 = 1.
long double ipow(long double x, int k) {
  long double r = 1.0L;
  for (int i = 0; i < k; ++i) {
    r *= x;
  }
  return r;
}

// Tail mass of u^2 beyond r.
double mass_beyond(const RadialFunction& f, double r) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    if (f.grid[i] >= r) {
      x.push_back(f.grid[i]);
      y.push_back(f.values[i] * f.values[i]);
    }
  }
  return x.size() < 2 ? 0.0 : simpson(x, y);
}

} // namespace

double overlap_hydrogen_dilated(int n, int n_prime, int l, double a) {
  check_args(n, n_prime, l, a);
  const int nn = n + l + 1;
  const int np = n_prime + l + 1;
  const long double la = a;
  const long double q = la * nn - np;
  const long double s = la * nn + np;
  const long double four = 4.0L * la * nn * np;

  const long double log_pre = 0.5L * (std::log(la) + lfact(n) + lfact(nn + l) + lfact(n_prime) + lfact(np + l)) +
                              nn * std::log(four) - (nn + np + 1) * std::log(s);
  const long double sign = ((n + n_prime) % 2 == 0) ? 1.0L : -1.0L;

  long double sum = 0.0L;
  for (int k = 0; k <= n; ++k) {
    const int d = n_prime - n + k; // n' - n + k
    if (d + 1 < 0) {
      continue;
    }
    const int e = n_prime - n + 2 * k;
    const long double c = ((k % 2 == 0) ? 1.0L : -1.0L) *
                          std::exp(-k * std::log(four) - lfact(k) - lfact(n - k) - lfact(nn - k + l) - lfact(d + 1));
    const long double ta = 2.0L * (nn - k) * (d + 1);
    const long double tb = static_cast<long double>(n - k) * (nn - k + l) / (2.0L * la * nn);
    const long double tc = static_cast<long double>(d) * (d + 1) * 2.0L * la * nn;
    long double t = 0.0L;
    if (ta != 0.0L) {
      t += ta * ipow(q, e);
    }
    if (tb != 0.0L) {
      t += tb * ipow(q, e + 1);
    }
    if (tc != 0.0L) {
      t += tc * ipow(q, e - 1);
    }
    sum += c * t;
  }
  return static_cast<double>(sign * std::exp(log_pre) * sum);
}

double overlap_oscillator_dilated(int n, int n_prime, int l, double a) {
  check_args(n, n_prime, l, a);
  const long double la = a;
  const long double one_m = 1.0L - la * la;
  const long double log_pre =
      0.5L * (lfact(n) + lfact(n_prime) + specfun::ln_gamma(n + l + 1.5) + specfun::ln_gamma(n_prime + l + 1.5)) +
      (2.0L * n + l + 1.5L) * std::log(2.0L * la) - (n + n_prime + l + 1.5L) * std::log(1.0L + la * la);
  long double sum = 0.0L;
  for (int k = 0; k <= n; ++k) {
    const int d = n_prime - n + k;
    if (d < 0) {
      continue;
    }
    const long double c = ((k % 2 == 0) ? 1.0L : -1.0L) *
                          std::exp(-2.0L * k * std::log(2.0L * la) - lfact(k) - lfact(n - k) - lfact(d) -
                                   specfun::ln_gamma(n - k + l + 1.5));
    sum += c * ipow(one_m, n_prime - n + 2 * k);
  }
  return static_cast<double>(std::exp(log_pre) * sum);
}

double afm_pair_dilation(AuxiliaryKind kind, int n, int n_prime, int l) {
  if (kind == AuxiliaryKind::Coulomb) {
    return std::pow((n_prime + l + 1.0) / (n + l + 1.0), 4.0 / 3.0);
  }
  return std::pow((4.0 * n + 2.0 * l + 3.0) / (4.0 * n_prime + 2.0 * l + 3.0), 1.0 / 6.0);
}

double afm_pair_overlap(AuxiliaryKind kind, int n, int n_prime, int l) {
  const double a = afm_pair_dilation(kind, n, n_prime, l);
  return kind == AuxiliaryKind::Coulomb ? overlap_hydrogen_dilated(n, n_prime, l, a)
                                        : overlap_oscillator_dilated(n, n_prime, l, a);
}

double numeric_overlap(const RadialFunction& f, const RadialFunction& g) {
  if (f.grid.size() < 3 || g.grid.size() < 3) {
    throw DomainError("numeric_overlap: radial functions need at least three samples");
  }
  const double lo = std::max(f.grid.front(), g.grid.front());
  const double hi = std::min(f.r_max(), g.r_max());
  if (!(hi > lo)) {
    throw GridMismatch("numeric_overlap: supports do not intersect");
  }
  const double nf = f.norm();
  const double ng = g.norm();
  if (mass_beyond(f, hi) > 1e-10 * nf || mass_beyond(g, hi) > 1e-10 * ng) {
    throw GridMismatch("numeric_overlap: density beyond the common support exceeds 1e-10");
  }

  if (f.grid == g.grid) {
    std::vector<double> y(f.grid.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = f.values[i] * g.values[i];
    }
    return simpson(f.grid, y);
  }

  std::vector<double> x;
  x.reserve(f.grid.size() + g.grid.size());
  std::merge(f.grid.begin(), f.grid.end(), g.grid.begin(), g.grid.end(), std::back_inserter(x));
  const double eps = 1e-12 * hi;
  // Near-coincident nodes would give Simpson panels of wildly unequal width.
  const double spacing = std::min((f.r_max() - f.grid.front()) / static_cast<double>(f.grid.size() - 1),
                                  (g.r_max() - g.grid.front()) / static_cast<double>(g.grid.size() - 1));
  const double min_gap = 0.25 * spacing;
  std::vector<double> grid;
  grid.reserve(x.size());
  for (const double r : x) {
    if (r < lo - eps || r > hi + eps) {
      continue;
    }
    if (grid.empty() || r - grid.back() > min_gap) {
      grid.push_back(std::clamp(r, lo, hi));
    }
  }
  std::vector<double> y(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    y[i] = f(grid[i]) * g(grid[i]);
  }
  return simpson(grid, y);
}

} // namespace afm
