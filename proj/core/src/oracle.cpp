#include "afm/oracle.hpp"

#include "afm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

namespace afm {

namespace {

constexpr double kHuge = 1e150;
constexpr int kMaxPoints = 2'000'000;
constexpr int kFineSub = 64;
constexpr int kFineSpan = 16;

class Numerov {
public:
  Numerov(const RadialProblem& p, int l, double r_max, int intervals)
      : n_(intervals), h_(r_max / intervals), l_(l), c_(0.5 / p.mass), v_(static_cast<std::size_t>(intervals) + 1) {
    for (int i = 1; i <= n_; ++i) {
      v_[static_cast<std::size_t>(i)] = p.potential(r(i));
    }
    v_[0] = v_[1];
    span_ = std::min(kFineSpan, n_ / 4);
    const double hf = h_ / kFineSub;
    fine_veff_.resize(static_cast<std::size_t>(span_ * kFineSub) + 1);
    for (std::size_t j = 1; j < fine_veff_.size(); ++j) {
      const double rj = hf * static_cast<double>(j);
      fine_veff_[j] = p.potential(rj) + c_ * l_ * (l_ + 1.0) / (rj * rj);
    }
  }

  int intervals() const { return n_; }
  double step() const { return h_; }
  double r(int i) const { return h_ * i; }

  double veff(int i) const {
    const double ri = r(i);
    return v_[static_cast<std::size_t>(i)] + c_ * l_ * (l_ + 1.0) / (ri * ri);
  }

  double min_veff() const {
    double m = veff(1);
    for (int i = 2; i <= n_; ++i) {
      m = std::min(m, veff(i));
    }
    return m;
  }

  // 1 - h^2 f_i / 12 with f = (V_eff - E)/c.
  double a(int i, double e) const { return 1.0 - h_ * h_ * (veff(i) - e) / (12.0 * c_); }

  // Outward solution on [0, last]; returns its sign changes. `out` (if given)
  // receives u_0..u_last, rescaled consistently.
  int outward(double e, int last, std::vector<double>* out) const {
    std::vector<double> local;
    std::vector<double>& u = out ? *out : local;
    u.assign(static_cast<std::size_t>(last) + 1, 0.0);
    int nodes = start(e, last, u);
    for (int i = std::min(span_, last); i < last; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      const double prev = (i - 1 == 0) ? 0.0 : a(i - 1, e) * u[iu - 1];
      const double ai = a(i, e);
      u[iu + 1] = ((12.0 - 10.0 * ai) * u[iu] - prev) / a(i + 1, e);
      if (u[iu + 1] * u[iu] < 0.0) {
        ++nodes;
      }
      if (std::abs(u[iu + 1]) > kHuge) {
        const std::size_t from = out ? 0 : iu;
        for (std::size_t j = from; j <= iu + 1; ++j) {
          u[j] /= kHuge;
        }
      }
    }
    return nodes;
  }

  // Inward solution from u_n = 0 down to index `first`; u is sized n + 1.
  void inward(double e, int first, std::vector<double>& u) const {
    u.assign(static_cast<std::size_t>(n_) + 1, 0.0);
    u[static_cast<std::size_t>(n_)] = 0.0;
    u[static_cast<std::size_t>(n_) - 1] = 1e-30;
    for (int i = n_ - 1; i > first; --i) {
      const auto iu = static_cast<std::size_t>(i);
      const double ai = a(i, e);
      u[iu - 1] = ((12.0 - 10.0 * ai) * u[iu] - a(i + 1, e) * u[iu + 1]) / a(i - 1, e);
      if (std::abs(u[iu - 1]) > kHuge) {
        for (std::size_t j = iu - 1; j <= static_cast<std::size_t>(n_); ++j) {
          u[j] /= kHuge;
        }
      }
    }
  }

  // Outermost index with E above V_eff, kept away from both ends.
  int matching_index(double e) const {
    int m = 0;
    for (int i = n_; i >= 1; --i) {
      if (veff(i) < e) {
        m = i;
        break;
      }
    }
    return std::clamp(m, std::min(10, n_ / 2), n_ - 10);
  }

  // Numerov defect at the matching point after joining outward and inward.
  double defect(double e) const {
    const int m = matching_index(e);
    std::vector<double> uo;
    std::vector<double> ui;
    outward(e, m + 1, &uo);
    inward(e, m - 1, ui);
    const auto mu = static_cast<std::size_t>(m);
    const double s = uo[mu] / ui[mu];
    const double am = a(m, e);
    return (a(m + 1, e) * ui[mu + 1] * s + a(m - 1, e) * uo[mu - 1] - (12.0 - 10.0 * am) * uo[mu]) / uo[mu];
  }

  std::vector<double> assemble(double e) const {
    const int m = matching_index(e);
    std::vector<double> uo;
    std::vector<double> ui;
    outward(e, m, &uo);
    inward(e, m - 1, ui);
    const auto mu = static_cast<std::size_t>(m);
    const double s = uo[mu] / ui[mu];
    std::vector<double> u(static_cast<std::size_t>(n_) + 1);
    for (std::size_t i = 0; i <= mu; ++i) {
      u[i] = uo[i];
    }
    for (std::size_t i = mu + 1; i < u.size(); ++i) {
      u[i] = ui[i] * s;
    }
    return u;
  }

  // Zero-energy node count on [0, r_max] plus a crossing of the free
  // continuation u = A r^(l+1) + B r^-l beyond r_max.
  int threshold_count(double e) const {
    std::vector<double> u;
    int nodes = outward(e, n_, &u);
    const auto n = static_cast<std::size_t>(n_);
    const double rr = r(n_);
    const double du = (3.0 * u[n] - 4.0 * u[n - 1] + u[n - 2]) / (2.0 * h_);
    if (u[n] * (l_ * u[n] + rr * du) < 0.0) {
      ++nodes;
    }
    return nodes;
  }

private:
  // The first span_ intervals are integrated on a grid kFineSub times finer:
  // near the origin the centrifugal term or a singular V spoil the
  // coarse-step accuracy. Fills u_0..u_span and returns the nodes found.
  int start(double e, int last, std::vector<double>& u) const {
    const double hf = h_ / kFineSub;
    const int top = std::min(span_, last) * kFineSub;
    const auto fa = [&](int j) {
      return 1.0 - hf * hf * (fine_veff_[static_cast<std::size_t>(j)] - e) / (12.0 * c_);
    };
    double um = 0.0;
    double u0;
    int j0;
    if (l_ == 0) {
      u0 = hf;
      j0 = 1;
    } else {
      um = std::pow(hf, l_ + 1);
      u0 = std::pow(2.0 * hf, l_ + 1);
      j0 = 2;
    }
    int nodes = 0;
    for (int j = j0; j <= top; ++j) {
      if (j % kFineSub == 0) {
        u[static_cast<std::size_t>(j / kFineSub)] = u0;
      }
      if (j == top) {
        break;
      }
      const double prev = (j - 1 == 0) ? 0.0 : fa(j - 1) * um;
      const double next = ((12.0 - 10.0 * fa(j)) * u0 - prev) / fa(j + 1);
      if (next * u0 < 0.0) {
        ++nodes;
      }
      um = u0;
      u0 = next;
      if (std::abs(u0) > kHuge) {
        um /= kHuge;
        u0 /= kHuge;
        for (int i = 0; i <= j / kFineSub; ++i) {
          u[static_cast<std::size_t>(i)] /= kHuge;
        }
      }
    }
    return nodes;
  }

  int n_;
  double h_;
  int l_;
  double c_;
  std::vector<double> v_;
  int span_ = 0;
  std::vector<double> fine_veff_;
};

struct Layout {
  double r_max;
  int intervals;
};

Layout layout_for(double r_max, double h) {
  int n = static_cast<int>(std::ceil(r_max / h));
  n += n % 2;
  if (n > kMaxPoints) {
    throw NumericalFailure(fmt::format("oracle: grid of {} points exceeds the limit", n));
  }
  return {r_max, n};
}

double find_energy(const Numerov& s, int n, double lo, double hi, const SolverConfig& cfg) {
  // Narrow by node count, then polish on the matching defect.
  int it = 0;
  const double coarse = std::max(1e-7 * std::max(1.0, std::abs(lo)), cfg.energy_tol);
  while (hi - lo > coarse && it < cfg.max_bisections) {
    const double mid = 0.5 * (lo + hi);
    (s.outward(mid, s.intervals(), nullptr) <= n ? lo : hi) = mid;
    ++it;
  }
  double dlo = s.defect(lo);
  double dhi = s.defect(hi);
  int side = 0;
  while (hi - lo > cfg.energy_tol && it < cfg.max_bisections) {
    ++it;
    double mid;
    if (std::isfinite(dlo) && std::isfinite(dhi) && dlo * dhi < 0.0) {
      mid = (lo * dhi - hi * dlo) / (dhi - dlo);
      if (!(mid > lo && mid < hi)) {
        mid = 0.5 * (lo + hi);
      }
    } else {
      mid = 0.5 * (lo + hi);
    }
    const bool below = s.outward(mid, s.intervals(), nullptr) <= n;
    const double dm = s.defect(mid);
    if (below) {
      lo = mid;
      dlo = dm;
      if (side == -1) {
        dhi *= 0.5;
      }
      side = -1;
    } else {
      hi = mid;
      dhi = dm;
      if (side == 1) {
        dlo *= 0.5;
      }
      side = 1;
    }
    // A step that no longer moves the far end: finish with a tight bracket.
    if (hi - lo <= cfg.energy_tol) {
      break;
    }
    if (std::abs(dm) < 1e-15) {
      return mid;
    }
  }
  if (hi - lo > cfg.energy_tol) {
    throw NumericalFailure(fmt::format("oracle: energy not converged after {} iterations", it));
  }
  return 0.5 * (lo + hi);
}

double tail_fraction(const std::vector<double>& u, double h) {
  const std::size_t n = u.size();
  const std::size_t start = n - n / 10;
  double tail = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = u[i] * u[i] * h;
    total += w;
    if (i >= start) {
      tail += w;
    }
  }
  return total > 0.0 ? tail / total : 1.0;
}

RadialFunction package(const Numerov& s, std::vector<double> u, double e, QuantumNumbers q) {
  RadialFunction f;
  f.grid = uniform_grid(s.r(s.intervals()), s.intervals());
  f.values = std::move(u);
  const double nrm = std::sqrt(f.norm());
  double sign = 1.0;
  for (const double x : f.values) {
    if (x != 0.0) {
      sign = x > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& x : f.values) {
    x *= sign / nrm;
  }
  f.energy = e;
  f.q = q;
  return f;
}

RadialProblem problem_for(const PotentialModel& v) {
  validate(v);
  RadialProblem p;
  p.potential = [v](double r) { return potential(v, r); };
  p.mass = mass(v);
  if (const auto* lin = std::get_if<LinearPotential>(&v)) {
    p.length_scale = std::cbrt(1.0 / (2.0 * lin->mass * lin->slope));
  }
  if (std::holds_alternative<ExponentialPotential>(v)) {
    p.threshold = 0.0;
    p.short_range = true;
  }
  return p;
}

} // namespace

void validate(const SolverConfig& cfg) {
  if (cfg.r_max < 0.0 || !std::isfinite(cfg.r_max)) {
    throw DomainError("SolverConfig: r_max must be positive (or 0 for automatic)");
  }
  if (cfg.grid_points < 2000) {
    throw DomainError("SolverConfig: grid_points must be at least 2000");
  }
  if (!(cfg.energy_tol > 0.0) || cfg.energy_tol > 1e-10) {
    throw DomainError("SolverConfig: energy_tol must lie in (0, 1e-10]");
  }
  if (cfg.max_bisections < 1) {
    throw DomainError("SolverConfig: max_bisections must be positive");
  }
}

RadialFunction solve_radial(const RadialProblem& problem, QuantumNumbers q, const SolverConfig& cfg) {
  validate(q);
  validate(cfg);
  if (!problem.potential || !(problem.mass > 0.0)) {
    throw DomainError("solve_radial: problem needs a potential and a positive mass");
  }
  const bool automatic = cfg.r_max == 0.0;
  const double base = automatic ? 30.0 * problem.length_scale : cfg.r_max;
  const double h = base / cfg.grid_points;
  const double c = 0.5 / problem.mass;

  if (problem.threshold && problem.short_range) {
    const Layout free = layout_for(std::max(problem.free_radius, base), h);
    const Numerov z(problem, q.l, free.r_max, free.intervals);
    const int count = z.threshold_count(*problem.threshold);
    if (q.n >= count) {
      throw NoBoundState(NoBoundReason::NotFound,
                         fmt::format("no bound state with n = {}, l = {} ({} exist)", q.n, q.l, count));
    }
  }

  double r_max = base;
  for (int attempt = 0; attempt < 12; ++attempt) {
    const Layout lay = automatic ? layout_for(r_max, h) : Layout{r_max, cfg.grid_points + cfg.grid_points % 2};
    const Numerov s(problem, q.l, lay.r_max, lay.intervals);

    double lo = s.min_veff();
    double hi;
    if (problem.threshold) {
      hi = *problem.threshold;
      if (s.outward(hi, s.intervals(), nullptr) <= q.n) {
        if (!automatic) {
          throw NumericalFailure("oracle: r_max too small to hold the requested state");
        }
        r_max *= 2.0;
        continue;
      }
    } else {
      double step = std::max(1.0, std::abs(lo));
      hi = lo + step;
      int guard = 0;
      while (s.outward(hi, s.intervals(), nullptr) <= q.n) {
        lo = hi;
        step *= 2.0;
        hi += step;
        if (++guard > 200) {
          throw NoBoundState(NoBoundReason::NotFound, "oracle: energy ladder did not bracket the state");
        }
      }
    }

    const double e = find_energy(s, q.n, lo, hi, cfg);
    std::vector<double> u = s.assemble(e);

    if (automatic) {
      double need = 0.0;
      if (problem.threshold) {
        const double kappa = std::sqrt((*problem.threshold - e) / c);
        need = 20.0 / kappa;
      }
      if (need > r_max || tail_fraction(u, s.step()) > 1e-14) {
        r_max = std::max(2.0 * r_max, need * 1.05);
        continue;
      }
    }
    return package(s, std::move(u), e, q);
  }
  throw NumericalFailure("oracle: automatic cutoff did not settle");
}

RadialFunction solve_radial(const PotentialModel& v, QuantumNumbers q, const SolverConfig& cfg) {
  return solve_radial(problem_for(v), q, cfg);
}

int exponential_state_count(double depth, int l) {
  if (!(depth > 0.0) || l < 0) {
    throw DomainError("exponential_state_count: need k > 0 and l >= 0");
  }
  const RadialProblem p = problem_for(ExponentialPotential{depth});
  const Numerov z(p, l, p.free_radius, 20000);
  return z.threshold_count(0.0);
}

ObservableSet numeric_observables(const RadialFunction& f, const std::function<double(double)>& pot, double m) {
  const auto& r = f.grid;
  const auto& u = f.values;
  const std::size_t n = r.size();
  if (n < 8 || u.size() != n) {
    throw DomainError("numeric_observables: radial function too short");
  }
  std::vector<double> dens(n);
  for (std::size_t i = 0; i < n; ++i) {
    dens[i] = u[i] * u[i];
  }
  const double total = simpson(r, dens);
  const std::size_t start = n - n / 10;
  const double tail = simpson(std::span(r).subspan(start), std::span<const double>(dens).subspan(start));
  if (tail > 1e-8 * total) {
    throw QuadratureFailure(fmt::format("numeric_observables: tail mass {:.3e} beyond 0.9 r_max", tail / total));
  }

  const double h = r[1] - r[0];
  const double du0 = (-25.0 * u[0] + 48.0 * u[1] - 36.0 * u[2] + 16.0 * u[3] - 3.0 * u[4]) / (12.0 * h);

  ObservableSet obs;
  obs.provenance = Provenance::Quadrature;
  std::vector<double> y(n);
  for (const int k : {-2, -1, 1, 2, 3, 4}) {
    for (std::size_t i = 0; i < n; ++i) {
      if (r[i] == 0.0) {
        y[i] = (k == -2 && f.q.l == 0) ? du0 * du0 : 0.0;
      } else {
        y[i] = dens[i] * std::pow(r[i], k);
      }
    }
    obs.r_moments[k] = simpson(r, y) / total;
  }
  std::vector<double> y2(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dens[i] == 0.0) {
      y[i] = 0.0;
      y2[i] = 0.0;
      continue;
    }
    const double vi = pot(r[i]);
    y[i] = dens[i] * vi;
    y2[i] = dens[i] * vi * vi;
  }
  const double mv = simpson(r, y) / total;
  const double mv2 = simpson(r, y2) / total;
  const double e = f.energy;
  obs.p2 = 2.0 * m * (e - mv);
  obs.p4 = 4.0 * m * m * (e * e - 2.0 * e * mv + mv2);
  if (f.q.l == 0) {
    obs.psi0_sq = du0 * du0 / (4.0 * std::numbers::pi * total);
  }
  obs.mean_h = e;
  return obs;
}

ObservableSet numeric_observables(const RadialFunction& f, const PotentialModel& v) {
  return numeric_observables(f, [&v](double r) { return potential(v, r); }, mass(v));
}

} // namespace afm
