#include "afm/observables.hpp"

#include "afm/errors.hpp"
#include "afm/exact.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

namespace afm {

namespace {

ObservableSet basis_observables(const AfmSolution& sol, QuantumNumbers q) {
  if (const auto* hy = std::get_if<HydrogenScale>(&sol.scale)) {
    return exact::hydrogen_observables(*hy, q);
  }
  return exact::oscillator_observables(std::get<OscillatorScale>(sol.scale), q);
}

template <class F>
double integrate_density(F&& weight, const AfmSolution& sol, const char* what) {
  std::function<double(double)> radial;
  if (const auto* hy = std::get_if<HydrogenScale>(&sol.scale)) {
    radial = [st = exact::HydrogenState(*hy, sol.q)](double r) { return st.radial(r); };
  } else {
    radial = [st = exact::OscillatorState(std::get<OscillatorScale>(sol.scale), sol.q)](double r) {
      return st.radial(r);
    };
  }
  const auto integrand = [&](double r) {
    if (r <= 0.0) {
      return 0.0;
    }
    const double rr = radial(r) * r;
    return rr == 0.0 ? 0.0 : rr * rr * weight(r);
  };
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, std::numeric_limits<double>::infinity(), 20, 1e-13, &error, &l1);
  if (!std::isfinite(value) || error > 1e-9 * std::max(l1, std::numeric_limits<double>::min())) {
    throw QuadratureFailure(fmt::format("{}: adaptive quadrature error {:.3e} (L1 {:.3e})", what, error, l1));
  }
  return value;
}

} // namespace

ObservableSet afm_observable_set(const PotentialModel& v, const AfmSolution& sol, QuantumNumbers q) {
  ObservableSet obs = basis_observables(sol, q);
  obs.mean_h = mean_hamiltonian(v, sol, q);
  return obs;
}

PotentialMoments trial_potential_moments(const PotentialModel& v, const AfmSolution& sol) {
  PotentialMoments pm;
  pm.v = integrate_density([&v](double r) { return potential(v, r); }, sol, "<V>");
  pm.v2 = integrate_density(
      [&v](double r) {
        const double x = potential(v, r);
        return x * x;
      },
      sol, "<V^2>");
  return pm;
}

double mean_hamiltonian(const PotentialModel& v, const AfmSolution& sol, QuantumNumbers q) {
  const ObservableSet basis = basis_observables(sol, q);
  const double kinetic = basis.p2 / (2.0 * mass(v));
  if (const auto* lin = std::get_if<LinearPotential>(&v)) {
    return kinetic + lin->slope * basis.r(1);
  }
  return kinetic + integrate_density([&v](double r) { return potential(v, r); }, sol, "mean_hamiltonian");
}

std::map<int, double> power_law_moments(double lambda_exp, double a, double m, double energy, QuantumNumbers q,
                                        int s_max, const std::map<int, double>& seeds) {
  validate(q);
  if (lambda_exp == 0.0 || std::trunc(lambda_exp) != lambda_exp) {
    throw DomainError("power_law_moments: lambda must be a non-zero integer");
  }
  if (!(m > 0.0) || s_max < 0) {
    throw DomainError("power_law_moments: need m > 0 and s_max >= 0");
  }
  const int lam = static_cast<int>(lambda_exp);
  const double sg = lam > 0 ? 1.0 : -1.0;
  const double ll = q.centrifugal();
  std::map<int, double> mom = seeds;
  mom[0] = 1.0;

  const auto get = [&](int k, int s) {
    const auto it = mom.find(k);
    if (it == mom.end()) {
      throw DomainError(fmt::format("power_law_moments: <r^{}> needed at s = {} but not seeded", k, s));
    }
    return it->second;
  };

  for (int s = 0; s <= s_max; ++s) {
    const double c_s = 2.0 * (s + 1) * energy;
    const double c_lam = -sg * a * (2.0 * s + lam + 2.0);
    const double c_low = s / (4.0 * m) * (static_cast<double>(s) * s - 1.0 - 4.0 * ll);
    // Solve for the highest-index moment that is still unknown.
    const int k_lam = s + lam;
    const int target = lam > 0 ? k_lam : (s == 0 ? k_lam : s);
    double rest = 0.0;
    double pivot = 0.0;
    const auto add = [&](int k, double coef) {
      if (k == target) {
        pivot += coef;
      } else if (coef != 0.0) {
        rest += coef * get(k, s);
      }
    };
    add(s, c_s);
    add(k_lam, c_lam);
    add(s - 2, c_low);
    if (pivot == 0.0) {
      if (mom.contains(target)) {
        continue;
      }
      throw DomainError(fmt::format("power_law_moments: recurrence does not determine <r^{}>", target));
    }
    mom[target] = -rest / pivot;
  }
  return mom;
}

MomentumMoments p2_p4_from_potential(double energy, double mean_v, double mean_v2, double m) {
  return {2.0 * m * (energy - mean_v), 4.0 * m * m * (energy * energy - 2.0 * energy * mean_v + mean_v2)};
}

EckartBounds eckart_bound(const EckartInput& in) {
  EckartBounds out;
  if (in.e0 && in.e1) {
    const double den = *in.e1 - *in.e0;
    if (den == 0.0) {
      throw DomainError("eckart_bound: E1 - E0 vanishes");
    }
    out.b_e = (*in.e1 - in.h_trial) / den;
  }
  if (in.e1_lower && in.e1_upper && in.e0_lower) {
    const double den = *in.e1_upper - *in.e0_lower;
    if (den == 0.0) {
      throw DomainError("eckart_bound: E1^U - E0^L vanishes");
    }
    out.b_e_prime = (*in.e1_lower - in.h_trial) / den;
  }
  return out;
}

double psi0_from_force(double m, double mean_vprime) { return m * mean_vprime / (2.0 * std::numbers::pi); }

} // namespace afm
