#include "afm/auxfield.hpp"

#include "afm/errors.hpp"
#include "afm/exact.hpp"
#include "afm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace afm {

namespace {

using specfun::WBranch;

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct ExpClosedForm {
  double t;  // Lambert argument
  double w;  // W_0(t)
  double r0;
  double energy;
};

// Shared by both bases: the tangent point solves r^3 e^-r = 2 N^2 / k.
ExpClosedForm exp_closed_form(double k, double nn) {
  const double t = -std::cbrt(2.0 * nn * nn / k) / 3.0;
  if (t < -1.0 / kE) {
    throw NoBoundState(NoBoundReason::StateNotAllowed,
                       fmt::format("exponential potential: N = {} not allowed for k = {}", nn, k));
  }
  const double w = specfun::lambert_w(WBranch::Principal, t);
  const double energy = -k * std::exp(3.0 * w) * (1.0 + 1.5 * w);
  return {t, w, -3.0 * w, energy};
}

AfmSolution solve_linear(const LinearPotential& p, AuxiliaryKind kind, QuantumNumbers q) {
  const double m = p.mass;
  const double a = p.slope;
  const double nn = principal_number(kind, q);
  AfmSolution s;
  s.principal_n = nn;
  if (kind == AuxiliaryKind::Coulomb) {
    s.nu0 = std::pow(nn, 4.0 / 3.0) * std::cbrt(a) * std::pow(m, -2.0 / 3.0);
    s.r0 = std::sqrt(s.nu0 / a);
    s.scale = HydrogenScale{m * s.nu0};
  } else {
    s.nu0 = std::pow(a * a * std::sqrt(2.0 * m) / (4.0 * nn), 2.0 / 3.0);
    s.r0 = a / (2.0 * s.nu0);
    s.scale = OscillatorScale{std::sqrt(std::sqrt(2.0 * m * s.nu0))};
  }
  s.energy = std::cbrt(a * a / (2.0 * m)) * 3.0 * std::pow(nn / 2.0, 2.0 / 3.0);
  return s;
}

AfmSolution solve_log(AuxiliaryKind kind, QuantumNumbers q) {
  const double nn = principal_number(kind, q);
  AfmSolution s;
  s.principal_n = nn;
  if (kind == AuxiliaryKind::Coulomb) {
    s.nu0 = nn / std::numbers::sqrt2;
    s.r0 = s.nu0;
    s.scale = HydrogenScale{std::numbers::sqrt2 * nn};
  } else {
    s.nu0 = 1.0 / (nn * nn);
    s.r0 = 1.0 / std::sqrt(2.0 * s.nu0);
    s.scale = OscillatorScale{std::sqrt(2.0 / nn)};
  }
  s.energy = std::log(std::sqrt(kE / 2.0) * nn);
  return s;
}

AfmSolution solve_exp(const ExponentialPotential& p, AuxiliaryKind kind, QuantumNumbers q) {
  const double k = p.depth;
  const double nn = principal_number(kind, q);
  const ExpClosedForm cf = exp_closed_form(k, nn);
  if (cf.energy >= 0.0) {
    throw NoBoundState(NoBoundReason::NonNegativeEnergy,
                       fmt::format("exponential potential: epsilon = {} >= 0 for N = {}, k = {}", cf.energy, nn, k));
  }
  AfmSolution s;
  s.principal_n = nn;
  s.r0 = cf.r0;
  s.energy = cf.energy;
  const double t3 = cf.t * cf.t * cf.t;
  if (kind == AuxiliaryKind::Coulomb) {
    const double eta = 4.5 * k * t3 / cf.w;
    s.scale = HydrogenScale{eta};
    s.nu0 = 2.0 * eta; // m = 1/2
    const double u0 = specfun::solve_w_power(-nn * nn / (4.0 * k), 2.0, WBranch::Principal);
    s.lambert_u0 = u0;
  } else {
    const double lam = std::sqrt(std::sqrt(-(k / 6.0) * t3 / std::pow(cf.w, 4)));
    s.scale = OscillatorScale{lam};
    s.nu0 = std::pow(lam, 4); // (2 m nu)^(1/4) with m = 1/2
    const double u0 = specfun::solve_w_power(std::sqrt(std::sqrt(2.0 * nn * nn / k)), -0.25, WBranch::Principal);
    s.lambert_u0 = u0;
  }
  return s;
}

} // namespace

std::string to_string(AuxiliaryKind kind) { return kind == AuxiliaryKind::Coulomb ? "coulomb" : "quadratic"; }

double basis_potential(AuxiliaryKind kind, double r) { return kind == AuxiliaryKind::Coulomb ? -1.0 / r : r * r; }

double basis_potential_derivative(AuxiliaryKind kind, double r) {
  return kind == AuxiliaryKind::Coulomb ? 1.0 / (r * r) : 2.0 * r;
}

std::string to_string(BoundDirection b) {
  switch (b.kind) {
  case BoundKind::Lower: return "lower";
  case BoundKind::Upper: return "upper";
  case BoundKind::Conditional: return b.condition_met ? "conditional-met" : "conditional-unmet";
  case BoundKind::Unknown: break;
  }
  return "unknown";
}

double AfmSolution::tangent_potential(double r) const { return nu0 * basis_potential(kind, r) + offset; }

double principal_number(AuxiliaryKind kind, QuantumNumbers q) {
  validate(q);
  return kind == AuxiliaryKind::Coulomb ? q.n + q.l + 1.0 : 2.0 * q.n + q.l + 1.5;
}

AfmSolution afm_solve(const PotentialModel& v, AuxiliaryKind kind, QuantumNumbers q) {
  validate(v);
  validate(q);
  AfmSolution s = std::visit(overloaded{
                                 [&](const LinearPotential& p) { return solve_linear(p, kind, q); },
                                 [&](const LogarithmicPotential&) { return solve_log(kind, q); },
                                 [&](const ExponentialPotential& p) { return solve_exp(p, kind, q); },
                             },
                             v);
  s.kind = kind;
  s.q = q;
  s.offset = potential(v, s.r0) - s.nu0 * basis_potential(kind, s.r0);
  s.bound = bound_direction(v, kind, q);
  return s;
}

BoundDirection bound_direction(const PotentialModel& v, AuxiliaryKind kind, QuantumNumbers q) {
  if (kind == AuxiliaryKind::Quadratic) {
    return {BoundKind::Upper, false};
  }
  if (const auto* e = std::get_if<ExponentialPotential>(&v)) {
    const double nn = principal_number(kind, q);
    return {BoundKind::Conditional, nn <= std::sqrt(e->depth / (2.0 * kE))};
  }
  return {BoundKind::Lower, false};
}

double improved_linear_energy(QuantumNumbers q) {
  validate(q);
  const double nn = q.n + std::sqrt(3.0) / kPi * q.l + 0.75;
  return std::pow(1.5 * kPi * nn, 2.0 / 3.0);
}

double critical_coupling(QuantumNumbers q, AuxiliaryKind kind) {
  const double nn = principal_number(kind, q);
  // Disallowed states count as positive energy: epsilon(k) then changes sign
  // exactly once on the bracket.
  const auto eps = [nn](double k) {
    const double t = -std::cbrt(2.0 * nn * nn / k) / 3.0;
    if (t < -1.0 / kE) {
      return 1.0;
    }
    return exp_closed_form(k, nn).energy;
  };
  double lo = 1e-6;
  double hi = 1e6;
  if (!(eps(lo) > 0.0) || !(eps(hi) < 0.0)) {
    throw NumericalFailure("critical_coupling: no sign change in [1e-6, 1e6]");
  }
  for (int i = 0; i < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    const double mid = std::sqrt(lo * hi);
    (eps(mid) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double basis_energy(const PotentialModel& v, AuxiliaryKind kind, QuantumNumbers q, double nu) {
  const double m = mass(v);
  const double nn = principal_number(kind, q);
  if (kind == AuxiliaryKind::Coulomb) {
    return -m * nu * nu / (2.0 * nn * nn);
  }
  return std::sqrt(2.0 * nu / m) * nn;
}

double tangent_point(const PotentialModel& v, AuxiliaryKind kind, double nu, double near) {
  if (!(nu > 0.0)) {
    throw DomainError("tangent_point: nu must be positive");
  }
  const bool coulomb = kind == AuxiliaryKind::Coulomb;
  return std::visit(overloaded{
                        [&](const LinearPotential& p) {
                          return coulomb ? std::sqrt(nu / p.slope) : p.slope / (2.0 * nu);
                        },
                        [&](const LogarithmicPotential&) { return coulomb ? nu : 1.0 / std::sqrt(2.0 * nu); },
                        [&](const ExponentialPotential& p) {
                          if (!coulomb) {
                            return specfun::lambert_w(WBranch::Principal, p.depth / (2.0 * nu));
                          }
                          // r^2 e^-r = nu/k has two roots, split at r = 2.
                          const double x = -0.5 * std::sqrt(nu / p.depth);
                          const WBranch b = near <= 2.0 ? WBranch::Principal : WBranch::Lower;
                          return -2.0 * specfun::lambert_w(b, x);
                        },
                    },
                    v);
}

double energy_functional(const PotentialModel& v, AuxiliaryKind kind, QuantumNumbers q, double nu, double near) {
  const double r = tangent_point(v, kind, nu, near);
  return basis_energy(v, kind, q, nu) + potential(v, r) - nu * basis_potential(kind, r);
}

double afm_radial(const AfmSolution& sol, double r) {
  if (const auto* hy = std::get_if<HydrogenScale>(&sol.scale)) {
    return exact::HydrogenState(*hy, sol.q).radial(r);
  }
  return exact::OscillatorState(std::get<OscillatorScale>(sol.scale), sol.q).radial(r);
}

TangentReport tangent_check(const PotentialModel& v, AuxiliaryKind kind, const AfmSolution& sol,
                            std::span<const double> r_samples) {
  TangentReport rep;
  const double r0 = sol.r0;

  const double v0 = potential(v, r0);
  rep.value_gap = std::abs(sol.tangent_potential(r0) - v0);
  // five-point central difference
  const double h = 1e-3 * r0;
  const auto d5 = [h, r0](auto&& f) {
    return (8.0 * (f(r0 + h) - f(r0 - h)) - (f(r0 + 2.0 * h) - f(r0 - 2.0 * h))) / (12.0 * h);
  };
  const double dt = d5([&](double r) { return sol.tangent_potential(r); });
  const double dv = d5([&](double r) { return potential(v, r); });
  rep.slope_gap = std::abs(dt - dv);
  if (rep.value_gap > 1e-10 * std::max(1.0, std::abs(v0))) {
    rep.tangency_ok = false;
    rep.violations.push_back(fmt::format("value gap {:.3e} at r0 = {}", rep.value_gap, r0));
  }
  if (rep.slope_gap > 1e-8 * std::max(1.0, std::abs(dv))) {
    rep.tangency_ok = false;
    rep.violations.push_back(fmt::format("slope gap {:.3e} at r0 = {}", rep.slope_gap, r0));
  }

  // +1: tangent must lie above V, -1: below, 0: no claim.
  int expected = 0;
  if (sol.bound.is_upper()) {
    expected = 1;
  } else if (sol.bound.is_lower()) {
    expected = -1;
  }
  if (expected != 0) {
    for (const double r : r_samples) {
      if (!(r > 0.0)) {
        continue;
      }
      const double vr = potential(v, r);
      const double diff = sol.tangent_potential(r) - vr;
      const double tol = 1e-12 * std::max({1.0, std::abs(vr), std::abs(sol.nu0 * basis_potential(kind, r))});
      const double violation = expected > 0 ? -diff : diff;
      if (violation > tol) {
        rep.sign_ok = false;
        if (violation > rep.worst_sign_violation) {
          rep.worst_sign_violation = violation;
        }
      }
    }
    if (!rep.sign_ok) {
      rep.violations.push_back(fmt::format("tangent on the wrong side of V by up to {:.3e}", rep.worst_sign_violation));
    }
  }

  const double nu = sol.nu0;
  const double dnu = 1e-4 * nu;
  const double ep = energy_functional(v, kind, sol.q, nu + dnu, r0);
  const double em = energy_functional(v, kind, sol.q, nu - dnu, r0);
  const double slope = (ep - em) / (2.0 * dnu);
  rep.extremality_residual = std::abs(nu * slope) / std::max(std::abs(sol.energy), 1e-300);
  if (rep.extremality_residual > 1e-6) {
    rep.extremal_ok = false;
    rep.violations.push_back(fmt::format("dE/dnu at nu0 not zero: relative residual {:.3e}", rep.extremality_residual));
  }
  return rep;
}

} // namespace afm
