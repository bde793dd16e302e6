#pragma once

// Auxiliary field method.
//
// The potential V(r) is replaced by its tangent  nu P(r) + C(nu)  built on a
// solvable basis potential P (Coulomb -1/r or quadratic r^2). With
// K(r) = V'(r)/P'(r) and I = K^-1, the energy of the tangent Hamiltonian is
//
//     E(nu) = E_A(nu) + V(I(nu)) - nu P(I(nu)),
//
// E_A being the basis eigenvalue. The approximation is E(nu0) with nu0 the
// extremum of E; the trial state is the basis eigenstate at nu0, and the
// tangent point r0 = I(nu0) satisfies <P(r)> = P(r0).
//
// Scaling laws used for the linear family H = p^2/(2m) + a r: energies scale
// as (a^2/2m)^(1/3) and lengths as (2ma)^(-1/3) relative to H = p^2 + r.
// The logarithmic and exponential families are solved in reduced units only.

#include "afm/potential.hpp"
#include "afm/quantum.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace afm {

enum class AuxiliaryKind {
  Coulomb,   // P(r) = -1/r
  Quadratic, // P(r) = r^2
};

std::string to_string(AuxiliaryKind kind);

double basis_potential(AuxiliaryKind kind, double r);
double basis_potential_derivative(AuxiliaryKind kind, double r);

enum class BoundKind { Lower, Upper, Conditional, Unknown };

struct BoundDirection {
  BoundKind kind = BoundKind::Unknown;
  bool condition_met = false; // meaningful for Conditional only

  // True when the direction is guaranteed to be a lower bound.
  bool is_lower() const { return kind == BoundKind::Lower || (kind == BoundKind::Conditional && condition_met); }
  bool is_upper() const { return kind == BoundKind::Upper; }
};

std::string to_string(BoundDirection b);

using AuxiliaryScale = std::variant<HydrogenScale, OscillatorScale>;

struct AfmSolution {
  AuxiliaryKind kind = AuxiliaryKind::Coulomb;
  QuantumNumbers q;
  double principal_n = 0.0; // N
  double nu0 = 0.0;
  double r0 = 0.0;          // I(nu0)
  AuxiliaryScale scale = HydrogenScale{1.0};
  double energy = 0.0;      // epsilon_{n,l}
  double offset = 0.0;      // C(nu0) = V(r0) - nu0 P(r0)
  BoundDirection bound;
  std::optional<double> lambert_u0; // exponential family only

  // Tangent potential nu0 P(r) + C(nu0).
  double tangent_potential(double r) const;
};

// N = n + l + 1 (Coulomb) or 2n + l + 3/2 (Quadratic).
double principal_number(AuxiliaryKind kind, QuantumNumbers q);

// Closed-form AFM solution. Throws NoBoundState for exponential states that
// are not allowed (Lambert argument below -1/e) or whose energy is not
// negative.
AfmSolution afm_solve(const PotentialModel& v, AuxiliaryKind kind, QuantumNumbers q);

BoundDirection bound_direction(const PotentialModel& v, AuxiliaryKind kind, QuantumNumbers q);

// Linear potential, reduced units:
// (3 pi/2)^(2/3) (n + sqrt(3)/pi l + 3/4)^(2/3).
double improved_linear_energy(QuantumNumbers q);

// Depth k at which the exponential-potential AFM energy vanishes.
double critical_coupling(QuantumNumbers q, AuxiliaryKind kind);

// Basis eigenvalue E_A(nu) for H_A = p^2/(2m) + nu P(r).
double basis_energy(const PotentialModel& v, AuxiliaryKind kind, QuantumNumbers q, double nu);

// I(nu), the point where nu P'(r) = V'(r). For the exponential potential with
// a Coulomb basis K is not monotone; the branch containing `near` is used.
double tangent_point(const PotentialModel& v, AuxiliaryKind kind, double nu, double near);

// E(nu) as defined above; `near` selects the branch of I as in tangent_point.
double energy_functional(const PotentialModel& v, AuxiliaryKind kind, QuantumNumbers q, double nu, double near);

struct TangentReport {
  double value_gap = 0.0;          // |V~(r0) - V(r0)|
  double slope_gap = 0.0;          // |V~'(r0) - V'(r0)|, central difference
  double worst_sign_violation = 0.0;
  double extremality_residual = 0.0; // |nu0 dE/dnu| / |epsilon|
  bool tangency_ok = true;
  bool sign_ok = true;
  bool extremal_ok = true;
  std::vector<std::string> violations;

  bool ok() const { return tangency_ok && sign_ok && extremal_ok; }
};

// Radial factor R(r) of the AFM trial state (hydrogen-like or oscillator
// eigenfunction at the solution's scale), normalized with weight r^2.
double afm_radial(const AfmSolution& sol, double r);

// Runtime verification of an AFM solution: tangency at r0, the sign of
// V~ - V over `r_samples` against the bound classification, and stationarity
// of E(nu) at nu0. Never throws on a violation; reports it.
TangentReport tangent_check(const PotentialModel& v, AuxiliaryKind kind, const AfmSolution& sol,
                            std::span<const double> r_samples);

} // namespace afm
