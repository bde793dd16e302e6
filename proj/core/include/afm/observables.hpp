#pragma once

#include "afm/auxfield.hpp"
#include "afm/observables_set.hpp"
#include "afm/potential.hpp"
#include "afm/quantum.hpp"

#include <map>
#include <optional>

namespace afm {

// Observables of the AFM trial state: the hydrogen-like or oscillator moment
// set at the solution's scale, with <H> filled in.
ObservableSet afm_observable_set(const PotentialModel& v, const AfmSolution& sol, QuantumNumbers q);

// <H> in the trial state. Linear family: <p^2>/2m + a<r> in closed form;
// otherwise <p^2>/2m + <V> with <V> from adaptive Gauss-Kronrod quadrature.
// Throws QuadratureFailure when the quadrature misses 1e-9 relative accuracy.
double mean_hamiltonian(const PotentialModel& v, const AfmSolution& sol, QuantumNumbers q);

// <V> and <V^2> of the trial state by adaptive quadrature.
struct PotentialMoments {
  double v = 0.0;
  double v2 = 0.0;
};
PotentialMoments trial_potential_moments(const PotentialModel& v, const AfmSolution& sol);

// Moments <r^s> of an eigenstate of p^2/2m + sgn(lambda) a r^lambda with
// energy E, from the virial recurrence
//
//   2(s+1) E <r^s> - sgn(lambda) a (2s+lambda+2) <r^(s+lambda)>
//       + s/(4m) (s^2 - 1 - 4l(l+1)) <r^(s-2)> = 0,   s = 0..s_max.
//
// <r^0> = 1 is always known; `seeds` supplies any other moment the chain
// needs (e.g. <r^-1> for l > 0 when lambda = 1). Throws DomainError for a
// non-integer lambda, a missing seed, or a vanishing pivot.
std::map<int, double> power_law_moments(double lambda_exp, double a, double m, double energy, QuantumNumbers q,
                                        int s_max, const std::map<int, double>& seeds = {});

struct MomentumMoments {
  double p2 = 0.0;
  double p4 = 0.0;
};

// <p^2> = 2m(E - <V>), <p^4> = 4m^2(E^2 - 2E<V> + <V^2>).
MomentumMoments p2_p4_from_potential(double energy, double mean_v, double mean_v2, double m);

struct EckartInput {
  std::optional<double> e0;       // exact ground energy
  std::optional<double> e1;       // exact first excited energy
  std::optional<double> e1_lower; // lower bound on E_1
  std::optional<double> e1_upper; // upper bound on E_1
  std::optional<double> e0_lower; // lower bound on E_0
  double h_trial = 0.0;           // <phi|H|phi>
};

struct EckartBounds {
  std::optional<double> b_e;       // (E_1 - <H>)/(E_1 - E_0)
  std::optional<double> b_e_prime; // (E_1^L - <H>)/(E_1^U - E_0^L)
};

// Lower bounds on the squared overlap with the ground state. Negative values
// are vacuous and returned unchanged. DomainError on a zero denominator.
EckartBounds eckart_bound(const EckartInput& in);

// |psi(0)|^2 = m <V'(r)> / (2 pi) for an S-state.
double psi0_from_force(double m, double mean_vprime);

} // namespace afm
