#pragma once

// Numeric radial eigensolver used as the reference for every comparison.
//
//   -c u'' + [V(r) + c l(l+1)/r^2] u = E u,   c = 1/(2m),  u(0) = 0.
//
// Numerov integration on a uniform grid. The eigenvalue with n nodes is
// bracketed by counting nodes of the outward solution, narrowed by bisection
// and polished by regula falsi on the Numerov matching defect at the outer
// classical turning point. The wavefunction is assembled from the outward
// solution inside that point and an inward solution outside it.

#include "afm/observables_set.hpp"
#include "afm/potential.hpp"
#include "afm/quantum.hpp"
#include "afm/radial.hpp"

#include <functional>
#include <optional>

namespace afm {

struct SolverConfig {
  double r_max = 0.0; // 0 selects the automatic cutoff (extended as needed)
  int grid_points = 20000;
  double energy_tol = 1e-11;
  int max_bisections = 200;
};

void validate(const SolverConfig& cfg);

// A radial problem not tied to one of the three families.
struct RadialProblem {
  std::function<double(double)> potential;
  double mass = 0.5;
  std::optional<double> threshold; // continuum edge V(inf); empty when confining
  double length_scale = 1.0;       // sets the automatic cutoff, 30 x length_scale
  // Below this radius V is negligible (only used with a threshold): the
  // zero-energy solution is continued analytically beyond it to count states.
  double free_radius = 60.0;
  bool short_range = false;
};

RadialFunction solve_radial(const RadialProblem& problem, QuantumNumbers q, const SolverConfig& cfg = {});

// Throws NoBoundState(NotFound) when the exponential well has no state with
// n nodes, NumericalFailure when the iteration does not settle.
RadialFunction solve_radial(const PotentialModel& v, QuantumNumbers q, const SolverConfig& cfg = {});

// Number of bound states of angular momentum l in the exponential well.
int exponential_state_count(double depth, int l);

// <r^k> for k in {-2,-1,1,2,3,4}, <p^2> = 2m(E - <V>),
// <p^4> = 4m^2 (E^2 - 2E<V> + <V^2>), |psi(0)|^2 = u'(0)^2/(4 pi) for l = 0,
// <H> = E. Throws QuadratureFailure when more than 1e-8 of the probability
// sits in the outer tenth of the grid.
ObservableSet numeric_observables(const RadialFunction& f, const PotentialModel& v);

// Same, for an arbitrary potential.
ObservableSet numeric_observables(const RadialFunction& f, const std::function<double(double)>& potential,
                                  double mass);

} // namespace afm
