#pragma once

// Closed-form reference systems: S-states of the linear potential (Airy),
// hydrogen-like states and harmonic-oscillator states.
//
// Radial functions returned here are reduced to their radial factor R(r),
// normalized as  int_0^inf R(r)^2 r^2 dr = 1.  Angular parts are dropped.

#include "afm/observables_set.hpp"
#include "afm/quantum.hpp"

namespace afm::exact {

// ---------------------------------------------------------------------------
// Linear potential H = p^2/(2m) + a r, l = 0.

class LinearSState {
public:
  LinearSState(double mass, double slope, int n);

  int n() const { return n_; }
  double energy() const { return energy_; }
  double zero() const { return zero_; } // alpha_n < 0

  // Full wavefunction psi_{n0}(r) including the 1/sqrt(4 pi) angular factor.
  double psi(double r) const;
  // Radial factor R(r) = sqrt(4 pi) psi(r).
  double radial(double r) const;
  double operator()(double r) const { return radial(r); }

private:
  double mass_;
  double slope_;
  int n_;
  double zero_;
  double energy_;
  double k_;    // (2 m a)^(1/3)
  double norm_; // (2 m a)^(1/6) / |Ai'(alpha_n)|
};

LinearSState linear_s_state(double mass, double slope, int n);

// <r^k> for k = 1..4, <p^2>, <p^4>, |psi(0)|^2 and the energy as mean_h.
ObservableSet linear_s_observables(double mass, double slope, int n);

// ---------------------------------------------------------------------------
// Hydrogen-like H = p^2/(2m) - nu/r; eta = m nu.

class HydrogenState {
public:
  HydrogenState(HydrogenScale scale, QuantumNumbers q);

  HydrogenScale scale() const { return scale_; }
  QuantumNumbers quantum_numbers() const { return q_; }
  double principal() const { return q_.n + q_.l + 1.0; }
  double radial(double r) const;
  double operator()(double r) const { return radial(r); }

private:
  HydrogenScale scale_;
  QuantumNumbers q_;
  double gamma_;
  double norm_;
};

struct HydrogenSolution {
  double energy;
  HydrogenState state;
};

HydrogenSolution hydrogen_state(double mass, double coupling, QuantumNumbers q);

// Closed-form moments <r^k> (k = -2, -1, 1..4), <p^2>, <p^4>, and |psi(0)|^2
// for l = 0.
ObservableSet hydrogen_observables(HydrogenScale scale, QuantumNumbers q);

// <r^k> from the binomial double sum; valid for k >= -(2l+2).
double hydrogen_moment(HydrogenScale scale, QuantumNumbers q, int k);

// ---------------------------------------------------------------------------
// Harmonic oscillator H = p^2/(2m) + nu r^2; lambda = (2 m nu)^(1/4).

class OscillatorState {
public:
  OscillatorState(OscillatorScale scale, QuantumNumbers q);

  OscillatorScale scale() const { return scale_; }
  QuantumNumbers quantum_numbers() const { return q_; }
  double principal() const { return 2.0 * q_.n + q_.l + 1.5; }
  double radial(double r) const;
  double operator()(double r) const { return radial(r); }

private:
  OscillatorScale scale_;
  QuantumNumbers q_;
  double norm_;
};

struct OscillatorSolution {
  double energy;
  OscillatorState state;
};

OscillatorSolution oscillator_state(double mass, double strength, QuantumNumbers q);

ObservableSet oscillator_observables(OscillatorScale scale, QuantumNumbers q);

// <r^k> from the Gamma-function double sum; DomainError for k <= -(2l+3).
double oscillator_moment(OscillatorScale scale, QuantumNumbers q, int k);

} // namespace afm::exact
