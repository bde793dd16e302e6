#pragma once

#include "afm/errors.hpp"

namespace afm {

// Radial quantum number n and orbital angular momentum l.
struct QuantumNumbers {
  int n = 0;
  int l = 0;

  // L = l(l+1)
  double centrifugal() const { return static_cast<double>(l) * (l + 1); }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

inline void validate(QuantumNumbers q) {
  if (q.n < 0 || q.l < 0) {
    throw DomainError("quantum numbers must be non-negative");
  }
}

// Inverse-length scale of a hydrogen-like state, eta = m nu.
struct HydrogenScale {
  double eta;
};

// Inverse-length scale of an oscillator state, lambda = (2 m nu)^(1/4).
struct OscillatorScale {
  double lambda;
};

} // namespace afm
