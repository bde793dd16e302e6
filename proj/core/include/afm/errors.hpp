#pragma once

#include <stdexcept>
#include <string>

namespace afm {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// An equation has no real solution for the given inputs.
class NoSolution : public Error {
public:
  using Error::Error;
};

// Iterative scheme did not converge, or a bracket could not be found.
class NumericalFailure : public Error {
public:
  using Error::Error;
};

// Adaptive or sampled integration did not reach the requested accuracy.
class QuadratureFailure : public NumericalFailure {
public:
  using NumericalFailure::NumericalFailure;
};

// Two sampled radial functions cannot be brought onto a common support.
class GridMismatch : public Error {
public:
  using Error::Error;
};

enum class NoBoundReason {
  StateNotAllowed,   // Lambert argument below -1/e
  NonNegativeEnergy, // closed form yields epsilon >= 0
  NotFound,          // numeric solver found no state with the requested nodes
};

inline const char* to_string(NoBoundReason r) {
  switch (r) {
  case NoBoundReason::StateNotAllowed: return "state-not-allowed";
  case NoBoundReason::NonNegativeEnergy: return "non-negative-energy";
  case NoBoundReason::NotFound: return "not-found";
  }
  return "unknown";
}

class NoBoundState : public Error {
public:
  NoBoundState(NoBoundReason reason, const std::string& what)
      : Error(what), reason_(reason) {}
  NoBoundReason reason() const noexcept { return reason_; }

private:
  NoBoundReason reason_;
};

} // namespace afm
