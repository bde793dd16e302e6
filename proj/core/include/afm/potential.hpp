#pragma once

#include <string>
#include <variant>

namespace afm {

// H = p^2/(2m) + a r. The reduced form used throughout is m = 1/2, a = 1,
// i.e. H = p^2 + r.
struct LinearPotential {
  double mass = 0.5;
  double slope = 1.0;
};

// H = p^2/4 + ln r (reduced units only; m = 2).
struct LogarithmicPotential {};

// H = p^2 - k e^{-r} (reduced units, m = 1/2).
struct ExponentialPotential {
  double depth = 1.0; // k
};

using PotentialModel = std::variant<LinearPotential, LogarithmicPotential, ExponentialPotential>;

// Throws DomainError on non-positive parameters.
void validate(const PotentialModel& v);

// Mass m in the kinetic term p^2/(2m).
double mass(const PotentialModel& v);

// Coefficient 1/(2m) of p^2.
inline double kinetic_coefficient(const PotentialModel& v) { return 0.5 / mass(v); }

double potential(const PotentialModel& v, double r);
double potential_derivative(const PotentialModel& v, double r);

// "linear", "log" or "exp".
std::string family_name(const PotentialModel& v);

} // namespace afm
