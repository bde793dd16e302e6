#include "afm/potential.hpp"

#include "afm/errors.hpp"

#include <cmath>

namespace afm {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
} // namespace

void validate(const PotentialModel& v) {
  std::visit(overloaded{
                 [](const LinearPotential& p) {
                   if (!(p.mass > 0.0) || !(p.slope > 0.0)) {
                     throw DomainError("linear potential needs mass > 0 and slope > 0");
                   }
                 },
                 [](const LogarithmicPotential&) {},
                 [](const ExponentialPotential& p) {
                   if (!(p.depth > 0.0)) {
                     throw DomainError("exponential potential needs k > 0");
                   }
                 },
             },
             v);
}

double mass(const PotentialModel& v) {
  return std::visit(overloaded{
                        [](const LinearPotential& p) { return p.mass; },
                        [](const LogarithmicPotential&) { return 2.0; },
                        [](const ExponentialPotential&) { return 0.5; },
                    },
                    v);
}

double potential(const PotentialModel& v, double r) {
  return std::visit(overloaded{
                        [r](const LinearPotential& p) { return p.slope * r; },
                        [r](const LogarithmicPotential&) { return std::log(r); },
                        [r](const ExponentialPotential& p) { return -p.depth * std::exp(-r); },
                    },
                    v);
}

double potential_derivative(const PotentialModel& v, double r) {
  return std::visit(overloaded{
                        [](const LinearPotential& p) { return p.slope; },
                        [r](const LogarithmicPotential&) { return 1.0 / r; },
                        [r](const ExponentialPotential& p) { return p.depth * std::exp(-r); },
                    },
                    v);
}

std::string family_name(const PotentialModel& v) {
  return std::visit(overloaded{
                        [](const LinearPotential&) { return std::string("linear"); },
                        [](const LogarithmicPotential&) { return std::string("log"); },
                        [](const ExponentialPotential&) { return std::string("exp"); },
                    },
                    v);
}

} // namespace afm
