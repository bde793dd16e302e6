#pragma once

#include "afm/auxfield.hpp"
#include "afm/oracle.hpp"
#include "afm/potential.hpp"
#include "afm/quantum.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace afm::cli {

// family: linear | log | exp. `k` is required for exp and rejected otherwise
// (DomainError).
PotentialModel make_potential(const std::string& family, std::optional<double> k);

// aux: coulomb | quadratic.
AuxiliaryKind parse_aux(const std::string& aux);

// AfmSolution fields and the trial-state observables as one flat object.
nlohmann::ordered_json solve_record(const std::string& family, const std::string& aux, QuantumNumbers q,
                                    std::optional<double> k);

// Oracle energy, grid and quadrature observables.
nlohmann::ordered_json oracle_record(const std::string& family, QuantumNumbers q, std::optional<double> k,
                                     const SolverConfig& cfg);

// (r, psi(r)) with psi the full normalized wavefunction R(r)/sqrt(4 pi).
// aux may be "exact" (closed form for linear S-states, oracle otherwise).
// Without r_max the grid reaches the radius beyond which the density carries
// less than 1e-10 of the norm. `samples` >= 2 points including both ends.
std::vector<std::pair<double, double>> wavefunction_samples(const std::string& family, const std::string& aux,
                                                            QuantumNumbers q, std::optional<double> k,
                                                            std::optional<double> r_max, int samples);

// Reduced units of each family, printed by --help-units.
std::string units_text();

} // namespace afm::cli
