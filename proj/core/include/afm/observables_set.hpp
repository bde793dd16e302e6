#pragma once

#include "afm/errors.hpp"

#include <map>
#include <optional>
#include <string>

namespace afm {

enum class Provenance { Analytic, Quadrature };

// Mean values of a single state. Units follow the Hamiltonian the state was
// computed for.
struct ObservableSet {
  std::map<int, double> r_moments; // k -> <r^k>
  double p2 = 0.0;                 // <p^2>
  double p4 = 0.0;                 // <p^4>
  std::optional<double> psi0_sq;   // |psi(0)|^2, S-states only
  std::optional<double> mean_h;    // <H>
  Provenance provenance = Provenance::Analytic;

  bool has_moment(int k) const { return r_moments.contains(k); }

  double r(int k) const {
    const auto it = r_moments.find(k);
    if (it == r_moments.end()) {
      throw DomainError("moment <r^" + std::to_string(k) + "> not available");
    }
    return it->second;
  }
};

} // namespace afm
