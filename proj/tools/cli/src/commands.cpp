#include "afm/cli/commands.hpp"

#include "afm/errors.hpp"
#include "afm/exact.hpp"
#include "afm/observables.hpp"
#include "afm/radial.hpp"

#include <fmt/format.h>

#include <cmath>
#include <functional>
#include <numbers>

namespace afm::cli {

namespace {

void put_observables(nlohmann::ordered_json& j, const ObservableSet& obs) {
  static constexpr std::pair<int, const char*> kMoments[] = {
      {-2, "mean_r_inv2"}, {-1, "mean_r_inv"}, {1, "mean_r"}, {2, "mean_r2"}, {3, "mean_r3"}, {4, "mean_r4"},
  };
  for (const auto& [k, name] : kMoments) {
    if (obs.has_moment(k)) {
      j[name] = obs.r(k);
    }
  }
  j["mean_p2"] = obs.p2;
  j["mean_p4"] = obs.p4;
  if (obs.psi0_sq) {
    j["psi0_sq"] = *obs.psi0_sq;
  }
  if (obs.mean_h) {
    j["mean_h"] = *obs.mean_h;
  }
}

void put_header(nlohmann::ordered_json& j, const std::string& family, QuantumNumbers q, std::optional<double> k) {
  j["family"] = family;
  j["n"] = q.n;
  j["l"] = q.l;
  if (k) {
    j["k"] = *k;
  }
}

// Radius beyond which at most `tail` of int u^2 dr remains.
double cutoff_radius(const std::function<double(double)>& u, double r_far, double tail) {
  constexpr int n = 20000;
  const std::vector<double> grid = uniform_grid(r_far, n);
  std::vector<double> w(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = u(grid[i]);
    w[i] = x * x;
  }
  const double total = simpson(grid, w);
  double acc = 0.0;
  const double h = grid[1] - grid[0];
  for (std::size_t i = grid.size() - 1; i > 0; --i) {
    acc += 0.5 * h * (w[i] + w[i - 1]);
    if (acc > tail * total) {
      return grid[i];
    }
  }
  return r_far;
}

} // namespace

PotentialModel make_potential(const std::string& family, std::optional<double> k) {
  if (family == "exp") {
    if (!k) {
      throw DomainError("family 'exp' needs --k");
    }
    PotentialModel v = ExponentialPotential{*k};
    validate(v);
    return v;
  }
  if (k) {
    throw DomainError(fmt::format("--k applies to family 'exp' only, not '{}'", family));
  }
  if (family == "linear") {
    return LinearPotential{};
  }
  if (family == "log") {
    return LogarithmicPotential{};
  }
  throw DomainError(fmt::format("unknown family '{}' (expected linear, log or exp)", family));
}

AuxiliaryKind parse_aux(const std::string& aux) {
  if (aux == "coulomb") {
    return AuxiliaryKind::Coulomb;
  }
  if (aux == "quadratic") {
    return AuxiliaryKind::Quadratic;
  }
  throw DomainError(fmt::format("unknown auxiliary potential '{}' (expected coulomb or quadratic)", aux));
}

nlohmann::ordered_json solve_record(const std::string& family, const std::string& aux, QuantumNumbers q,
                                    std::optional<double> k) {
  validate(q);
  const PotentialModel v = make_potential(family, k);
  const AfmSolution sol = afm_solve(v, parse_aux(aux), q);

  nlohmann::ordered_json j;
  put_header(j, family, q, k);
  j["aux"] = aux;
  j["principal_n"] = sol.principal_n;
  j["nu0"] = sol.nu0;
  j["r0"] = sol.r0;
  if (const auto* hy = std::get_if<HydrogenScale>(&sol.scale)) {
    j["eta"] = hy->eta;
  } else {
    j["lambda"] = std::get<OscillatorScale>(sol.scale).lambda;
  }
  j["energy"] = sol.energy;
  j["offset"] = sol.offset;
  j["bound"] = to_string(sol.bound);
  if (sol.lambert_u0) {
    j["lambert_u0"] = *sol.lambert_u0;
  }
  put_observables(j, afm_observable_set(v, sol, q));
  return j;
}

nlohmann::ordered_json oracle_record(const std::string& family, QuantumNumbers q, std::optional<double> k,
                                     const SolverConfig& cfg) {
  validate(q);
  const PotentialModel v = make_potential(family, k);
  const RadialFunction f = solve_radial(v, q, cfg);
  nlohmann::ordered_json j;
  put_header(j, family, q, k);
  j["energy"] = f.energy;
  j["r_max"] = f.r_max();
  j["grid_points"] = f.grid.size();
  j["nodes"] = f.nodes();
  put_observables(j, numeric_observables(f, v));
  return j;
}

std::vector<std::pair<double, double>> wavefunction_samples(const std::string& family, const std::string& aux,
                                                            QuantumNumbers q, std::optional<double> k,
                                                            std::optional<double> r_max, int samples) {
  validate(q);
  if (samples < 2) {
    throw DomainError("--samples must be at least 2");
  }
  if (r_max && !(*r_max > 0.0)) {
    throw DomainError("--r-max must be positive");
  }
  const PotentialModel v = make_potential(family, k);

  std::function<double(double)> radial;
  double r_far = 0.0;
  if (aux == "exact") {
    if (std::holds_alternative<LinearPotential>(v) && q.l == 0) {
      const auto& lin = std::get<LinearPotential>(v);
      const exact::LinearSState s(lin.mass, lin.slope, q.n);
      radial = [s](double r) { return s.radial(r); };
      r_far = 40.0 * exact::linear_s_observables(lin.mass, lin.slope, q.n).r(1);
    } else {
      auto f = std::make_shared<RadialFunction>(solve_radial(v, q));
      radial = [f](double r) { return f->radial(r); };
      r_far = f->r_max();
    }
  } else {
    const AfmSolution sol = afm_solve(v, parse_aux(aux), q);
    radial = [sol](double r) { return afm_radial(sol, r); };
    r_far = 40.0 * afm_observable_set(v, sol, q).r(1);
  }

  const double top = r_max ? *r_max : cutoff_radius([&radial](double r) { return r * radial(r); }, r_far, 1e-10);
  const double inv_sqrt_4pi = 0.5 / std::sqrt(std::numbers::pi);
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double r = top * i / (samples - 1);
    out.emplace_back(r, radial(r) * inv_sqrt_4pi);
  }
  return out;
}

std::string units_text() {
  return "Reduced units (hbar = 1):\n"
         "  linear   H = p^2 + r              (2m = 1, slope a = 1)\n"
         "  log      H = p^2/4 + ln r         (m = 2)\n"
         "  exp      H = p^2 - k exp(-r)      (2m = 1, depth k from --k)\n"
         "Lengths are in the unit of r above and energies in the unit of H.\n"
         "JSON keys:\n"
         "  energy, offset        energy units\n"
         "  nu0                   coupling of nu P(r): energy x length (coulomb), energy / length^2 (quadratic)\n"
         "  r0, mean_r, r_max     length\n"
         "  mean_rK               <r^K>, length^K (mean_r_inv = <1/r>, mean_r_inv2 = <1/r^2>)\n"
         "  eta, lambda           inverse length (scale of the trial state)\n"
         "  mean_p2, mean_p4      <p^2>, <p^4>, inverse length squared and to the fourth\n"
         "  psi0_sq               |psi(0)|^2, inverse length cubed\n"
         "  mean_h                <H> in the trial (or oracle) state, energy units\n"
         "  psi (wavefunction)    R(r)/sqrt(4 pi), normalized as int 4 pi r^2 psi^2 dr = 1\n"
         "Table ratios and overlaps are dimensionless.\n";
}

} // namespace afm::cli
