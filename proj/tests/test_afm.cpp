#include "afm/auxfield.hpp"
#include "afm/errors.hpp"
#include "afm/exact.hpp"
#include "afm/observables.hpp"
#include "afm/oracle.hpp"
#include "afm/specfun.hpp"

#include <boost/math/special_functions/lambert_w.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <vector>

using namespace afm;

namespace {

constexpr double kE = std::numbers::e;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

struct Family {
  const char* name;
  PotentialModel v;
  double m;
  std::function<double(double)> V;
  std::function<double(double)> dV;
};

std::vector<Family> families() {
  return {
      {"linear", LinearPotential{}, 0.5, [](double r) { return r; }, [](double) { return 1.0; }},
      {"log", LogarithmicPotential{}, 2.0, [](double r) { return std::log(r); }, [](double r) { return 1.0 / r; }},
      {"exp20", ExponentialPotential{20.0}, 0.5, [](double r) { return -20.0 * std::exp(-r); },
       [](double r) { return 20.0 * std::exp(-r); }},
      {"exp200", ExponentialPotential{200.0}, 0.5, [](double r) { return -200.0 * std::exp(-r); },
       [](double r) { return 200.0 * std::exp(-r); }},
  };
}

constexpr AuxiliaryKind kKinds[] = {AuxiliaryKind::Coulomb, AuxiliaryKind::Quadratic};

double P(AuxiliaryKind kind, double r) { return kind == AuxiliaryKind::Coulomb ? -1.0 / r : r * r; }
double dP(AuxiliaryKind kind, double r) { return kind == AuxiliaryKind::Coulomb ? 1.0 / (r * r) : 2.0 * r; }

// Eigenvalue of p^2/2m + nu P(r).
double basis_eigenvalue(AuxiliaryKind kind, double m, QuantumNumbers q, double nu) {
  if (kind == AuxiliaryKind::Coulomb) {
    const double N = q.n + q.l + 1.0;
    return -m * nu * nu / (2.0 * N * N);
  }
  return std::sqrt(2.0 * nu / m) * (2.0 * q.n + q.l + 1.5);
}

struct Extremum {
  double nu;
  double energy;
};

// Stationary point of E(nu) = E_A(nu) + V(r) - nu P(r) with V'(r) = nu P'(r),
// located by Brent's method; r is taken from [r_lo, r_hi] where the tangency
// condition is monotone.
Extremum extremize(const Family& f, AuxiliaryKind kind, QuantumNumbers q, double nu_guess, double r_lo, double r_hi) {
  const auto tangent = [&](double nu) {
    const auto g = [&](double r) { return f.dV(r) - nu * dP(kind, r); };
    boost::uintmax_t it = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(g, r_lo, r_hi, boost::math::tools::eps_tolerance<double>(),
                                                          it);
    return 0.5 * (a + b);
  };
  const auto energy = [&](double nu) {
    const double r = tangent(nu);
    return basis_eigenvalue(kind, f.m, q, nu) + f.V(r) - nu * P(kind, r);
  };
  // nu range over which the tangent point stays inside [r_lo, r_hi]
  const auto K = [&](double r) { return f.dV(r) / dP(kind, r); };
  const double k_lo = std::min(K(r_lo), K(r_hi));
  const double k_hi = std::max(K(r_lo), K(r_hi));
  const double lo = std::max(nu_guess / 3.0, k_lo * (1.0 + 1e-9));
  const double hi = std::min(nu_guess * 3.0, k_hi * (1.0 - 1e-9));
  const double mid = 0.5 * (lo + hi);
  const double sign = energy(mid) > 0.5 * (energy(lo) + energy(hi)) ? -1.0 : 1.0;
  const auto [nu, val] =
      boost::math::tools::brent_find_minima([&](double x) { return sign * energy(x); }, lo, hi, 40);
  return {nu, sign * val};
}

// Bracket on which K = V'/P' is monotone and contains r0.
std::pair<double, double> tangent_bracket(const Family& f, AuxiliaryKind kind, double r0) {
  if (std::holds_alternative<ExponentialPotential>(f.v) && kind == AuxiliaryKind::Coulomb) {
    return r0 < 2.0 ? std::pair{1e-9, 2.0} : std::pair{2.0, 400.0};
  }
  return {1e-9, 1e9};
}

} // namespace

TEST_CASE("principal numbers") {
  CHECK(principal_number(AuxiliaryKind::Coulomb, {0, 0}) == 1.0);
  CHECK(principal_number(AuxiliaryKind::Quadratic, {0, 0}) == 1.5);
  CHECK(principal_number(AuxiliaryKind::Quadratic, {1, 2}) == 5.5);
  CHECK(principal_number(AuxiliaryKind::Coulomb, {2, 3}) == 6.0);
  CHECK_THROWS_AS(principal_number(AuxiliaryKind::Coulomb, {-1, 0}), DomainError);
}

TEST_CASE("linear closed forms") {
  const AfmSolution hy = afm_solve(LinearPotential{}, AuxiliaryKind::Coulomb, {0, 0});
  CHECK(hy.energy == doctest::Approx(3.0 / std::cbrt(4.0)).epsilon(1e-15));
  CHECK(hy.energy == doctest::Approx(1.88988).epsilon(1e-5));
  CHECK(std::get<HydrogenScale>(hy.scale).eta == doctest::Approx(std::cbrt(0.5)).epsilon(1e-15));
  CHECK(std::get<HydrogenScale>(hy.scale).eta == doctest::Approx(0.7937).epsilon(1e-4));

  const AfmSolution ho = afm_solve(LinearPotential{}, AuxiliaryKind::Quadratic, {0, 0});
  CHECK(ho.energy == doctest::Approx(3.0 * std::pow(0.75, 2.0 / 3.0)).epsilon(1e-15));
  CHECK(ho.energy == doctest::Approx(2.476445).epsilon(1e-6));
  CHECK(std::fabs(ho.energy / -specfun::airy_zero(0) - 1.059) < 0.0005);

  for (int n = 0; n <= 4; ++n) {
    for (int l = 0; l <= 4; ++l) {
      const QuantumNumbers q{n, l};
      const double Nc = n + l + 1.0;
      const double Nq = 2.0 * n + l + 1.5;
      const AfmSolution c = afm_solve(LinearPotential{}, AuxiliaryKind::Coulomb, q);
      CHECK(rel(c.nu0, std::cbrt(4.0) * std::pow(Nc, 4.0 / 3.0)) < 1e-14);
      CHECK(rel(std::get<HydrogenScale>(c.scale).eta, c.nu0 / 2.0) < 1e-14);
      CHECK(rel(c.energy, 3.0 * std::pow(Nc, 2.0 / 3.0) / std::cbrt(4.0)) < 1e-14);
      const AfmSolution o = afm_solve(LinearPotential{}, AuxiliaryKind::Quadratic, q);
      CHECK(rel(o.nu0, std::pow(2.0, -4.0 / 3.0) * std::pow(Nq, -2.0 / 3.0)) < 1e-14);
      CHECK(rel(std::get<OscillatorScale>(o.scale).lambda, std::pow(o.nu0, 0.25)) < 1e-14);
      CHECK(rel(o.energy, 3.0 * std::pow(Nq, 2.0 / 3.0) / std::cbrt(4.0)) < 1e-14);

      // general (m, a): energies scale as (a^2/2m)^(1/3), lengths as (2ma)^(-1/3)
      for (const auto kind : kKinds) {
        const AfmSolution unit = afm_solve(LinearPotential{}, kind, q);
        const AfmSolution s = afm_solve(LinearPotential{1.7, 0.4}, kind, q);
        CHECK(rel(s.energy, std::cbrt(0.16 / 3.4) * unit.energy) < 1e-13);
        CHECK(rel(s.r0, std::cbrt(1.0 / 1.36) * unit.r0) < 1e-13);
      }
    }
  }
}

TEST_CASE("logarithmic closed forms") {
  CHECK(afm_solve(LogarithmicPotential{}, AuxiliaryKind::Coulomb, {0, 0}).energy ==
        doctest::Approx((1.0 - std::log(2.0)) / 2.0).epsilon(1e-15));
  for (int n = 0; n <= 4; ++n) {
    for (int l = 0; l <= 4; ++l) {
      const QuantumNumbers q{n, l};
      const double Nc = n + l + 1.0;
      const double Nq = 2.0 * n + l + 1.5;
      const AfmSolution c = afm_solve(LogarithmicPotential{}, AuxiliaryKind::Coulomb, q);
      CHECK(rel(c.nu0, Nc / std::sqrt(2.0)) < 1e-15);
      CHECK(rel(std::get<HydrogenScale>(c.scale).eta, std::sqrt(2.0) * Nc) < 1e-15);
      CHECK(rel(c.energy, std::log(std::sqrt(kE / 2.0) * Nc)) < 1e-14);
      const AfmSolution o = afm_solve(LogarithmicPotential{}, AuxiliaryKind::Quadratic, q);
      CHECK(rel(o.nu0, 1.0 / (Nq * Nq)) < 1e-15);
      CHECK(rel(std::get<OscillatorScale>(o.scale).lambda, std::sqrt(2.0 / Nq)) < 1e-15);
      CHECK(rel(o.energy, std::log(std::sqrt(kE / 2.0) * Nq)) < 1e-14);

      // <p^2> = 2 in the trial state, both bases
      for (const auto kind : kKinds) {
        const AfmSolution s = afm_solve(LogarithmicPotential{}, kind, q);
        CHECK(std::fabs(afm_observable_set(LogarithmicPotential{}, s, q).p2 - 2.0) < 1e-14);
      }
    }
  }
}

TEST_CASE("exponential closed forms") {
  for (const double k : {5.0, 10.0, 20.0, 200.0}) {
    for (const auto kind : kKinds) {
      for (int n = 0; n <= 4; ++n) {
        for (int l = 0; l <= 4; ++l) {
          CAPTURE(k);
          CAPTURE(n);
          CAPTURE(l);
          const QuantumNumbers q{n, l};
          const double N = principal_number(kind, q);
          const double T = -std::cbrt(2.0 * N * N / k) / 3.0;
          if (T < -1.0 / kE) {
            try {
              afm_solve(ExponentialPotential{k}, kind, q);
              FAIL("expected NoBoundState");
            } catch (const NoBoundState& e) {
              CHECK(e.reason() == NoBoundReason::StateNotAllowed);
            }
            continue;
          }
          const double w = boost::math::lambert_w0(T);
          // tangent point r0 = -3 W0(T) solves r^3 e^-r = 2 N^2 / k
          const double r0 = -3.0 * w;
          CHECK(rel(r0 * r0 * r0 * std::exp(-r0), 2.0 * N * N / k) < 1e-12);
          double eps = 0.0;
          try {
            const AfmSolution s = afm_solve(ExponentialPotential{k}, kind, q);
            eps = s.energy;
            CHECK(rel(s.r0, r0) < 1e-12);
            if (kind == AuxiliaryKind::Coulomb) {
              CHECK(rel(std::get<HydrogenScale>(s.scale).eta, 4.5 * k * T * T * T / w) < 1e-12);
              // W0(u0) u0^2 = -N^2 / (4k)
              const double u = *s.lambert_u0;
              CHECK(rel(boost::math::lambert_w0(u) * u * u, -N * N / (4.0 * k)) < 1e-10);
            } else {
              CHECK(rel(std::get<OscillatorScale>(s.scale).lambda,
                        std::pow(-(k / 6.0) * T * T * T / std::pow(w, 4), 0.25)) < 1e-12);
              // W0(u0) u0^(-1/4) = (2 N^2 / k)^(1/4)
              const double u = *s.lambert_u0;
              CHECK(rel(boost::math::lambert_w0(u) * std::pow(u, -0.25), std::pow(2.0 * N * N / k, 0.25)) < 1e-10);
            }
          } catch (const NoBoundState& e) {
            CHECK(e.reason() == NoBoundReason::NonNegativeEnergy);
            eps = std::numeric_limits<double>::infinity();
          }
          // E(nu0) from the tangent construction: basis energy + V(r0) - nu0 P(r0)
          const double m = 0.5;
          const double V = -k * std::exp(-r0);
          const double nu0 = k * std::exp(-r0) / dP(kind, r0);
          const double e_ref = basis_eigenvalue(kind, m, q, nu0) + V - nu0 * P(kind, r0);
          if (std::isfinite(eps)) {
            CHECK(rel(eps, e_ref) < 1e-12);
          } else {
            CHECK(e_ref >= 0.0);
          }
        }
      }
    }
  }
}

TEST_CASE("exponential example k = 10, (1,0)") {
  const AfmSolution s = afm_solve(ExponentialPotential{10.0}, AuxiliaryKind::Coulomb, {1, 0});
  const double e = solve_radial(ExponentialPotential{10.0}, QuantumNumbers{1, 0}).energy;
  CHECK(std::fabs(e + 0.070) < 0.0005);
  CHECK(std::fabs(s.energy / e - 6.573) < 0.01 * 6.573);
}

TEST_CASE("allowed exponential states, Coulomb basis") {
  using Set = std::set<std::pair<int, int>>; // (l, n)
  const std::pair<double, Set> expected[] = {
      {5.0, {{0, 0}}},
      {10.0, {{0, 0}, {0, 1}, {1, 0}}},
      {20.0, {{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}}},
  };
  for (const auto& [k, want] : expected) {
    Set got;
    for (int n = 0; n <= 6; ++n) {
      for (int l = 0; l <= 6; ++l) {
        try {
          afm_solve(ExponentialPotential{k}, AuxiliaryKind::Coulomb, {n, l});
          got.insert({l, n});
        } catch (const NoBoundState&) {
        }
      }
    }
    CHECK(got == want);
  }
  try {
    afm_solve(ExponentialPotential{5.0}, AuxiliaryKind::Coulomb, {1, 0});
    FAIL("expected NoBoundState");
  } catch (const NoBoundState& e) {
    CHECK(std::string(to_string(e.reason())) == "state-not-allowed");
  }
}

TEST_CASE("independent extremization") {
  for (const Family& f : families()) {
    for (const auto kind : kKinds) {
      for (int n = 0; n <= 3; ++n) {
        for (int l = 0; l <= 3; ++l) {
          CAPTURE(std::string(f.name));
          CAPTURE(to_string(kind));
          CAPTURE(n);
          CAPTURE(l);
          const QuantumNumbers q{n, l};
          AfmSolution s;
          try {
            s = afm_solve(f.v, kind, q);
          } catch (const NoBoundState&) {
            continue;
          }
          const auto [lo, hi] = tangent_bracket(f, kind, s.r0);
          const Extremum x = extremize(f, kind, q, s.nu0, lo, hi);
          CHECK(rel(s.energy, x.energy) < 1e-10);
          CHECK(rel(s.nu0, x.nu) < 1e-6);

          // epsilon = E_A(nu0) + C(nu0)
          CHECK(rel(basis_eigenvalue(kind, f.m, q, s.nu0) + s.offset, s.energy) < 1e-10);
          CHECK(rel(basis_energy(f.v, kind, q, s.nu0) + s.offset, s.energy) < 1e-10);
          CHECK(std::fabs(s.offset - (f.V(s.r0) - s.nu0 * P(kind, s.r0))) < 1e-12 * (1.0 + std::fabs(s.offset)));
        }
      }
    }
  }
}

TEST_CASE("mean point identity") {
  for (const Family& f : families()) {
    for (const auto kind : kKinds) {
      for (int n = 0; n <= 4; ++n) {
        for (int l = 0; l <= 4; ++l) {
          CAPTURE(std::string(f.name));
          CAPTURE(to_string(kind));
          CAPTURE(n);
          CAPTURE(l);
          const QuantumNumbers q{n, l};
          AfmSolution s;
          try {
            s = afm_solve(f.v, kind, q);
          } catch (const NoBoundState&) {
            continue;
          }
          if (kind == AuxiliaryKind::Coulomb) {
            const double inv_r = exact::hydrogen_observables(std::get<HydrogenScale>(s.scale), q).r(-1);
            CHECK(rel(inv_r, 1.0 / s.r0) < 1e-10);
          } else {
            const double r2 = exact::oscillator_observables(std::get<OscillatorScale>(s.scale), q).r(2);
            CHECK(rel(r2, s.r0 * s.r0) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("bound classification") {
  for (int n = 0; n <= 3; ++n) {
    for (int l = 0; l <= 3; ++l) {
      const QuantumNumbers q{n, l};
      CHECK(bound_direction(LinearPotential{}, AuxiliaryKind::Coulomb, q).kind == BoundKind::Lower);
      CHECK(bound_direction(LinearPotential{}, AuxiliaryKind::Quadratic, q).kind == BoundKind::Upper);
      CHECK(bound_direction(LogarithmicPotential{}, AuxiliaryKind::Coulomb, q).kind == BoundKind::Lower);
      CHECK(bound_direction(LogarithmicPotential{}, AuxiliaryKind::Quadratic, q).kind == BoundKind::Upper);
      CHECK(bound_direction(ExponentialPotential{20.0}, AuxiliaryKind::Quadratic, q).kind == BoundKind::Upper);
      const BoundDirection c = bound_direction(ExponentialPotential{20.0}, AuxiliaryKind::Coulomb, q);
      CHECK(c.kind == BoundKind::Conditional);
      CHECK(c.condition_met == (n + l + 1.0 <= std::sqrt(20.0 / (2.0 * kE))));
    }
  }
  const BoundDirection g = bound_direction(ExponentialPotential{20.0}, AuxiliaryKind::Coulomb, {0, 0});
  CHECK(g.condition_met);
  CHECK(g.is_lower());
  CHECK(to_string(g) == "conditional-met");
}

TEST_CASE("bound direction against the oracle") {
  struct Case {
    PotentialModel v;
    std::vector<QuantumNumbers> states;
  };
  std::vector<QuantumNumbers> lin;
  for (int n = 0; n <= 2; ++n) {
    for (int l = 0; l <= 2; ++l) {
      lin.push_back({n, l});
    }
  }
  const std::vector<QuantumNumbers> logs = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}};
  const std::vector<QuantumNumbers> e5 = {{0, 0}};
  const std::vector<QuantumNumbers> e10 = {{0, 0}, {1, 0}, {0, 1}};
  const std::vector<QuantumNumbers> e20 = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  const Case cases[] = {
      {LinearPotential{}, lin},           {LogarithmicPotential{}, logs}, {ExponentialPotential{5.0}, e5},
      {ExponentialPotential{10.0}, e10}, {ExponentialPotential{20.0}, e20},
  };
  int checked = 0;
  for (const auto& c : cases) {
    for (const auto q : c.states) {
      const double exact = solve_radial(c.v, q).energy;
      for (const auto kind : kKinds) {
        CAPTURE(family_name(c.v));
        CAPTURE(to_string(kind));
        CAPTURE(q.n);
        CAPTURE(q.l);
        AfmSolution s;
        try {
          s = afm_solve(c.v, kind, q);
        } catch (const NoBoundState&) {
          continue;
        }
        if (s.bound.is_lower()) {
          CHECK(s.energy <= exact + 1e-6);
          ++checked;
        }
        if (s.bound.is_upper()) {
          CHECK(s.energy >= exact - 1e-6);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("improved linear formula") {
  CHECK(improved_linear_energy({0, 0}) == doctest::Approx(std::pow(9.0 * std::numbers::pi / 8.0, 2.0 / 3.0)).epsilon(1e-15));
  CHECK(improved_linear_energy({0, 0}) == doctest::Approx(2.3203).epsilon(1e-4));
  for (int n = 0; n <= 10; ++n) {
    CHECK(rel(improved_linear_energy({n, 0}), specfun::airy_beta(n)) < 1e-14);
  }
  const double e01 = improved_linear_energy({0, 1});
  CHECK(e01 == doctest::Approx(std::pow(1.5 * std::numbers::pi * (std::sqrt(3.0) / std::numbers::pi + 0.75), 2.0 / 3.0))
                   .epsilon(1e-15));
  CHECK(e01 == doctest::Approx(3.3503).epsilon(1e-4));
  const double oracle = solve_radial(LinearPotential{}, QuantumNumbers{0, 1}).energy;
  CHECK(oracle == doctest::Approx(3.3613).epsilon(1e-4));
  CHECK(rel(e01, oracle) < 0.015);
}

TEST_CASE("critical coupling") {
  for (const auto kind : kKinds) {
    for (int n = 0; n <= 3; ++n) {
      for (int l = 0; l <= 3; ++l) {
        CAPTURE(to_string(kind));
        CAPTURE(n);
        CAPTURE(l);
        const QuantumNumbers q{n, l};
        const double kc = critical_coupling(q, kind);
        const double N = principal_number(kind, q);
        CHECK(rel(kc, N * N * kE * kE / 4.0) < 1e-12);
        const AfmSolution above = afm_solve(ExponentialPotential{kc * (1.0 + 1e-12)}, kind, q);
        CHECK(above.energy < 0.0);
        CHECK(std::fabs(above.energy) < 1e-9);
        CHECK_THROWS_AS(afm_solve(ExponentialPotential{kc * (1.0 - 1e-9)}, kind, q), NoBoundState);
      }
    }
  }
  const double kc10 = critical_coupling({1, 0}, AuxiliaryKind::Coulomb);
  CHECK(kc10 > 5.0);
  CHECK(kc10 <= 10.0);
}

TEST_CASE("tangent check") {
  std::vector<double> samples;
  for (int i = 1; i <= 400; ++i) {
    samples.push_back(0.025 * i);
  }
  for (const Family& f : families()) {
    for (const auto kind : kKinds) {
      for (int n = 0; n <= 3; ++n) {
        for (int l = 0; l <= 3; ++l) {
          CAPTURE(std::string(f.name));
          CAPTURE(to_string(kind));
          CAPTURE(n);
          CAPTURE(l);
          AfmSolution s;
          try {
            s = afm_solve(f.v, kind, {n, l});
          } catch (const NoBoundState&) {
            continue;
          }
          const TangentReport rep = tangent_check(f.v, kind, s, samples);
          CHECK(rep.ok());
          CHECK(rep.value_gap <= 1e-10);
          CHECK(rep.slope_gap <= 1e-8);
          CHECK(rep.extremality_residual < 1e-6);
          CHECK(std::fabs(s.tangent_potential(s.r0) - f.V(s.r0)) <= 1e-10 * (1.0 + std::fabs(f.V(s.r0))));
        }
      }
    }
  }
  for (int n = 0; n <= 3; ++n) {
    const AfmSolution c = afm_solve(LinearPotential{}, AuxiliaryKind::Coulomb, {n, 0});
    const AfmSolution o = afm_solve(LinearPotential{}, AuxiliaryKind::Quadratic, {n, 0});
    for (const double r : samples) {
      CHECK(c.tangent_potential(r) - r == doctest::Approx(-(r - c.r0) * (r - c.r0) / r).epsilon(1e-9).scale(1.0));
      CHECK(o.tangent_potential(r) - r ==
            doctest::Approx((r - o.r0) * (r - o.r0) / (2.0 * o.r0)).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("tangent check reports a wrong solution") {
  AfmSolution s = afm_solve(LinearPotential{}, AuxiliaryKind::Coulomb, {0, 0});
  s.nu0 *= 1.1;
  const std::vector<double> samples = {0.5, 1.0, 2.0};
  TangentReport rep;
  CHECK_NOTHROW(rep = tangent_check(LinearPotential{}, AuxiliaryKind::Coulomb, s, samples));
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(afm_solve(ExponentialPotential{-1.0}, AuxiliaryKind::Coulomb, {0, 0}), DomainError);
  CHECK_THROWS_AS(afm_solve(LinearPotential{0.0, 1.0}, AuxiliaryKind::Coulomb, {0, 0}), DomainError);
  CHECK_THROWS_AS(afm_solve(LinearPotential{}, AuxiliaryKind::Coulomb, {0, -1}), DomainError);
}
