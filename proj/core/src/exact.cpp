#include "afm/exact.hpp"

#include "afm/specfun.hpp"

#include <cmath>
#include <numbers>

namespace afm::exact {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

double ln_factorial(int n) { return specfun::ln_gamma(n + 1.0); }

// Extended-precision terms for the alternating double sums, whose cancellation
// would otherwise eat the last digits of a double.
long double ln_gamma_ext(long double x) { return std::lgamma(x); }

long double binomial_ext(int n, int k) {
  long double c = 1.0L;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
  }
  return c;
}

} // namespace

// ---------------------------------------------------------------------------

LinearSState::LinearSState(double mass, double slope, int n)
    : mass_(mass), slope_(slope), n_(n) {
  require_positive(mass, "mass");
  require_positive(slope, "slope");
  if (n < 0) {
    throw DomainError("radial quantum number must be non-negative");
  }
  zero_ = specfun::airy_zero(n);
  energy_ = -std::cbrt(slope * slope / (2.0 * mass)) * zero_;
  const double s = 2.0 * mass * slope;
  k_ = std::cbrt(s);
  norm_ = std::pow(s, 1.0 / 6.0) / std::abs(specfun::airy_ai(zero_).derivative);
}

double LinearSState::radial(double r) const {
  const double t = k_ * r;
  if (t < 1e-4) {
    // Ai(alpha + t)/t = Ai'(alpha) (1 + alpha t^2/6 + t^3/12 + O(t^4))
    const double slope0 = specfun::airy_ai(zero_).derivative;
    return norm_ * k_ * slope0 * (1.0 + zero_ * t * t / 6.0 + t * t * t / 12.0);
  }
  return norm_ * specfun::airy_ai(t + zero_).value / r;
}

double LinearSState::psi(double r) const { return radial(r) / std::sqrt(4.0 * kPi); }

LinearSState linear_s_state(double mass, double slope, int n) { return {mass, slope, n}; }

ObservableSet linear_s_observables(double mass, double slope, int n) {
  const LinearSState st(mass, slope, n);
  const double a = -st.zero();
  const double s = 2.0 * mass * slope;
  const double s13 = std::cbrt(s);
  ObservableSet obs;
  obs.r_moments[1] = 2.0 * a / (3.0 * s13);
  obs.r_moments[2] = 8.0 * a * a / (15.0 * s13 * s13);
  obs.r_moments[3] = (16.0 * a * a * a + 15.0) / (35.0 * s);
  obs.r_moments[4] = 16.0 * (8.0 * a * a * a * a + 25.0 * a) / (315.0 * s * s13);
  obs.p2 = s13 * s13 * a / 3.0;
  obs.p4 = s * s13 * a * a / 5.0;
  obs.psi0_sq = mass * slope / (2.0 * kPi);
  obs.mean_h = st.energy();
  return obs;
}

// ---------------------------------------------------------------------------

HydrogenState::HydrogenState(HydrogenScale scale, QuantumNumbers q) : scale_(scale), q_(q) {
  validate(q);
  require_positive(scale.eta, "eta");
  const double nn = principal();
  gamma_ = scale.eta / nn;
  const double log_norm =
      1.5 * std::log(2.0 * gamma_) +
      0.5 * (ln_factorial(q.n) - std::log(2.0 * nn) - ln_factorial(q.n + 2 * q.l + 1));
  norm_ = std::exp(log_norm);
}

double HydrogenState::radial(double r) const {
  const double x = 2.0 * gamma_ * r;
  return norm_ * std::pow(x, q_.l) * std::exp(-gamma_ * r) * specfun::laguerre(q_.n, 2.0 * q_.l + 1.0, x);
}

HydrogenSolution hydrogen_state(double mass, double coupling, QuantumNumbers q) {
  require_positive(mass, "mass");
  require_positive(coupling, "coupling");
  const double nn = q.n + q.l + 1.0;
  return {-mass * coupling * coupling / (2.0 * nn * nn), HydrogenState({mass * coupling}, q)};
}

ObservableSet hydrogen_observables(HydrogenScale scale, QuantumNumbers q) {
  validate(q);
  require_positive(scale.eta, "eta");
  const double eta = scale.eta;
  const double nn = q.n + q.l + 1.0;
  const double n2 = nn * nn;
  const double ll = q.centrifugal();
  ObservableSet obs;
  obs.r_moments[-1] = eta / n2;
  obs.r_moments[-2] = 2.0 * eta * eta / ((2.0 * q.l + 1.0) * n2 * nn);
  obs.r_moments[1] = (3.0 * n2 - ll) / (2.0 * eta);
  obs.r_moments[2] = n2 / (2.0 * eta * eta) * (5.0 * n2 - 3.0 * ll + 1.0);
  obs.r_moments[3] = n2 / (8.0 * std::pow(eta, 3)) *
                     (35.0 * n2 * n2 + 5.0 * n2 * (5.0 - 6.0 * ll) + 3.0 * ll * (ll - 2.0));
  obs.r_moments[4] = n2 * n2 / (8.0 * std::pow(eta, 4)) *
                     (63.0 * n2 * n2 + 35.0 * n2 * (3.0 - 2.0 * ll) + 5.0 * ll * (3.0 * ll - 10.0) + 12.0);
  obs.p2 = eta * eta / n2;
  obs.p4 = std::pow(eta, 4) * (8.0 * q.n + 2.0 * q.l + 5.0) / ((2.0 * q.l + 1.0) * n2 * n2);
  if (q.l == 0) {
    obs.psi0_sq = std::pow(eta, 3) / (kPi * std::pow(q.n + 1.0, 3));
  }
  return obs;
}

double hydrogen_moment(HydrogenScale scale, QuantumNumbers q, int k) {
  validate(q);
  require_positive(scale.eta, "eta");
  const int n = q.n;
  const int l = q.l;
  if (k + 2 * l + 2 < 0) {
    throw DomainError("hydrogen_moment: <r^k> diverges for k < -(2l+2)");
  }
  long double sum = 0.0L;
  for (int p = 0; p <= n; ++p) {
    for (int s = 0; s <= n; ++s) {
      const long double log_term = ln_gamma_ext(p + s + k + 2 * l + 3) - ln_gamma_ext(p + 2 * l + 2) -
                                   ln_gamma_ext(s + 2 * l + 2);
      const long double term = binomial_ext(n, p) * binomial_ext(n, s) * std::exp(log_term);
      sum += ((p + s) % 2 == 0) ? term : -term;
    }
  }
  const double nn = n + l + 1.0;
  const long double pref =
      std::exp((k - 1) * std::log(static_cast<long double>(nn)) - std::log(2.0L) -
               k * std::log(2.0L * scale.eta) + ln_gamma_ext(n + 2 * l + 2) - ln_gamma_ext(n + 1));
  return static_cast<double>(pref * sum);
}

// ---------------------------------------------------------------------------

OscillatorState::OscillatorState(OscillatorScale scale, QuantumNumbers q) : scale_(scale), q_(q) {
  validate(q);
  require_positive(scale.lambda, "lambda");
  const double log_norm = 1.5 * std::log(scale.lambda) +
                          0.5 * (std::log(2.0) + ln_factorial(q.n) - specfun::ln_gamma(q.n + q.l + 1.5));
  norm_ = std::exp(log_norm);
}

double OscillatorState::radial(double r) const {
  const double x = scale_.lambda * r;
  return norm_ * std::pow(x, q_.l) * std::exp(-0.5 * x * x) * specfun::laguerre(q_.n, q_.l + 0.5, x * x);
}

OscillatorSolution oscillator_state(double mass, double strength, QuantumNumbers q) {
  require_positive(mass, "mass");
  require_positive(strength, "strength");
  const double nn = 2.0 * q.n + q.l + 1.5;
  return {std::sqrt(2.0 * strength / mass) * nn,
          OscillatorState({std::sqrt(std::sqrt(2.0 * mass * strength))}, q)};
}

ObservableSet oscillator_observables(OscillatorScale scale, QuantumNumbers q) {
  validate(q);
  require_positive(scale.lambda, "lambda");
  const double lam = scale.lambda;
  const double nn = 2.0 * q.n + q.l + 1.5;
  const double ll = q.centrifugal();
  ObservableSet obs;
  obs.r_moments[-2] = oscillator_moment(scale, q, -2);
  obs.r_moments[-1] = oscillator_moment(scale, q, -1);
  obs.r_moments[2] = nn / (lam * lam);
  obs.r_moments[4] = (6.0 * nn * nn - 2.0 * ll + 1.5) / (4.0 * std::pow(lam, 4));
  if (q.l == 0) {
    // Gamma(n + 3/2) / n!
    const double g = std::exp(specfun::ln_gamma(q.n + 1.5) - ln_factorial(q.n));
    obs.r_moments[1] = 4.0 * g / (kPi * lam);
    obs.r_moments[3] = 8.0 * (4.0 * q.n + 3.0) * g / (3.0 * kPi * std::pow(lam, 3));
    obs.psi0_sq = std::pow(lam, 3) * 2.0 * g / (kPi * kPi);
  } else {
    obs.r_moments[1] = oscillator_moment(scale, q, 1);
    obs.r_moments[3] = oscillator_moment(scale, q, 3);
  }
  obs.p2 = std::pow(lam, 4) * obs.r_moments[2];
  obs.p4 = std::pow(lam, 8) * obs.r_moments[4];
  return obs;
}

double oscillator_moment(OscillatorScale scale, QuantumNumbers q, int k) {
  validate(q);
  require_positive(scale.lambda, "lambda");
  const int n = q.n;
  const int l = q.l;
  if (k <= -(2 * l + 3)) {
    throw DomainError("oscillator_moment: <r^k> diverges for k <= -(2l+3)");
  }
  long double sum = 0.0L;
  for (int p = 0; p <= n; ++p) {
    for (int s = 0; s <= n; ++s) {
      const long double log_term = ln_gamma_ext(l + p + s + 0.5L * (k + 3)) - ln_gamma_ext(p + l + 1.5L) -
                                   ln_gamma_ext(s + l + 1.5L);
      const long double term = binomial_ext(n, p) * binomial_ext(n, s) * std::exp(log_term);
      sum += ((p + s) % 2 == 0) ? term : -term;
    }
  }
  const long double pref = std::exp(-k * std::log(static_cast<long double>(scale.lambda)) +
                                    ln_gamma_ext(n + l + 1.5L) - ln_gamma_ext(n + 1));
  return static_cast<double>(pref * sum);
}

} // namespace afm::exact
