#include "afm/specfun.hpp"

#include "afm/errors.hpp"

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace afm::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Ai(0) = 1/(3^(2/3) Gamma(2/3)), Ai'(0) = -1/(3^(1/3) Gamma(1/3)).
constexpr double kAi0 = 0.355028053887817239260063186004;
constexpr double kAip0 = -0.258819403792806798405183560189;

constexpr double kSeedPositive = 10.0;
constexpr double kForwardLimit = 1.5;
constexpr double kAsymptoticNegative = -10.0;
constexpr double kMaxStep = 0.5;

// One Taylor step of y'' = x y from (x0, y0, d0) over h. The coefficients
// follow (k+2)(k+1) a_{k+2} = x0 a_k + a_{k-1}.
AiryValue taylor_step(double x0, double y0, double d0, double h) {
  double a_km1 = y0;                 // a_0
  double a_k = d0;                   // a_1
  double a_kp1 = 0.5 * x0 * y0;      // a_2
  double value = y0 + d0 * h + a_kp1 * h * h;
  double deriv = d0 + 2.0 * a_kp1 * h;
  double hp = h * h; // h^2
  int quiet = 0;
  for (int k = 1; k < 400; ++k) {
    // a_{k+2} from a_k and a_{k-1}
    const double next = (x0 * a_k + a_km1) / ((k + 2.0) * (k + 1.0));
    a_km1 = a_k;
    a_k = a_kp1;
    a_kp1 = next;
    const double dterm = (k + 2.0) * next * hp;
    hp *= h;
    const double vterm = next * hp;
    value += vterm;
    deriv += dterm;
    const double scale = std::abs(value) + std::abs(deriv) * std::abs(h) + 1e-300;
    if (std::abs(vterm) + std::abs(dterm * h) < 1e-18 * scale) {
      if (++quiet >= 3) {
        break;
      }
    } else {
      quiet = 0;
    }
  }
  return {value, deriv};
}

AiryValue continue_to(double x_from, AiryValue start, double x_to) {
  const double span = x_to - x_from;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(span) / kMaxStep)));
  const double h = span / steps;
  AiryValue cur = start;
  double x = x_from;
  for (int i = 0; i < steps; ++i) {
    cur = taylor_step(x, cur.value, cur.derivative, h);
    x = x_from + (i + 1) * h;
  }
  return cur;
}

// Coefficient u_k of the Airy asymptotic expansions; v_k = -(6k+1)/(6k-1) u_k.
double next_u(double u_prev, int k) {
  return u_prev * (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
         ((2.0 * k - 1.0) * 216.0 * k);
}

AiryValue airy_asymptotic_positive(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  double u = 1.0;
  double su = 1.0;
  double sv = 1.0;
  double zpow = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    u = next_u(u, k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    zpow /= -zeta;
    const double tu = u * zpow;
    if (std::abs(tu) > last) {
      break; // series started diverging
    }
    last = std::abs(tu);
    su += tu;
    sv += v * zpow;
    if (last < 1e-18) {
      break;
    }
  }
  const double pref = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
  const double q = std::sqrt(std::sqrt(x));
  return {pref / q * su, -pref * q * sv};
}

AiryValue airy_asymptotic_negative(double x) {
  const double t = -x;
  const double zeta = 2.0 / 3.0 * t * std::sqrt(t);
  // Even and odd partial sums for u and v, alternating in pairs.
  double u = 1.0;
  double ue = 1.0, uo = 0.0, ve = 1.0, vo = 0.0;
  double zpow = 1.0;
  double last = 1.0;
  for (int k = 1; k < 80; ++k) {
    u = next_u(u, k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    zpow /= zeta;
    const double mag = u * zpow;
    if (mag > last) {
      break;
    }
    last = mag;
    // sign (-1)^floor(k/2) for index k in its even/odd subsequence
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      ue += sign * u * zpow;
      ve += sign * v * zpow;
    } else {
      uo += sign * u * zpow;
      vo += sign * v * zpow;
    }
    if (last < 1e-18) {
      break;
    }
  }
  const double phase = zeta - kPi / 4.0;
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  const double q = std::sqrt(std::sqrt(t));
  const double rs = 1.0 / std::sqrt(kPi);
  return {rs / q * (c * ue + s * uo), rs * q * (s * ve - c * vo)};
}

} // namespace

AiryValue airy_ai(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("airy_ai: non-finite argument");
  }
  if (x >= kSeedPositive) {
    return airy_asymptotic_positive(x);
  }
  if (x > kForwardLimit) {
    // Ai is the dominant solution when integrating toward smaller x.
    return continue_to(kSeedPositive, airy_asymptotic_positive(kSeedPositive), x);
  }
  if (x >= kAsymptoticNegative) {
    return continue_to(0.0, {kAi0, kAip0}, x);
  }
  return airy_asymptotic_negative(x);
}

double airy_beta(int n) {
  return std::pow(1.5 * kPi * (n + 0.75), 2.0 / 3.0);
}

double airy_zero_estimate(int n) {
  if (n < 0) {
    throw DomainError("airy_zero: negative index");
  }
  const double b = airy_beta(n);
  const double b3 = 1.0 / (b * b * b);
  return -b * (1.0 + 5.0 / 48.0 * b3 - 5.0 / 36.0 * b3 * b3);
}

double airy_zero(int n) {
  double x = airy_zero_estimate(n);
  for (int it = 0; it < 50; ++it) {
    const AiryValue a = airy_ai(x);
    const double dx = a.value / a.derivative;
    x -= dx;
    if (std::abs(dx) <= 4.0 * kEps * std::abs(x)) {
      break;
    }
  }
  return x;
}

namespace {

double branch_point_series(double p) {
  // W around -1/e in powers of p = +-sqrt(2(e x + 1)).
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
}

double halley(double x, double w) {
  for (int it = 0; it < 100; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) {
      return w;
    }
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double dw = f / denom;
    w -= dw;
    if (std::abs(dw) <= 4.0 * kEps * (1.0 + std::abs(w))) {
      break;
    }
  }
  return w;
}

} // namespace

double lambert_w(WBranch branch, double x) {
  constexpr double kBranchPoint = -1.0 / kE;
  if (!(x >= kBranchPoint) || !std::isfinite(x)) {
    throw DomainError("lambert_w: argument " + std::to_string(x) + " below -1/e");
  }
  const double q = std::max(0.0, 2.0 * (kE * x + 1.0));
  const double p = std::sqrt(q);
  if (branch == WBranch::Principal) {
    if (x == 0.0) {
      return 0.0;
    }
    if (p < 1e-3) {
      return branch_point_series(p);
    }
    double w;
    if (x < -0.32) {
      w = branch_point_series(p);
    } else if (x < 3.0) {
      w = std::log1p(x);
    } else {
      const double l1 = std::log(x);
      const double l2 = std::log(l1);
      w = l1 - l2 + l2 / l1;
    }
    return halley(x, w);
  }
  if (x >= 0.0) {
    throw DomainError("lambert_w: lower branch requires x < 0");
  }
  if (p < 1e-3) {
    return branch_point_series(-p);
  }
  double w;
  if (x < -0.25) {
    w = branch_point_series(-p);
  } else {
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }
  return halley(x, w);
}

namespace {

bool in_branch_range(WBranch branch, double w) {
  return branch == WBranch::Principal ? w >= -1.0 : w <= -1.0;
}

// Real value of z^(1/(alpha+1)), or NoSolution.
double real_root(double z, double alpha) {
  const double q = alpha + 1.0;
  const double p = 1.0 / q;
  if (z >= 0.0) {
    return std::pow(z, p);
  }
  const double qr = std::round(q);
  if (std::abs(q - qr) < 1e-12 && std::fmod(std::abs(qr), 2.0) == 1.0) {
    return -std::pow(-z, p);
  }
  const double pr = std::round(p);
  if (std::abs(p - pr) < 1e-12) {
    return std::pow(z, pr);
  }
  throw NoSolution("solve_w_power: z^(1/(alpha+1)) is not real for z < 0");
}

} // namespace

double solve_w_power(double z, double alpha, WBranch branch) {
  if (!std::isfinite(z) || !std::isfinite(alpha)) {
    throw DomainError("solve_w_power: non-finite input");
  }
  if (alpha == 0.0) {
    // z = W(x) itself
    if (!in_branch_range(branch, z)) {
      throw DomainError("solve_w_power: W value outside the requested branch");
    }
    return lambert_w_inverse(z);
  }
  if (alpha == -1.0) {
    if (z <= 0.0) {
      throw NoSolution("solve_w_power: alpha = -1 requires z > 0");
    }
    const double y = std::log(1.0 / z);
    if (!in_branch_range(branch, y)) {
      throw DomainError("solve_w_power: W value outside the requested branch");
    }
    return y / z;
  }
  const double inner = alpha / (alpha + 1.0) * real_root(z, alpha);
  if (inner < -1.0 / kE || (branch == WBranch::Lower && inner >= 0.0)) {
    throw DomainError("solve_w_power: inner Lambert argument outside the branch domain");
  }
  const double u = lambert_w(branch, inner);
  return lambert_w_inverse((alpha + 1.0) / alpha * u);
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) {
    throw DomainError("laguerre: negative degree");
  }
  double prev = 1.0;
  if (n == 0) {
    return prev;
  }
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double ln_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("ln_gamma: argument must be positive");
  }
  return boost::math::lgamma(x);
}

double binomial(int n, int k) {
  if (n < 0 || k < 0) {
    throw DomainError("binomial: negative index");
  }
  if (k > n) {
    return 0.0;
  }
  if (n <= 60) {
    // exact in 64-bit integers: every partial product C(n-k+i, i) * (n-k+i+1) < 2^64
    k = std::min(k, n - k);
    unsigned long long c = 1;
    for (int i = 1; i <= k; ++i) {
      c = c / i * (n - k + i) + c % i * (n - k + i) / i;
    }
    return static_cast<double>(c);
  }
  return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

} // namespace afm::specfun
