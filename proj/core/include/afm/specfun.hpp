#pragma once

#include <cmath>

// Special-function kernel: Airy Ai and its zeros, the two real Lambert W
// branches, the inversion of z = W(x) x^alpha, generalized Laguerre
// polynomials, log-gamma and binomial coefficients.
//
// Everything here is a pure function of its arguments.

namespace afm::specfun {

struct AiryValue {
  double value;
  double derivative;
};

// Ai(x) and Ai'(x). Taylor continuation of the Airy equation from the origin
// on [-10, 1.5], backward continuation from an asymptotic seed at x = 10 on
// (1.5, 10), and asymptotic expansions outside [-10, 10].
AiryValue airy_ai(double x);

// beta_n = [3 pi/2 (n + 3/4)]^(2/3).
double airy_beta(int n);

// Three-term asymptotic estimate -beta_n (1 + 5/48 beta_n^-3 - 5/36 beta_n^-6).
double airy_zero_estimate(int n);

// The (n+1)-th zero alpha_n < 0 of Ai, n >= 0, Newton-refined from the
// asymptotic estimate.
double airy_zero(int n);

enum class WBranch {
  Principal, // W_0 on [-1/e, inf), values >= -1
  Lower,     // W_-1 on [-1/e, 0), values <= -1
};

// w with w e^w = x on the requested branch. Throws DomainError outside the
// branch domain.
double lambert_w(WBranch branch, double x);

// W^-1(y) = y e^y.
inline double lambert_w_inverse(double y) { return y * std::exp(y); }

// x solving z = W(x) x^alpha, with W evaluated on `branch`.
//   alpha = 0  : x = z e^z
//   alpha = -1 : x = (1/z) ln(1/z)
//   otherwise  : x = W^-1( (alpha+1)/alpha W( alpha/(alpha+1) z^(1/(alpha+1)) ) )
// Throws NoSolution if z^(1/(alpha+1)) is not real, DomainError if the inner
// Lambert argument (or the implied W value for the special cases) falls
// outside the branch. The branch is never switched silently.
double solve_w_power(double z, double alpha, WBranch branch);

// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
double laguerre(int n, double alpha, double x);

// ln Gamma(x) for x > 0; DomainError otherwise.
double ln_gamma(double x);

// Binomial coefficient C(n, k); 0 when k > n.
double binomial(int n, int k);

} // namespace afm::specfun
