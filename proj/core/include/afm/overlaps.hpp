#pragma once

// Overlaps between radial eigenfunctions of one family at different scales.
//
//   F_{n,n',l}(a) = a^(3/2) int_0^inf R_{n,l}(x) R_{n',l}(a x) x^2 dx
//
// with R the unit-scale hydrogen (eta = 1) or oscillator (lambda = 1) radial
// function. Properties: F(1) = delta_{nn'}, |F| <= 1,
// F_{n,n',l}(1/a) = F_{n',n,l}(a), F -> 0 for a -> 0 and a -> inf.

#include "afm/auxfield.hpp"
#include "afm/radial.hpp"

namespace afm {

// Closed form; terms with Q(a) = aN - N' raised to a non-negative integer
// power only, so a = N'/N is evaluated exactly. DomainError for a <= 0 or
// indices above 12.
double overlap_hydrogen_dilated(int n, int n_prime, int l, double a);

// Closed form in powers of (1 - a^2). DomainError for a <= 0 or indices
// above 12.
double overlap_oscillator_dilated(int n, int n_prime, int l, double a);

// Dilation factor between the AFM states (n, l) and (n', l) of the linear
// potential: ((n'+l+1)/(n+l+1))^(4/3) for Coulomb,
// ((4n+2l+3)/(4n'+2l+3))^(1/6) for Quadratic.
double afm_pair_dilation(AuxiliaryKind kind, int n, int n_prime, int l);

// Overlap of the linear-potential AFM states (n, l) and (n', l).
double afm_pair_overlap(AuxiliaryKind kind, int n, int n_prime, int l);

// int u_f u_g dr by Simpson on the union of both grids, restricted to their
// common support, with cubic Hermite interpolation. Throws GridMismatch if
// either function keeps more than 1e-10 of its norm outside that support.
double numeric_overlap(const RadialFunction& f, const RadialFunction& g);

} // namespace afm
