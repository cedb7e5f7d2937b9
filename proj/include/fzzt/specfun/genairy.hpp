#pragma once

#include "fzzt/specfun/result.hpp"

#include <vector>

namespace fzzt::specfun {

// Phi(z) = A 0F2(;1/2,3/4;-z^4/64) + B z^2 0F2(;5/4,3/2;-z^4/64)
//        + C z 0F2(;3/4,5/4;-z^4/64).
// A, B, C are Phi(0), Phi''(0)/2 and Phi'(0) for the contour integral
// (1/2 pi i) int e^{t^4/4 - z t} dt taken from infinity at arg -pi/4 to
// infinity at arg +pi/4. That integral gives
//   Phi^{(m)}(0) = (-1)^m sin(pi (m+1)/4) 4^{(m+1)/4 - 1} Gamma((m+1)/4) / pi,
// i.e. A = Gamma(1/4)/(2^{3/2} pi), B = Gamma(3/4)/(4 pi), C = -1/(2 sqrt pi).
// The values below were evaluated once at high precision and are checked
// against the contour quadrature in the tests.
inline constexpr double kPhiA = 0.2885168693082348443;
inline constexpr double kPhiB = 0.09751556277235169346;
inline constexpr double kPhiC = -0.2820947917738781435;

/// m-th derivative of Phi from the 0F2 form, m <= 6, |z| <= 10.
FuncResult gen_airy_phi(cplx z, int m = 0);

/// (1/2 pi i) int (-t)^m e^{t^4/4 - s1 t^2/2 - z t} dt over two rays at
/// arg +-pi/4 leaving the real point x0, which is the largest real root of
/// t^3 - s1 t = z for z > 0 and 0 otherwise. Evaluated as Im(I)/pi with I
/// the upper-ray integral; real z only. Integration by parts gives
/// Phi''' - s1 Phi' + z Phi = 0.
FuncResult gen_airy_phi_contour(double z, double s1, int m = 0);

/// m-th derivative of Psi(z) = int e^{-t^4/4 + i t z} dt from its even
/// series (1/sqrt 2) sum (-2)^k Gamma(1/4 + k/2) z^{2k} / (2k)!. |z| <= 12.
FuncResult gen_airy_psi(cplx z, int m = 0);

/// (1/sqrt 2)(Gamma(1/4) 0F2(;1/2,3/4;z^4/64) - Gamma(3/4) z^2 0F2(;5/4,3/2;z^4/64)).
FuncResult gen_airy_psi_hyp(cplx z);

/// Real zeros of Phi on [-10, 0), ordered from 0 outwards.
std::vector<double> gen_airy_phi_zeros(int count);

}  // namespace fzzt::specfun
