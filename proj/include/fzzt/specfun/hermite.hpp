#pragma once

#include "fzzt/exact/poly.hpp"

namespace fzzt::specfun {

// Physicists' Hermite polynomials, H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_h(int n, double x);
Rational hermite_h(int n, const Rational& x);
RatPoly hermite_poly(int n);

/// (g/4)^{n/2} H_n(z/sqrt g) as an exact polynomial in z. Only powers of the
/// parity of n occur, so g enters through integer powers only.
RatPoly scaled_hermite(int n, const Rational& g);

}  // namespace fzzt::specfun
