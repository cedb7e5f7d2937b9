#pragma once

#include "fzzt/exact/poly.hpp"
#include "fzzt/specfun/result.hpp"

namespace fzzt::specfun {

/// Meixner-Pollaczek p_n by p_{n+1} = z p_n - n(n + 1/2) p_{n-1}.
cplx mp_polynomial(int n, cplx z);
Rational mp_polynomial(int n, const Rational& z);
RatPoly mp_poly_exact(int n);

/// p_n(z) = n! (2n+1)!!/(2n)!! i^n 2F1(-n, 3/4 + i z/2; 3/2; 2). The
/// terminating sum is done in exact Gaussian rationals (z is taken as the
/// exact value of its binary64 parts) and rounded once at the end.
cplx mp_polynomial_hyp(int n, cplx z);

}  // namespace fzzt::specfun
