#pragma once

#include "fzzt/specfun/result.hpp"

namespace fzzt::specfun {

/// 0F2(;b1,b2;x) by its power series; stops once a term drops below
/// 1e-17 of the partial sum past the series hump. |x| <= 1e4.
cplx hyp0f2(double b1, double b2, cplx x);

/// d^m/dz^m [ z^p 0F2(;b1,b2; kappa z^4) ], differentiated term by term.
cplx hyp0f2_power_deriv(int p, double b1, double b2, double kappa, cplx z, int m);

}  // namespace fzzt::specfun
