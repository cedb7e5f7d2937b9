#pragma once

#include "fzzt/specfun/result.hpp"

namespace fzzt::specfun {

/// Lanczos (g = 7, 9 terms) in log form, reflection for Re x < 1/2.
/// Throws std::domain_error at nonpositive integers.
cplx gamma(cplx x);
double gamma(double x);

}  // namespace fzzt::specfun
