#pragma once

#include "fzzt/specfun/result.hpp"

namespace fzzt::specfun {

/// zeta(1/2 + i t) for |t| <= 60 from the alternating eta series with
/// Borwein's acceleration. Cross-check oracle only.
cplx zeta_critical_line(double t);

}  // namespace fzzt::specfun
