#pragma once

#include "fzzt/xi/xi.hpp"

#include <vector>

namespace fzzt::xi {

struct MpExpansion {
    std::vector<double> b;       // b_0 .. b_nmax
    double residual = 0.0;       // max grid residual / max |target|
    double condition = 0.0;      // normal-equation condition estimate
    bool ill_conditioned = false;  // condition > 1e12
    std::vector<CoeffValue> i_n;   // I_0 .. I_min(nmax, 20), published alongside
};

/// Least-squares b for sum_n b_n p_n(z) ~ target on the given grid, with
/// p_n from their exact coefficient forms.
MpExpansion mp_fit(int nmax, const std::vector<double>& z, const std::vector<double>& target);

/// Fit of Xi(z) e^{-pi z / 4} on 400 points of [-20, 20]; nmax <= 32.
MpExpansion mp_expand(int nmax, bool with_integrals = true);

}  // namespace fzzt::xi
