#pragma once

#include "fzzt/xi/potential.hpp"

#include <functional>
#include <vector>

namespace fzzt::xi {

/// sum_i coeff_i F^{(order_i)}(z) = rhs_sign * z F(z).
struct OdeSpec {
    struct Term {
        int order;
        double coeff;
        bool operator==(const Term&) const = default;
    };
    std::vector<Term> terms;  // odd orders, strictly increasing
    int rhs_sign = 1;
    bool operator==(const OdeSpec&) const = default;
};

/// For F(z) = int e^{-U(phi) + i phi z} dphi with U = sum u_{2m} phi^{2m},
/// integration by parts gives sum_m (-1)^m 2m u_{2m} F^{(2m-1)} = z F.
/// Terms with a zero coefficient are dropped; u0 plays no part.
OdeSpec ode_from_potential(const PotentialExpansion& p);

struct OdeResidual {
    double max_residual = 0.0;
    std::vector<double> z;
    std::vector<double> residual;  // |sum terms - rhs z F| / max(1, |F|)
};

/// Residual of the ODE for F built from an even weight, every derivative
/// from the Fourier integral with (i phi)^m inserted.
OdeResidual ode_residual(const OdeSpec& spec, const std::function<double(double)>& weight,
                         const std::vector<double>& z_grid);

}  // namespace fzzt::xi
