#include "fzzt/xi/ode.hpp"

#include "fzzt/quad/quad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fzzt::xi {

OdeSpec ode_from_potential(const PotentialExpansion& p) {
    if (p.order != 2 && p.order != 4 && p.order != 6 && p.order != 8)
        throw std::invalid_argument("ode_from_potential: order must be 2, 4, 6 or 8");
    OdeSpec spec;
    for (int m = 1; 2 * m <= p.order; ++m) {
        const double u = p.u(2 * m);
        if (u == 0.0) continue;
        const double sign = m % 2 == 0 ? 1.0 : -1.0;
        spec.terms.push_back({2 * m - 1, sign * 2.0 * m * u});
    }
    return spec;
}

OdeResidual ode_residual(const OdeSpec& spec, const std::function<double(double)>& weight,
                         const std::vector<double>& z_grid) {
    for (const auto& t : spec.terms)
        if (t.order < 0 || t.order > 6) throw std::invalid_argument("ode_residual: derivative orders must be <= 6");
    OdeResidual out;
    for (double z : z_grid) {
        const std::complex<double> f = quad::fourier_even(weight, z, 0, 1e-13).value;
        std::complex<double> lhs = 0.0;
        for (const auto& t : spec.terms) lhs += t.coeff * quad::fourier_even(weight, z, t.order, 1e-13).value;
        const double r = std::abs(lhs - static_cast<double>(spec.rhs_sign) * z * f) / std::max(1.0, std::abs(f));
        out.z.push_back(z);
        out.residual.push_back(r);
        out.max_residual = std::max(out.max_residual, r);
    }
    return out;
}

}  // namespace fzzt::xi
