#include "fzzt/xi/deform.hpp"

#include "fzzt/quad/quad.hpp"
#include "fzzt/specfun/genairy.hpp"

#include <algorithm>
#include <cmath>

namespace fzzt::xi {

DeformationParams deformation_params(const PotentialExpansion& p) {
    const double u2 = p.u(2), u4 = p.u(4);
    if (!(u4 > 0.0)) throw std::domain_error("deformation_params: u4 must be positive");
    DeformationParams d;
    d.alpha = std::pow(4.0 * u4, 0.25);
    d.s1 = u2 / std::sqrt(u4);
    if (p.order >= 6) {
        const double u6 = p.u(6);
        if (u6 < 0.0) {
            const double beta = std::pow(-6.0 * u6, 1.0 / 6.0);
            d.beta = beta;
            d.s3 = 4.0 * u4 / std::pow(beta, 4);
            d.s1_star = 2.0 * u2 / (beta * beta);
        }
    }
    return d;
}

specfun::FuncResult psi_deformed(double z, double s1, int m) {
    if (std::abs(z) > 30.0) throw std::domain_error("psi_deformed: |z| > 30");
    auto w = [s1](double phi) {
        const double p2 = phi * phi;
        return std::exp(-0.25 * p2 * p2 - 0.5 * s1 * p2);
    };
    const auto r = quad::fourier_even(w, z, m, 1e-13);
    // even m gives a real value, odd m an imaginary one times i^{m+1}: both real
    return specfun::FuncResult{r.value, r.est_error, specfun::Method::Quadrature};
}

double phi_deformed_residual(double z, double s1) {
    const double f0 = specfun::gen_airy_phi_contour(z, s1, 0).value.real();
    const double f1 = specfun::gen_airy_phi_contour(z, s1, 1).value.real();
    const double f3 = specfun::gen_airy_phi_contour(z, s1, 3).value.real();
    return std::abs(f3 - s1 * f1 + z * f0);
}

specfun::FuncResult phi_deformed(double z, double s1, int m) {
    if (std::abs(z) > 10.0) throw std::domain_error("phi_deformed: |z| > 10");
    const auto v = specfun::gen_airy_phi_contour(z, s1, m);
    const double res = phi_deformed_residual(z, s1);
    if (res > 1e-6 * std::max(1.0, std::abs(v.value))) throw ResidualCheckFailed("phi_deformed: ODE residual check failed");
    return v;
}

}  // namespace fzzt::xi
