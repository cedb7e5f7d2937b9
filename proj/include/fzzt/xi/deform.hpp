#pragma once

#include "fzzt/specfun/result.hpp"
#include "fzzt/xi/potential.hpp"

#include <optional>
#include <stdexcept>

namespace fzzt::xi {

/// Xi_*(z) = Xi(alpha z) turns the third-order equation into
/// F''' - s1 F' - z F = 0 with alpha = (4 u4)^{1/4} and s1 = u2 / sqrt(u4).
/// For order-6 input, Xi_**(z) = Xi(beta z) with beta = (-6 u6)^{1/6} gives
/// F^{(5)} + s3 F''' - s1_star F' - z F = 0, s3 = 4 u4 / beta^4 and
/// s1_star = 2 u2 / beta^2.
struct DeformationParams {
    double alpha = 1.0;
    double s1 = 0.0;
    std::optional<double> beta;
    std::optional<double> s3;
    std::optional<double> s1_star;
};

DeformationParams deformation_params(const PotentialExpansion& p);

/// Psi(z, s1) = int e^{-phi^4/4 - s1 phi^2/2 + i phi z} dphi and its
/// derivatives, |z| <= 30.
specfun::FuncResult psi_deformed(double z, double s1, int m = 0);

class ResidualCheckFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Phi(z, s1) solving Phi''' - s1 Phi' + z Phi = 0, real on the real axis
/// and decaying for large positive z, from the rotated-ray contour
/// integral. |z| <= 10. The residual is checked on every call and a value
/// failing 1e-6 throws ResidualCheckFailed.
specfun::FuncResult phi_deformed(double z, double s1, int m = 0);

/// Residual |Phi''' - s1 Phi' + z Phi| at z.
double phi_deformed_residual(double z, double s1);

}  // namespace fzzt::xi
