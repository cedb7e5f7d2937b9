#pragma once

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace fzzt::quad {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double est_error = 0.0;
    long evals = 0;
    bool converged = true;  // false: subdivision limit reached, value is the best available
    std::map<std::string, double> meta;
};

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;
    int max_subdivisions = 4000;
    int initial_panels = 1;
};

using Integrand = std::function<std::complex<double>(double)>;

/// Globally adaptive Gauss-Kronrod (10/21) on [a, b]. Either end may be
/// infinite; such ranges are mapped onto finite ones (x = t/(1-t^2) for the
/// whole line, x = a + t/(1-t) for half lines). The error estimate is
/// |K21 - G10| per panel, floored at the rounding level.
QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadOptions& opt = {});

class DecayNotDetected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Truncation constants used by fourier_even; reported in QuadResult::meta.
inline constexpr double kWeightThreshold = 1e-18;
inline constexpr double kWeightCap = 60.0;

/// F^{(m)}(z) = int_R (i phi)^m w(phi) e^{i phi z} dphi for an even weight w,
/// folded to [0, L]: 2 i^m int phi^m w cos(phi z) for even m and
/// 2 i^{m+1} int phi^m w sin(phi z) for odd m. L is the first point of a
/// 0.05 grid where w < 1e-18 w(0); failing that by phi = 60 throws
/// DecayNotDetected. The weight is only evaluated at phi >= 0.
QuadResult fourier_even(const std::function<double(double)>& w, std::complex<double> z, int m, double tol = 1e-12);

/// I_n = int_0^inf sin(y^2/2 + pi/8) y^{2n+1} / (e^{2 sqrt(pi) y} + 1) dy,
/// 0 <= n <= 20. Panels break at y_k = sqrt(k pi / 2), eight per period of
/// the phase; panel sums are compensated. Throws std::domain_error for n > 20.
QuadResult i_n_integral(int n, double tol = 1e-12);

}  // namespace fzzt::quad
