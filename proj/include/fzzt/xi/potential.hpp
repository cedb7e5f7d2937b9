#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fzzt::xi {

// The kernel of Xi(z) = int g(phi) e^{i phi z} dphi is
//   g(phi) = 2 sum_k (2 pi^2 k^4 e^{9 phi/2} - 3 pi k^2 e^{5 phi/2}) e^{-pi k^2 e^{2 phi}},
// even in phi, and U = -log g.

/// U(phi) for |phi| <= 40. Evaluated for |phi| with the leading factor
/// e^{-pi e^{2 phi}} pulled out of the sum, so nothing underflows.
double u_potential(double phi);

/// e^{-U(phi)}.
double xi_weight(double phi);

/// g(w) for complex w with Re e^{2w} > 0, summed directly.
std::complex<double> xi_kernel(std::complex<double> w);

/// U(phi) by the plain k-sum with no reflection. Negative phi cancels
/// catastrophically, so this is meant for multiprecision T. The sum runs
/// until pi k^2 e^{2 phi} exceeds 50 + 2.31 * digits10(T).
template <class T>
T u_potential_direct(const T& phi) {
    using std::acos;
    using std::exp;
    using std::log;
    const T pi = acos(T(-1));
    const T e2 = exp(2 * phi);
    const T e92 = exp(phi * 9 / 2);
    const T e52 = exp(phi * 5 / 2);
    const double cutoff = 50.0 + 2.31 * std::numeric_limits<T>::digits10;
    T s = 0;
    for (long k = 1; k < 100000000; ++k) {
        const T kk = T(k) * k;
        const T a = pi * kk * e2;
        s += (2 * pi * pi * kk * kk * e92 - 3 * pi * kk * e52) * exp(-a);
        if (a > cutoff) break;
    }
    if (!(s > 0)) throw std::domain_error("u_potential_direct: nonpositive sum (insufficient precision)");
    return -log(2 * s);
}

/// Even-power expansion U ~ u0 + u2 phi^2 + u4 phi^4 + ...
struct PotentialExpansion {
    double u0 = 0.0;
    std::vector<double> coeffs;  // u2, u4, ..., u_order
    std::vector<double> errors;  // per coefficient, from the h-refinement
    int order = 0;
    double fit_residual = 0.0;

    static PotentialExpansion from_coeffs(std::vector<double> even_coeffs, double u0 = 0.0);
    double u(int power) const;  // u_{power}, 0 beyond the order
};

/// Fits an even polynomial to the potential on 81 points of [-h, h] for
/// h = 0.4 and h = 0.2 and reports the h = 0.2 coefficients up to `order`.
/// The fit uses even powers up to phi^16 in the scaled variable phi/h;
/// the shift between the two fits is the error bar.
PotentialExpansion u_taylor(int order, const std::function<double(double)>& potential = u_potential);

}  // namespace fzzt::xi
