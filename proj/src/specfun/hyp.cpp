#include "fzzt/specfun/hyp.hpp"

#include <cmath>
#include <stdexcept>

namespace fzzt::specfun {

namespace {

using lcplx = std::complex<long double>;

void check_param(double b) {
    if (b <= 0.0 && b == std::floor(b)) throw std::domain_error("hyp0f2: parameter is a nonpositive integer");
}

constexpr int kMaxTerms = 4000;

}  // namespace

cplx hyp0f2(double b1, double b2, cplx x) {
    check_param(b1);
    check_param(b2);
    if (std::abs(x) > 1e4) throw std::domain_error("hyp0f2: |x| > 1e4");
    const lcplx lx(x.real(), x.imag());
    lcplx term = 1.0L, sum = 1.0L;
    const double hump = std::cbrt(std::abs(x));
    for (int n = 0; n < kMaxTerms; ++n) {
        term *= lx / ((b1 + n) * (b2 + n) * static_cast<long double>(n + 1));
        sum += term;
        if (n + 1 > hump && std::abs(term) < 1e-17L * std::abs(sum)) break;
        if (term == 0.0L) break;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

cplx hyp0f2_power_deriv(int p, double b1, double b2, double kappa, cplx z, int m) {
    check_param(b1);
    check_param(b2);
    if (p < 0 || m < 0) throw std::invalid_argument("hyp0f2_power_deriv: p and m must be >= 0");
    const lcplx lz(z.real(), z.imag());
    if (std::abs(lz) == 0.0L) {
        // only the z^m term survives: coefficient from p + 4n == m
        if ((m - p) < 0 || (m - p) % 4 != 0) return 0.0;
        const int n = (m - p) / 4;
        long double c = 1.0L;
        for (int k = 0; k < n; ++k) c *= kappa / ((b1 + k) * (b2 + k) * static_cast<long double>(k + 1));
        for (int k = 1; k <= m; ++k) c *= k;
        return static_cast<double>(c);
    }
    const lcplx z4 = lz * lz * lz * lz;
    lcplx coef = 1.0L;
    lcplx sum = 0.0L;
    const double hump = std::abs(z) * std::abs(z);
    for (int n = 0; n < kMaxTerms; ++n) {
        const int e = p + 4 * n;
        if (n > 0) coef *= static_cast<long double>(kappa) * z4 / ((b1 + n - 1) * (b2 + n - 1) * static_cast<long double>(n));
        long double ff = 1.0L;
        for (int k = 0; k < m; ++k) ff *= static_cast<long double>(e - k);
        lcplx term = 0.0L;
        if (ff != 0.0L) {
            // coef carries z^{4n}; multiply by z^{p-m}
            lcplx zp = 1.0L;
            const int pow = p - m;
            if (pow >= 0)
                for (int k = 0; k < pow; ++k) zp *= lz;
            else
                for (int k = 0; k < -pow; ++k) zp /= lz;
            term = coef * ff * zp;
        }
        sum += term;
        if (n > hump && ff != 0.0L && std::abs(term) < 1e-17L * std::abs(sum)) break;
        if (coef == 0.0L) break;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

}  // namespace fzzt::specfun
