#include "fzzt/specfun/genairy.hpp"

#include "fzzt/quad/quad.hpp"
#include "fzzt/specfun/hyp.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fzzt::specfun {

namespace {

using lcplx = std::complex<long double>;

constexpr long double kGammaQuarter = 3.625609908221908311930685155867672L;
constexpr long double kGammaThreeQuarter = 1.225416702465177645129098303362890L;
constexpr long double kInvSqrt2 = 0.707106781186547524400844362104849L;

cplx to_c(lcplx v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

double largest_cubic_root(double z, double s1) {
    // t^3 - s1 t - z, z > 0; convex for t > 0, so Newton from the right
    // converges monotonically to the largest root
    double t = std::cbrt(z) + std::sqrt(std::abs(s1)) + 1.0;
    for (int it = 0; it < 200; ++it) {
        const double f = t * t * t - s1 * t - z;
        const double df = 3.0 * t * t - s1;
        const double step = f / df;
        t -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(t))) break;
    }
    return t;
}

}  // namespace

FuncResult gen_airy_phi(cplx z, int m) {
    if (std::abs(z) > 10.0) throw std::domain_error("gen_airy_phi: |z| > 10");
    if (m < 0 || m > 6) throw std::invalid_argument("gen_airy_phi: derivative order must be in 0..6");
    constexpr double kappa = -1.0 / 64.0;
    const cplx v = kPhiA * hyp0f2_power_deriv(0, 0.5, 0.75, kappa, z, m) +
                   kPhiB * hyp0f2_power_deriv(2, 1.25, 1.5, kappa, z, m) +
                   kPhiC * hyp0f2_power_deriv(1, 0.75, 1.25, kappa, z, m);
    // extended-precision sums; error dominated by the frozen constants
    return FuncResult{v, 4e-16 * std::max(1.0, std::abs(v)), Method::Hypergeometric};
}

FuncResult gen_airy_phi_contour(double z, double s1, int m) {
    if (m < 0 || m > 6) throw std::invalid_argument("gen_airy_phi_contour: derivative order must be in 0..6");
    const double x0 = z > 0.0 ? largest_cubic_root(z, s1) : 0.0;
    const cplx w = std::polar(1.0, std::numbers::pi / 4.0);
    auto f = [&](double r) -> cplx {
        const cplx t = x0 + r * w;
        const cplx t2 = t * t;
        const cplx e = std::exp(0.25 * t2 * t2 - 0.5 * s1 * t2 - z * t);
        return std::pow(-t, m) * e * w;
    };
    quad::QuadOptions opt;
    opt.abs_tol = 1e-16;
    opt.rel_tol = 1e-14;
    const auto r = quad::integrate_adaptive(f, 0.0, std::numeric_limits<double>::infinity(), opt);
    return FuncResult{cplx(r.value.imag() / std::numbers::pi, 0.0), r.est_error / std::numbers::pi, Method::Quadrature};
}

FuncResult gen_airy_psi(cplx z, int m) {
    if (std::abs(z) > 12.0) throw std::domain_error("gen_airy_psi: |z| > 12");
    if (m < 0 || m > 6) throw std::invalid_argument("gen_airy_psi: derivative order must be in 0..6");
    const lcplx lz(z.real(), z.imag());
    const bool zero = std::abs(lz) == 0.0L;
    const long double r2 = std::norm(lz);
    long double c[2] = {kGammaQuarter * kInvSqrt2, -kGammaThreeQuarter * kInvSqrt2};
    lcplx sum = 0.0L;
    long double mag = 0.0L;
    const lcplx z2 = lz * lz;
    lcplx zpow[2] = {1.0L, z2};  // z^{2k} for the two interleaved chains
    for (int j = 0; j < 2000; ++j) {
        long double biggest = 0.0L;
        for (int chain = 0; chain < 2; ++chain) {
            const int k = 2 * j + chain;
            const int e = 2 * k;
            long double ff = 1.0L;
            for (int q = 0; q < m; ++q) ff *= static_cast<long double>(e - q);
            lcplx term = 0.0L;
            if (ff != 0.0L) {
                if (zero) {
                    term = e == m ? lcplx(c[chain] * ff) : lcplx(0.0L);
                } else {
                    lcplx zp = zpow[chain];
                    for (int q = 0; q < m; ++q) zp /= lz;
                    term = c[chain] * ff * zp;
                }
            }
            sum += term;
            mag = std::max(mag, std::abs(term));
            biggest = std::max(biggest, std::abs(term));
            c[chain] *= 4.0L * (0.25L + k / 2.0L) / ((2.0L * k + 1) * (2.0L * k + 2) * (2.0L * k + 3) * (2.0L * k + 4));
            zpow[chain] *= z2 * z2;
        }
        if (zero && 4 * j > m) break;
        if (4 * j > r2 && biggest < 1e-17L * std::max(std::abs(sum), std::numeric_limits<long double>::min())) break;
    }
    return FuncResult{to_c(sum), static_cast<double>(64.0L * std::numeric_limits<long double>::epsilon() * mag),
                      Method::Series};
}

FuncResult gen_airy_psi_hyp(cplx z) {
    const cplx x = std::pow(z, 4) / 64.0;
    const double g14 = static_cast<double>(kGammaQuarter), g34 = static_cast<double>(kGammaThreeQuarter);
    const cplx v = (g14 * hyp0f2(0.5, 0.75, x) - g34 * z * z * hyp0f2(1.25, 1.5, x)) / std::sqrt(2.0);
    return FuncResult{v, 1e-15 * std::max(1.0, std::abs(v)), Method::Hypergeometric};
}

std::vector<double> gen_airy_phi_zeros(int count) {
    std::vector<double> zeros;
    auto f = [](double x) { return gen_airy_phi(cplx(x, 0.0)).value.real(); };
    const double step = 0.01;
    double x0 = 0.0, f0 = f(x0);
    while (static_cast<int>(zeros.size()) < count) {
        const double x1 = x0 - step;
        if (x1 < -10.0) throw std::runtime_error("gen_airy_phi_zeros: fewer zeros than requested on [-10, 0)");
        const double f1 = f(x1);
        if ((f0 < 0.0) != (f1 < 0.0)) {
            double lo = x1, hi = x0, flo = f1;
            for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    return zeros;
}

}  // namespace fzzt::specfun
