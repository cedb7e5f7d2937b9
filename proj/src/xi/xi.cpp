#include "fzzt/xi/xi.hpp"

#include "fzzt/quad/quad.hpp"
#include "fzzt/specfun/gamma.hpp"
#include "fzzt/specfun/zeta.hpp"
#include "fzzt/xi/potential.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace fzzt::xi {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kShift = 3.0 * kPi / 16.0;
constexpr int kSeriesTerms = 25;
}  // namespace

double f_ell(double l) {
    if (!(l >= 1.0)) throw std::domain_error("f_ell: l must be >= 1");
    double s = 0.0;
    for (int q = 1; q < 1000; ++q) {
        const double qq = static_cast<double>(q) * q;
        if ((qq - 1.0) * kPi * l > 50.0) break;
        s += (qq * qq * kPi * kPi * l - 1.5 * qq * kPi) * std::exp(-qq * kPi * l);
    }
    return s * std::sqrt(l);
}

CoeffValue a_coeff(int n) {
    if (n < 0 || n > 25) throw std::domain_error("a_coeff: n must be in 0..25");
    auto integrand = [n](double l) -> double {
        const double h = 0.5 * std::log(l);
        return 4.0 * std::pow(l, -0.25) * f_ell(l) * std::pow(h, 2 * n);
    };
    // integrand peaks near l log l = 2n / pi; march out past it
    double upper = 2.0;
    double peak = 0.0;
    for (double l = 1.0; l < 200.0; l += 0.25) {
        const double v = std::abs(integrand(l));
        peak = std::max(peak, v);
        upper = l;
        if (l > 2.0 && v < 1e-20 && v < 1e-3 * peak) break;
    }
    quad::QuadOptions opt;
    opt.abs_tol = 1e-17;
    opt.rel_tol = 1e-14;
    opt.initial_panels = 8;
    const auto r = quad::integrate_adaptive([&](double l) { return std::complex<double>(integrand(l), 0.0); }, 1.0,
                                            upper, opt);
    return CoeffValue{r.value.real(), r.est_error + 1e-20};
}

const std::vector<CoeffValue>& a_coeffs_cached(int nmax) {
    static std::once_flag once;
    static std::vector<CoeffValue> table;
    std::call_once(once, [] {
        for (int n = 0; n <= 25; ++n) table.push_back(a_coeff(n));
    });
    if (nmax < 0 || nmax > 25) throw std::domain_error("a_coeffs_cached: nmax must be in 0..25");
    return table;
}

std::string to_string(XiMethod m) {
    switch (m) {
        case XiMethod::Series: return "series";
        case XiMethod::Quadrature: return "quadrature";
        case XiMethod::ZetaFormula: return "zeta-formula";
    }
    return "unknown";
}

XiMethod parse_xi_method(const std::string& s) {
    if (s == "series") return XiMethod::Series;
    if (s == "quadrature") return XiMethod::Quadrature;
    if (s == "zeta-formula" || s == "zeta") return XiMethod::ZetaFormula;
    throw std::invalid_argument("unknown Xi method '" + s + "'");
}

namespace {

FuncResult xi_series(cplx z) {
    if (std::abs(z) > 25.0) throw std::domain_error("xi_eval(series): |z| > 25");
    const auto& a = a_coeffs_cached();
    const cplx z2 = z * z;
    cplx term_z = 1.0;  // (-1)^n z^{2n} / (2n)!
    cplx sum = 0.0;
    double err = 0.0;
    double last = 0.0;
    for (int n = 0; n <= kSeriesTerms; ++n) {
        sum += a[n].value * term_z;
        err += a[n].error * std::abs(term_z);
        last = std::abs(a[n].value * term_z);
        term_z *= -z2 / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
    }
    return FuncResult{sum, err + last, specfun::Method::Series};
}

FuncResult xi_quadrature(cplx z) {
    if (std::abs(z.imag()) > 3.0) throw std::domain_error("xi_eval(quadrature): |Im z| > 3");
    if (std::abs(z.real()) <= 20.0) {
        auto r = quad::fourier_even(xi_weight, z, 0, 1e-13);
        if (z.imag() == 0.0) r.value = cplx(r.value.real(), 0.0);
        return FuncResult{r.value, r.est_error, specfun::Method::Quadrature};
    }
    // e^{i phi z} with phi -> phi + i theta pulls out e^{-theta z}, which carries
    // most of the decay of Xi; g(-phi + i theta) = conj(g(phi + i theta)).
    const double theta = z.real() > 0.0 ? kShift : -kShift;
    const cplx g0 = xi_kernel(cplx(0.0, theta));
    double cutoff = quad::kWeightCap;
    for (int k = 1; k * 0.05 <= quad::kWeightCap; ++k) {
        if (std::abs(xi_kernel(cplx(k * 0.05, theta))) < quad::kWeightThreshold * std::abs(g0)) {
            cutoff = k * 0.05;
            break;
        }
    }
    const bool real_axis = z.imag() == 0.0;
    auto f = [&](double phi) -> cplx {
        const cplx g = xi_kernel(cplx(phi, theta));
        const cplx e = std::exp(cplx(0.0, 1.0) * phi * z);
        if (real_axis) return 2.0 * (g * e).real();
        return g * e + std::conj(g) * std::exp(-cplx(0.0, 1.0) * phi * z);
    };
    quad::QuadOptions opt;
    opt.abs_tol = 1e-15 * std::abs(g0);
    opt.initial_panels = std::max(4, static_cast<int>(std::ceil(cutoff * std::abs(z.real()) / kPi)) + 1);
    const auto r = quad::integrate_adaptive(f, 0.0, cutoff, opt);
    const cplx factor = std::exp(-theta * z);
    cplx v = r.value * factor;
    if (real_axis) v = cplx(v.real(), 0.0);
    return FuncResult{v, r.est_error * std::abs(factor), specfun::Method::Quadrature};
}

FuncResult xi_zeta(cplx z) {
    if (z.imag() != 0.0) throw std::domain_error("xi_eval(zeta-formula): z must be real");
    const double t = z.real();
    if (std::abs(t) > 60.0) throw std::domain_error("xi_eval(zeta-formula): |z| > 60");
    const cplx i(0.0, 1.0);
    const cplx zeta = specfun::zeta_critical_line(t);
    const cplx gam = specfun::gamma(i * t / 2.0 + 0.25);
    const cplx v = zeta * gam * std::pow(kPi, -0.25) * std::exp(-i * t / 2.0 * std::log(kPi)) * (-t * t / 2.0 - 0.125);
    return FuncResult{v, 1e-10 * std::abs(gam) * (t * t / 2.0 + 0.125), specfun::Method::Series};
}

}  // namespace

FuncResult xi_eval(cplx z, XiMethod method) {
    switch (method) {
        case XiMethod::Series: return xi_series(z);
        case XiMethod::Quadrature: return xi_quadrature(z);
        case XiMethod::ZetaFormula: return xi_zeta(z);
    }
    throw std::invalid_argument("xi_eval: unknown method");
}

std::vector<double> xi_zeros(int count) {
    if (count < 0 || count > 20) throw std::domain_error("xi_zeros: count must be in 0..20");
    auto f = [](double x) { return xi_eval(cplx(x, 0.0), XiMethod::Quadrature).value.real(); };
    std::vector<double> zeros;
    double x0 = 0.0, f0 = f(0.0);
    for (int k = 1; static_cast<int>(zeros.size()) < count; ++k) {
        const double x1 = 0.25 * k;
        if (x1 > 100.0 + 1e-12) throw std::runtime_error("xi_zeros: bracket exhausted on [0, 100]");
        const double f1 = f(x1);
        if ((f0 < 0.0) != (f1 < 0.0)) {
            double lo = x0, hi = x1, flo = f0;
            while (hi - lo > 1e-9) {
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

}  // namespace fzzt::xi
