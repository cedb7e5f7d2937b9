#include "fzzt/specfun/airy.hpp"

#include "fzzt/quad/quad.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fzzt::specfun {

namespace {

using lcplx = std::complex<long double>;

// Ai(0) and -Ai'(0)
constexpr long double kC1 = 0.355028053887817239260063186004183176L;
constexpr long double kC2 = 0.258819403792806798405183560189203964L;
constexpr double kSeriesRadius = 10.0;

cplx to_c(lcplx v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

// Ai = sum a_n z^n with a_0 = c1, a_1 = -c2, a_2 = 0, a_{n+3} = a_n / ((n+2)(n+3)).
AiryValue series(cplx z) {
    const lcplx lz(z.real(), z.imag());
    const long double r2 = std::norm(lz);
    lcplx s0 = 0.0L, s1 = 0.0L, s2 = 0.0L;
    long double mag = 0.0L;
    // two interleaved chains: n = 0, 3, 6, ... and n = 1, 4, 7, ...
    long double a[2] = {kC1, -kC2};
    lcplx zn[2] = {1.0L, lz};
    const lcplx z3 = lz * lz * lz;
    // powers z^{n-1}, z^{n-2} are formed as zn / z, guarded at z = 0
    const bool zero = std::abs(lz) == 0.0L;
    for (int k = 0; k < 3000; ++k) {
        long double biggest = 0.0L;
        for (int c = 0; c < 2; ++c) {
            const int n = 3 * k + c;
            const lcplx t = a[c] * zn[c];
            s0 += t;
            if (n >= 1) s1 += zero ? (n == 1 ? lcplx(a[c]) : lcplx(0.0L)) : static_cast<long double>(n) * t / lz;
            if (n >= 2)
                s2 += zero ? lcplx(0.0L) : static_cast<long double>(n) * (n - 1) * t / (lz * lz);
            mag = std::max(mag, std::abs(t));
            biggest = std::max(biggest, std::abs(t) * (1.0L + n * n / std::max(1.0L, std::sqrt(r2))));
            a[c] /= static_cast<long double>((n + 2) * (n + 3));
            zn[c] *= z3;
        }
        const int n = 3 * k;
        const long double ref = std::max({std::abs(s0), std::abs(s1), std::abs(s2), std::numeric_limits<long double>::min()});
        if (n > r2 && biggest < 1e-17L * ref) break;
        if (zero && k > 1) break;
    }
    AiryValue v;
    v.ai = to_c(s0);
    v.dai = to_c(s1);
    v.d2ai = to_c(s2);
    v.est_error = static_cast<double>(64.0L * std::numeric_limits<long double>::epsilon() * mag);
    v.method = Method::Series;
    return v;
}

// (1/2 pi i) int_C t^k e^{t^3/3 - z t} dt, C from inf e^{-i pi/3} to inf e^{i pi/3}.
AiryValue contour(cplx z) {
    const cplx w_up = std::polar(1.0, std::numbers::pi / 3.0);
    const cplx w_dn = std::conj(w_up);
    const cplx two_pi_i(0.0, 2.0 * std::numbers::pi);
    quad::QuadOptions opt;
    opt.abs_tol = 0.0;
    opt.rel_tol = 1e-14;
    cplx out[3];
    double err = 0.0;
    auto kernel = [&](cplx t, int k) { return std::pow(t, k) * std::exp(t * t * t / 3.0 - z * t); };
    for (int k = 0; k < 3; ++k) {
        cplx total = 0.0;
        if (z.real() <= 0.0) {
            const double y = std::sqrt(std::abs(z));
            const cplx p_up(0.0, y), p_dn(0.0, -y);
            auto seg = quad::integrate_adaptive([&](double s) { return kernel(cplx(0.0, s), k) * cplx(0.0, 1.0); }, -y, y, opt);
            auto up = quad::integrate_adaptive([&](double r) { return kernel(p_up + r * w_up, k) * w_up; }, 0.0,
                                               std::numeric_limits<double>::infinity(), opt);
            auto dn = quad::integrate_adaptive([&](double r) { return kernel(p_dn + r * w_dn, k) * w_dn; }, 0.0,
                                               std::numeric_limits<double>::infinity(), opt);
            total = seg.value + up.value - dn.value;
            err += seg.est_error + up.est_error + dn.est_error;
        } else {
            const cplx p = std::sqrt(z);
            auto up = quad::integrate_adaptive([&](double r) { return kernel(p + r * w_up, k) * w_up; }, 0.0,
                                               std::numeric_limits<double>::infinity(), opt);
            auto dn = quad::integrate_adaptive([&](double r) { return kernel(p + r * w_dn, k) * w_dn; }, 0.0,
                                               std::numeric_limits<double>::infinity(), opt);
            total = up.value - dn.value;
            err += up.est_error + dn.est_error;
        }
        out[k] = total / two_pi_i;
    }
    AiryValue v;
    v.ai = out[0];
    v.dai = -out[1];
    v.d2ai = out[2];
    v.est_error = err / (2.0 * std::numbers::pi);
    v.method = Method::Quadrature;
    return v;
}

}  // namespace

AiryValue airy_ai_all(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::domain_error("airy_ai: non-finite argument");
    return std::abs(z) <= kSeriesRadius ? series(z) : contour(z);
}

FuncResult airy_ai(cplx z) {
    const AiryValue v = airy_ai_all(z);
    return FuncResult{v.ai, v.est_error, v.method};
}

std::vector<double> airy_ai_zeros(int count) {
    if (count < 0) throw std::invalid_argument("airy_ai_zeros: count must be >= 0");
    std::vector<double> zeros;
    auto f = [](double x) { return airy_ai(cplx(x, 0.0)).value.real(); };
    const double step = 0.05;
    double x0 = 0.0, f0 = f(x0);
    while (static_cast<int>(zeros.size()) < count) {
        const double x1 = x0 - step;
        const double f1 = f(x1);
        if (f0 == 0.0) {
            zeros.push_back(x0);
        } else if ((f0 < 0.0) != (f1 < 0.0)) {
            double lo = x1, hi = x0, flo = f1;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
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
        if (x0 < -200.0) throw std::runtime_error("airy_ai_zeros: search range exhausted");
    }
    return zeros;
}

}  // namespace fzzt::specfun
