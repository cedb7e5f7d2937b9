#include "fzzt/xi/potential.hpp"

#include "fzzt/xi/lsq.hpp"

#include <algorithm>
#include <numbers>

namespace fzzt::xi {

namespace {
constexpr double kPi = std::numbers::pi;
}

double u_potential(double phi) {
    if (!(std::abs(phi) <= 40.0)) throw std::domain_error("u_potential: |phi| > 40");
    const double p = std::abs(phi);  // U is even
    const double e2 = std::exp(2.0 * p);
    const double e92 = std::exp(4.5 * p);
    const double e52 = std::exp(2.5 * p);
    // g = 2 e^{-pi e^{2p}} sum_k (2 pi^2 k^4 e^{9p/2} - 3 pi k^2 e^{5p/2}) e^{-pi (k^2 - 1) e^{2p}}
    double s = 0.0;
    for (int k = 1; k < 1000; ++k) {
        const double kk = static_cast<double>(k) * k;
        const double damp = kPi * (kk - 1.0) * e2;
        if (damp > 50.0 && k > 1) break;
        s += (2.0 * kPi * kPi * kk * kk * e92 - 3.0 * kPi * kk * e52) * std::exp(-damp);
    }
    if (!(s > 0.0)) throw std::domain_error("u_potential: argument of the logarithm is not positive");
    return kPi * e2 - std::log(2.0 * s);
}

double xi_weight(double phi) {
    if (std::abs(phi) > 40.0) return 0.0;
    return std::exp(-u_potential(phi));
}

std::complex<double> xi_kernel(std::complex<double> w) {
    const std::complex<double> e2 = std::exp(2.0 * w);
    if (!(e2.real() > 0.0)) throw std::domain_error("xi_kernel: Re e^{2w} must be positive");
    const std::complex<double> e92 = std::exp(4.5 * w);
    const std::complex<double> e52 = std::exp(2.5 * w);
    std::complex<double> s = 0.0;
    for (int k = 1; k < 100000; ++k) {
        const double kk = static_cast<double>(k) * k;
        const double decay = kPi * kk * e2.real();
        s += (2.0 * kPi * kPi * kk * kk * e92 - 3.0 * kPi * kk * e52) * std::exp(-kPi * kk * e2);
        if (decay - kPi * e2.real() > 50.0) break;
    }
    return 2.0 * s;
}

PotentialExpansion PotentialExpansion::from_coeffs(std::vector<double> even_coeffs, double u0) {
    PotentialExpansion p;
    p.u0 = u0;
    p.order = 2 * static_cast<int>(even_coeffs.size());
    p.errors.assign(even_coeffs.size(), 0.0);
    p.coeffs = std::move(even_coeffs);
    return p;
}

double PotentialExpansion::u(int power) const {
    if (power == 0) return u0;
    if (power < 0 || power % 2 != 0) return 0.0;
    const std::size_t i = static_cast<std::size_t>(power / 2 - 1);
    return i < coeffs.size() ? coeffs[i] : 0.0;
}

namespace {

struct EvenFit {
    std::vector<double> c;  // c[k] multiplies phi^{2k}
    double max_residual;
};

EvenFit fit_even(const std::function<double(double)>& f, double h) {
    constexpr int points = 81;
    constexpr int terms = 9;  // phi^0 .. phi^16
    std::vector<double> a(static_cast<std::size_t>(points) * terms), b(points);
    for (int i = 0; i < points; ++i) {
        const double phi = -h + 2.0 * h * i / (points - 1);
        const double x = phi / h;
        double p = 1.0;
        for (int k = 0; k < terms; ++k) {
            a[static_cast<std::size_t>(i) * terms + k] = p;
            p *= x * x;
        }
        b[i] = f(phi);
    }
    const LsqResult r = lsq_solve(a, points, terms, b);
    EvenFit out{r.x, r.max_abs_residual};
    double hp = 1.0;
    for (int k = 0; k < terms; ++k) {
        out.c[k] /= hp;
        hp *= h * h;
    }
    return out;
}

}  // namespace

PotentialExpansion u_taylor(int order, const std::function<double(double)>& potential) {
    if (order != 2 && order != 4 && order != 6 && order != 8)
        throw std::invalid_argument("u_taylor: order must be 2, 4, 6 or 8");
    const EvenFit coarse = fit_even(potential, 0.4);
    const EvenFit fine = fit_even(potential, 0.2);
    PotentialExpansion p;
    p.order = order;
    p.u0 = fine.c[0];
    for (int k = 1; k <= order / 2; ++k) {
        p.coeffs.push_back(fine.c[k]);
        p.errors.push_back(std::abs(fine.c[k] - coarse.c[k]));
    }
    p.fit_residual = std::max(fine.max_residual, coarse.max_residual);
    return p;
}

}  // namespace fzzt::xi
