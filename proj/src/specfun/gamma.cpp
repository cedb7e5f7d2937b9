#include "fzzt/specfun/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fzzt::specfun {

std::string to_string(Method m) {
    switch (m) {
        case Method::Series: return "series";
        case Method::Quadrature: return "quadrature";
        case Method::Recurrence: return "recurrence";
        case Method::Hypergeometric: return "hypergeometric";
    }
    return "unknown";
}

namespace {

constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
                                            771.32342877765313,      -176.61502916214059,   12.507343278686905,
                                            -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos(cplx z) {
    // Gamma(z + 1) for Re z >= -1/2
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + kG + 0.5;
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return std::exp(half_log_2pi + (z + 0.5) * std::log(t) - t) * x;
}

}  // namespace

cplx gamma(cplx x) {
    if (x.imag() == 0.0 && x.real() <= 0.0 && x.real() == std::floor(x.real()))
        throw std::domain_error("gamma: pole at a nonpositive integer");
    if (x.real() < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * x) * lanczos(-x));  // Gamma(1 - x) = lanczos(-x)
    }
    return lanczos(x - 1.0);
}

double gamma(double x) { return gamma(cplx(x, 0.0)).real(); }

}  // namespace fzzt::specfun
