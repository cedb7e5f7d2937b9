#include "fzzt/specfun/zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fzzt::specfun {

cplx zeta_critical_line(double t) {
    if (!(std::abs(t) <= 60.0)) throw std::domain_error("zeta_critical_line: |t| > 60");
    const double at = std::abs(t);
    const int n = static_cast<int>(std::ceil((std::numbers::pi * at / 2.0 + std::log(1.0 + 2.0 * at) + 30.0) /
                                             std::log(3.0 + std::sqrt(8.0)))) + 1;
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    double term = 1.0 / n, acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        acc += term;
        d[static_cast<std::size_t>(i)] = n * acc;
        term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
    }
    const cplx s(0.5, t);
    const double dn = d[static_cast<std::size_t>(n)];
    cplx eta = 0.0;
    for (int k = 0; k < n; ++k) {
        const double w = (d[static_cast<std::size_t>(k)] - dn) / dn;
        const cplx v = w * std::exp(-s * std::log(k + 1.0));
        eta += (k % 2 == 0) ? v : -v;
    }
    eta = -eta;
    return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

}  // namespace fzzt::specfun
