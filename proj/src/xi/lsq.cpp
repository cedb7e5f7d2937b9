#include "fzzt/xi/lsq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fzzt::xi {

LsqResult lsq_solve(const std::vector<double>& a_in, int m, int n, const std::vector<double>& b_in) {
    if (m < n || n < 1 || a_in.size() != static_cast<std::size_t>(m) * n || b_in.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("lsq_solve: bad dimensions");
    auto at = [n](std::vector<double>& a, int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    std::vector<double> a = a_in, b = b_in;
    std::vector<double> scale(static_cast<std::size_t>(n), 1.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += at(a, i, j) * at(a, i, j);
        s = std::sqrt(s);
        if (s == 0.0) throw std::domain_error("lsq_solve: zero column");
        scale[j] = s;
        for (int i = 0; i < m; ++i) at(a, i, j) /= s;
    }
    std::vector<double> rdiag(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double norm = 0.0;
        for (int i = k; i < m; ++i) norm = std::hypot(norm, at(a, i, k));
        if (norm == 0.0) throw std::domain_error("lsq_solve: rank deficient");
        if (at(a, k, k) > 0.0) norm = -norm;
        // v = x - norm e_k, stored in place
        at(a, k, k) -= norm;
        const double vkk = at(a, k, k);
        const double beta = -1.0 / (norm * vkk);  // 2 / v^T v
        for (int j = k + 1; j < n; ++j) {
            double s = 0.0;
            for (int i = k; i < m; ++i) s += at(a, i, k) * at(a, i, j);
            s *= beta;
            for (int i = k; i < m; ++i) at(a, i, j) -= s * at(a, i, k);
        }
        double s = 0.0;
        for (int i = k; i < m; ++i) s += at(a, i, k) * b[i];
        s *= beta;
        for (int i = k; i < m; ++i) b[i] -= s * at(a, i, k);
        rdiag[k] = norm;
    }
    LsqResult res;
    res.x.assign(static_cast<std::size_t>(n), 0.0);
    for (int k = n - 1; k >= 0; --k) {
        double s = b[k];
        for (int j = k + 1; j < n; ++j) s -= at(a, k, j) * res.x[j];
        res.x[k] = s / rdiag[k];
    }
    for (int j = 0; j < n; ++j) res.x[j] /= scale[j];
    double rmax = 0.0, rmin = INFINITY;
    for (double r : rdiag) {
        rmax = std::max(rmax, std::abs(r));
        rmin = std::min(rmin, std::abs(r));
    }
    res.condition = rmax / rmin;
    res.normal_condition = res.condition * res.condition;
    double ss = 0.0;
    for (int i = 0; i < m; ++i) {
        double r = -b_in[i];
        for (int j = 0; j < n; ++j) r += a_in[static_cast<std::size_t>(i) * n + j] * res.x[j];
        ss += r * r;
        res.max_abs_residual = std::max(res.max_abs_residual, std::abs(r));
    }
    res.residual_norm = std::sqrt(ss);
    return res;
}

}  // namespace fzzt::xi
