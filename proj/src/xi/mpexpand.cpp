#include "fzzt/xi/mpexpand.hpp"

#include "fzzt/quad/quad.hpp"
#include "fzzt/specfun/mp.hpp"
#include "fzzt/xi/lsq.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fzzt::xi {

MpExpansion mp_fit(int nmax, const std::vector<double>& z, const std::vector<double>& target) {
    if (nmax < 0 || nmax > 32) throw std::domain_error("mp_fit: nmax must be in 0..32");
    if (z.size() != target.size() || z.size() < static_cast<std::size_t>(nmax) + 1)
        throw std::invalid_argument("mp_fit: grid too small or sizes differ");
    const int m = static_cast<int>(z.size());
    const int n = nmax + 1;
    std::vector<RealPoly> basis;
    for (int k = 0; k <= nmax; ++k) basis.push_back(specfun::mp_poly_exact(k).cast<double>());
    std::vector<double> a(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(i) * n + k] = basis[k].eval(z[i]);
    const LsqResult r = lsq_solve(a, m, n, target);
    MpExpansion out;
    out.b = r.x;
    double tmax = 0.0;
    for (double t : target) tmax = std::max(tmax, std::abs(t));
    out.residual = tmax > 0.0 ? r.max_abs_residual / tmax : r.max_abs_residual;
    out.condition = r.normal_condition;
    out.ill_conditioned = r.normal_condition > 1e12;
    return out;
}

MpExpansion mp_expand(int nmax, bool with_integrals) {
    if (nmax < 0 || nmax > 32) throw std::domain_error("mp_expand: nmax must be in 0..32");
    constexpr int points = 400;
    std::vector<double> z(points), t(points);
    for (int i = 0; i < points; ++i) {
        z[i] = -20.0 + 40.0 * i / (points - 1);
        t[i] = xi_eval(z[i], XiMethod::Quadrature).value.real() * std::exp(-std::numbers::pi * z[i] / 4.0);
    }
    MpExpansion out = mp_fit(nmax, z, t);
    if (with_integrals) {
        for (int k = 0; k <= std::min(nmax, 20); ++k) {
            const auto r = quad::i_n_integral(k);
            out.i_n.push_back({r.value.real(), r.est_error});
        }
    }
    return out;
}

}  // namespace fzzt::xi
