#include "fzzt/spectra/scaling.hpp"

#include "fzzt/mastermat/builders.hpp"
#include "fzzt/spectra/eigen.hpp"
#include "fzzt/specfun/airy.hpp"
#include "fzzt/specfun/genairy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fzzt::spectra {

namespace {

double gap_ratio(double a, double b, double c) { return (b - a) / (c - b); }

}  // namespace

ScalingReport scaling_report(mastermat::Model model, const std::vector<int>& n_list, int edge_count) {
    if (model != mastermat::Model::Gaussian21 && model != mastermat::Model::Minimal31)
        throw std::invalid_argument("scaling_report: model must be gaussian21 or minimal31");
    if (n_list.empty()) throw std::invalid_argument("scaling_report: empty N list");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 4) throw std::invalid_argument("scaling_report: N values must be >= 4");
        if (i > 0 && n_list[i] <= n_list[i - 1]) throw std::invalid_argument("scaling_report: N list must increase");
    }
    edge_count = std::max(edge_count, 3);

    ScalingReport rep;
    rep.model = model;
    rep.n_list = n_list;
    const bool airy = model == mastermat::Model::Gaussian21;
    rep.exponent = airy ? 1.0 / 3.0 : 0.25;
    // three zeros fix the first gap ratio; Phi has only four inside its evaluation range
    rep.reference_zeros = airy ? specfun::airy_ai_zeros(3) : specfun::gen_airy_phi_zeros(3);
    // zeros run from the edge outwards (decreasing), eigenvalues from the low edge inwards (increasing)
    const auto& a = rep.reference_zeros;
    rep.reference_gap_ratio = gap_ratio(-a[0], -a[1], -a[2]);

    for (int n : n_list) {
        const auto m = airy ? mastermat::build_master_21(n, 1.0 / n) : mastermat::build_master_31(n, 1.0 / n);
        const SpectrumReport sr = eigenvalues(m);
        if (sr.classification != Classification::AllReal || !sr.converged) rep.all_real = false;
        std::vector<double> re;
        for (const auto& z : sr.eigenvalues) re.push_back(z.real());
        std::sort(re.begin(), re.end());
        const double scale = std::pow(static_cast<double>(n), rep.exponent);
        std::vector<double> w;
        for (int k = 0; k < edge_count && k < n; ++k) w.push_back(scale * (re[k] + 1.0));
        const double gr = gap_ratio(w[0], w[1], w[2]);
        rep.scaled_edge.push_back(std::move(w));
        rep.gap_ratios.push_back(gr);
        rep.relative_errors.push_back(std::abs(gr - rep.reference_gap_ratio) / rep.reference_gap_ratio);
    }
    for (std::size_t i = 1; i < rep.relative_errors.size(); ++i) {
        const double prev = rep.relative_errors[i - 1];
        rep.convergence.push_back(prev > 0.0 ? rep.relative_errors[i] / prev : 0.0);
    }
    return rep;
}

}  // namespace fzzt::spectra
