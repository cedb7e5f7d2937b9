#pragma once

#include "fzzt/mastermat/matrix.hpp"

#include <vector>

namespace fzzt::spectra {

struct ScalingReport {
    mastermat::Model model = mastermat::Model::Gaussian21;
    double exponent = 0.0;  // 1/3 for gaussian21, 1/4 for minimal31
    std::vector<int> n_list;
    // Per N: the lowest few eigenvalues mapped through w = N^exponent (z + 1).
    std::vector<std::vector<double>> scaled_edge;
    // Airy zeros (gaussian21) or zeros of the quartic Airy function Phi
    // (minimal31), ordered from the edge outwards.
    std::vector<double> reference_zeros;
    // (w2 - w1)/(w3 - w2) per N, and the same ratio of the reference zeros.
    std::vector<double> gap_ratios;
    double reference_gap_ratio = 0.0;
    // |gap_ratio - reference| / reference per N.
    std::vector<double> relative_errors;
    // Contraction of the relative error between consecutive N
    // (err[i+1] / err[i]); empty when the list has a single entry.
    std::vector<double> convergence;
    bool all_real = true;
};

/// g = 1/N throughout. Gap ratios are invariant under the affine edge map,
/// so they are compared instead of absolute positions.
ScalingReport scaling_report(mastermat::Model model, const std::vector<int>& n_list, int edge_count = 5);

}  // namespace fzzt::spectra
