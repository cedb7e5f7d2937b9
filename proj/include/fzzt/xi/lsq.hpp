#pragma once

#include <vector>

namespace fzzt::xi {

struct LsqResult {
    std::vector<double> x;
    double residual_norm = 0.0;       // ||A x - b||_2
    double max_abs_residual = 0.0;    // max_i |(A x - b)_i|
    double condition = 0.0;           // max |R_ii| / min |R_ii| after column scaling
    double normal_condition = 0.0;    // condition^2, the normal-equation estimate
};

/// min ||A x - b|| by Householder QR with column equilibration. A is m x n
/// row-major, m >= n.
LsqResult lsq_solve(const std::vector<double>& a, int m, int n, const std::vector<double>& b);

}  // namespace fzzt::xi
