#pragma once

#include "fzzt/mastermat/matrix.hpp"

#include <span>

namespace fzzt::mastermat {

/// Gaussian (2,1) master matrix: symmetric tridiagonal with off-diagonal
/// sqrt(g/2) sqrt(k), k = 1..n-1. The exact squared products g k / 2 are
/// kept alongside the binary64 entries.
StructuredMatrix build_master_21(int n, const Rational& g);
StructuredMatrix build_master_21(int n, double g);

/// (3,1) master matrix, 1-based:
///   M(i,j) = (i-1)(i-2) [i = j+2] + 3(i-1) [i = j+1] + g [i+1 = j].
StructuredMatrix build_master_31(int n, const Rational& g);
StructuredMatrix build_master_31(int n, double g);

/// (3,1) master matrix with superdiagonal coupling (1/n)(1 + s1/sqrt(n)).
StructuredMatrix build_master_31_deformed(int n, double s1);
double deformed_coupling(int n, double s1);

/// Meixner-Pollaczek recurrence matrix: subdiagonal c_i = i(i + 1/2),
/// i = 1..n-1, superdiagonal 1.
StructuredMatrix build_mp_matrix(int n);

/// MP matrix whose last row also carries -b_j / b_n in column j, so that
/// det(zI - M) = (1/b_n) sum_k b_k p_k(z). Requires b.size() == n + 1.
StructuredMatrix build_bordered_mp(int n, std::span<const double> b);

}  // namespace fzzt::mastermat
