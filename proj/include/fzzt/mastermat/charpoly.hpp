#pragma once

#include "fzzt/exact/poly.hpp"
#include "fzzt/mastermat/matrix.hpp"

#include <variant>

namespace fzzt::mastermat {

/// det(zI - M) over the rationals. Throws std::invalid_argument for floating
/// matrices. Tridiagonal inputs use the three-term recurrence on the
/// off-diagonal products; Hessenberg and bordered inputs use the row
/// expansion that is valid for upper bandwidth one.
RatPoly charpoly_exact(const StructuredMatrix& m);

/// Same recurrences in binary64. Works for every matrix; for exact matrices
/// the rational entries are rounded first.
RealPoly charpoly_real(const StructuredMatrix& m);

/// Exact when the matrix is exact, floating otherwise.
std::variant<RatPoly, RealPoly> charpoly(const StructuredMatrix& m);

}  // namespace fzzt::mastermat
