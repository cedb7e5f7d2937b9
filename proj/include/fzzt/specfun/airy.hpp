#pragma once

#include "fzzt/specfun/result.hpp"

#include <vector>

namespace fzzt::specfun {

struct AiryValue {
    cplx ai, dai, d2ai;
    double est_error = 0.0;
    Method method = Method::Series;
};

/// Maclaurin series for |z| <= 10 (accumulated in extended precision,
/// derivatives term by term), contour quadrature through the saddle points
/// beyond that.
AiryValue airy_ai_all(cplx z);
FuncResult airy_ai(cplx z);

/// The first `count` zeros on the negative real axis, ascending in |z|.
std::vector<double> airy_ai_zeros(int count);

}  // namespace fzzt::specfun
