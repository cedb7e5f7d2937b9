#pragma once

#include <complex>
#include <string>

namespace fzzt::specfun {

using cplx = std::complex<double>;

enum class Method { Series, Quadrature, Recurrence, Hypergeometric };
std::string to_string(Method m);

struct FuncResult {
    cplx value{0.0, 0.0};
    double est_error = 0.0;
    Method method = Method::Series;
};

}  // namespace fzzt::specfun
