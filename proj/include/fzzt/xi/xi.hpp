#pragma once

#include "fzzt/specfun/result.hpp"

#include <string>
#include <vector>

namespace fzzt::xi {

using specfun::cplx;
using specfun::FuncResult;

/// f(l) = sum_q (q^4 pi^2 l - 3/2 q^2 pi) l^{1/2} e^{-q^2 pi l}, l >= 1.
/// Terms stop once they are e^{-50} below the q = 1 term.
double f_ell(double l);

struct CoeffValue {
    double value = 0.0;
    double error = 0.0;
};

/// a_{2n} = 4 int_1^inf l^{-1/4} f(l) (log(l)/2)^{2n} dl, 0 <= n <= 25. The
/// upper limit is where the integrand has fallen below 1e-20 past its peak.
CoeffValue a_coeff(int n);

/// a_0 .. a_{2 nmax}, computed once per process and reused.
const std::vector<CoeffValue>& a_coeffs_cached(int nmax = 25);

enum class XiMethod { Series, Quadrature, ZetaFormula };
std::string to_string(XiMethod m);
XiMethod parse_xi_method(const std::string& s);

/// Xi(z) by one of three routes:
///   series       sum_{n<=25} a_{2n} (-1)^n z^{2n} / (2n)!, |z| <= 25
///   quadrature   int e^{-U(phi) + i phi z} dphi, |Im z| <= 3; for |Re z| > 20
///                the contour is shifted to Im phi = sign(Re z) 3 pi / 16
///   zeta-formula zeta(1/2 + iz) Gamma(iz/2 + 1/4) pi^{-1/4} pi^{-iz/2} (-z^2/2 - 1/8),
///                real z, |z| <= 60
/// Out-of-domain arguments throw std::domain_error.
FuncResult xi_eval(cplx z, XiMethod method);

/// Positive real zeros from sign changes of the quadrature evaluator on
/// [0, 100] (step 0.25), bisected to 1e-9. count <= 20; throws
/// std::runtime_error when fewer sign changes exist.
std::vector<double> xi_zeros(int count);

}  // namespace fzzt::xi
