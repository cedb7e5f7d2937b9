#pragma once

#include "fzzt/exact/poly.hpp"

namespace fzzt::mastermat {

/// Q_N(z) = g^N d^N/dx^N exp(-(1/g)(x^3/3 + 3x^2/2 - xz)) at x = 0, computed
/// as g^N N! times the x^N coefficient of the exponential series.
RatPoly fzzt_q(int n, const Rational& g);

/// Deformed variant with coupling c = 1 + s1/sqrt(N):
///   (c/N)^N d^N/dx^N exp(-(N/c)(3x + 3x^2/2 + x^3/3 + (s1/sqrt N) x - xz)).
/// The extra linear terms make this Q_N^{(g=c/N)}(z - 3 - s1/sqrt N), so its
/// roots are the deformed master-matrix eigenvalues shifted by 3 + s1/sqrt N.
RealPoly fzzt_q_deformed(int n, double s1);

}  // namespace fzzt::mastermat
