#include "fzzt/specfun/hermite.hpp"

#include <stdexcept>

namespace fzzt::specfun {

double hermite_h(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_h: n must be >= 0");
    double prev = 1.0, cur = 2.0 * x;
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational hermite_h(int n, const Rational& x) { return hermite_poly(n).eval(x); }

RatPoly hermite_poly(int n) {
    if (n < 0) throw std::invalid_argument("hermite_poly: n must be >= 0");
    RatPoly prev = RatPoly::constant(Rational(1));
    if (n == 0) return prev;
    const RatPoly two_x = RatPoly::monomial(1, Rational(2));
    RatPoly cur = two_x;
    for (int k = 1; k < n; ++k) {
        RatPoly next = two_x * cur - prev * Rational(2 * k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RatPoly scaled_hermite(int n, const Rational& g) {
    if (g.sign() <= 0) throw std::invalid_argument("scaled_hermite: g must be positive");
    const RatPoly h = hermite_poly(n);
    // (g/4)^{n/2} h_k (z/sqrt g)^k = h_k g^{(n-k)/2} z^k / 2^n, with n - k even
    const Rational inv_2n = Rational(1) / Rational(2).pow(n);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
        const Rational hk = h.coeff(static_cast<std::size_t>(k));
        if (hk.is_zero()) continue;
        c[static_cast<std::size_t>(k)] = hk * g.pow((n - k) / 2) * inv_2n;
    }
    return RatPoly(std::move(c));
}

}  // namespace fzzt::specfun
