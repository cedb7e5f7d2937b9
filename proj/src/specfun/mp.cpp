#include "fzzt/specfun/mp.hpp"

#include <stdexcept>

namespace fzzt::specfun {

namespace {
using lcplx = std::complex<long double>;
void check_n(int n) {
    if (n < 0) throw std::invalid_argument("mp_polynomial: n must be >= 0");
}
}  // namespace

cplx mp_polynomial(int n, cplx z) {
    check_n(n);
    const lcplx lz(z.real(), z.imag());
    lcplx prev = 1.0L, cur = lz;
    if (n == 0) return 1.0;
    for (int k = 1; k < n; ++k) {
        const lcplx next = lz * cur - (k * (k + 0.5L)) * prev;
        prev = cur;
        cur = next;
    }
    return {static_cast<double>(cur.real()), static_cast<double>(cur.imag())};
}

Rational mp_polynomial(int n, const Rational& z) {
    check_n(n);
    Rational prev(1), cur = z;
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        Rational next = z * cur - Rational(k) * Rational(2 * k + 1, 2) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RatPoly mp_poly_exact(int n) {
    check_n(n);
    RatPoly prev = RatPoly::constant(Rational(1));
    if (n == 0) return prev;
    const RatPoly z = RatPoly::monomial(1);
    RatPoly cur = z;
    for (int k = 1; k < n; ++k) {
        RatPoly next = z * cur - prev * (Rational(k) * Rational(2 * k + 1, 2));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

cplx mp_polynomial_hyp(int n, cplx z) {
    check_n(n);
    // Exact Gaussian-rational arithmetic: the terminating sum cancels badly
    // in floating point (the terms exceed the result by many orders).
    struct GR {
        Rational re, im;
        GR operator*(const GR& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
        GR operator+(const GR& o) const { return {re + o.re, im + o.im}; }
    };
    const Rational x = Rational::from_double(z.real());
    const Rational y = Rational::from_double(z.imag());
    // a = 3/4 + i z / 2
    const GR a{Rational(3, 4) - y / Rational(2), x / Rational(2)};
    GR sum{Rational(0), Rational(0)};
    GR poch{Rational(1), Rational(0)};
    Rational r(1);  // (-n)_k 2^k / ((3/2)_k k!)
    for (int k = 0; k <= n; ++k) {
        sum = sum + GR{poch.re * r, poch.im * r};
        r *= Rational(-2 * (n - k)) / (Rational(k + 1) * Rational(2 * k + 3, 2));
        poch = poch * GR{a.re + Rational(k), a.im};
    }
    Rational pref(1);  // n! (2n+1)!! / (2n)!!
    for (int j = 1; j <= n; ++j) pref *= Rational(j) * Rational(2 * j + 1, 2 * j);
    GR v{sum.re * pref, sum.im * pref};
    // multiply by i^n
    for (int j = 0; j < n % 4; ++j) v = GR{-v.im, v.re};
    return {v.re.to_double(), v.im.to_double()};
}

}  // namespace fzzt::specfun
