#include "fzzt/mastermat/fzzt_q.hpp"

#include "fzzt/exact/series.hpp"

#include <cmath>
#include <stdexcept>

namespace fzzt::mastermat {

RatPoly fzzt_q(int n, const Rational& g) {
    if (n < 0) throw std::invalid_argument("fzzt_q: n must be >= 0");
    if (g.is_zero()) throw std::invalid_argument("fzzt_q: g must be nonzero");
    if (n == 0) return RatPoly::constant(Rational(1));
    const Rational inv = Rational(1) / g;
    TruncSeries<Rational> p(n);
    p[1] = RatPoly{Rational(0), inv};
    if (n >= 2) p[2] = RatPoly::constant(Rational(-3, 2) * inv);
    if (n >= 3) p[3] = RatPoly::constant(Rational(-1, 3) * inv);
    const auto f = series_exp(p);
    return f[static_cast<std::size_t>(n)] * (g.pow(n) * factorial(static_cast<unsigned>(n)));
}

RealPoly fzzt_q_deformed(int n, double s1) {
    if (n < 0) throw std::invalid_argument("fzzt_q_deformed: n must be >= 0");
    if (n == 0) return RealPoly::constant(1.0);
    const double nn = static_cast<double>(n);
    const double shift = s1 / std::sqrt(nn);
    const double c = 1.0 + shift;
    if (c == 0.0) throw std::invalid_argument("fzzt_q_deformed: 1 + s1/sqrt(n) must be nonzero");
    const double k = nn / c;
    TruncSeries<double> p(n);
    p[1] = RealPoly{-k * (3.0 + shift), k};
    if (n >= 2) p[2] = RealPoly::constant(-k * 1.5);
    if (n >= 3) p[3] = RealPoly::constant(-k / 3.0);
    const auto f = series_exp(p);
    double scale = 1.0;
    for (int i = 1; i <= n; ++i) scale *= (c / nn) * i;
    return f[static_cast<std::size_t>(n)] * scale;
}

}  // namespace fzzt::mastermat
