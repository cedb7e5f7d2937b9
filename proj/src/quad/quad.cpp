#include "fzzt/quad/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace fzzt::quad {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.0};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                                      0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                                      0.295524224714752870173892994651338};

struct Panel {
    double a, b;
    std::complex<double> value;
    double err;
    bool floored;  // estimate is at the rounding level; splitting cannot help
};

Panel gk21(const Integrand& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const std::complex<double> fc = f(c);
    std::complex<double> rk = fc * wgk[10];
    std::complex<double> rg = 0.0;
    double resabs = std::abs(fc) * wgk[10];
    for (int j = 0; j < 10; ++j) {
        const double dx = h * xgk[j];
        const std::complex<double> f1 = f(c - dx);
        const std::complex<double> f2 = f(c + dx);
        rk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) rg += wg[j / 2] * (f1 + f2);
    }
    evals += 21;
    const double ah = std::abs(h);
    const double raw = std::abs((rk - rg) * h);
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs * ah;
    double err = std::max(raw, floor);
    if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
    return Panel{a, b, rk * h, err, raw <= floor};
}

QuadResult adaptive_finite(const Integrand& f, double a, double b, const QuadOptions& opt) {
    QuadResult res;
    auto cmp = [](const Panel& x, const Panel& y) { return x.err < y.err; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
    const int init = std::max(1, opt.initial_panels);
    for (int k = 0; k < init; ++k) {
        const double lo = a + (b - a) * k / init;
        const double hi = k + 1 == init ? b : a + (b - a) * (k + 1) / init;
        heap.push(gk21(f, lo, hi, res.evals));
    }
    auto totals = [&]() {
        std::complex<double> v = 0.0;
        double e = 0.0;
        auto copy = heap;
        while (!copy.empty()) {
            v += copy.top().value;
            e += copy.top().err;
            copy.pop();
        }
        return std::pair{v, e};
    };
    std::complex<double> total = 0.0;
    double err = 0.0;
    {
        auto t = totals();
        total = t.first;
        err = t.second;
    }
    int splits = 0;
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (splits >= opt.max_subdivisions) {
            res.converged = false;
            break;
        }
        Panel worst = heap.top();
        if (worst.floored) {
            res.converged = false;
            res.meta["rounding_limited"] = 1.0;
            break;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            res.converged = false;  // panel cannot be split further in binary64
            break;
        }
        heap.pop();
        Panel l = gk21(f, worst.a, mid, res.evals);
        Panel r = gk21(f, mid, worst.b, res.evals);
        total += l.value + r.value - worst.value;
        err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++splits;
        if (splits % 64 == 0) {
            auto t = totals();  // resynchronize the running sums
            total = t.first;
            err = t.second;
        }
    }
    // Deterministic final sum in position order.
    std::vector<Panel> panels;
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::complex<double> v = 0.0;
    double e = 0.0;
    for (const auto& p : panels) {
        v += p.value;
        e += p.err;
    }
    res.value = v;
    res.est_error = e;
    res.meta["panels"] = static_cast<double>(panels.size());
    return res;
}

}  // namespace

QuadResult integrate_adaptive(const Integrand& f, double a, double b, const QuadOptions& opt) {
    if (std::isnan(a) || std::isnan(b) || !(a < b)) throw std::invalid_argument("integrate_adaptive: need a < b");
    if (!(opt.abs_tol > 0.0) && !(opt.rel_tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tol must be > 0");
    const bool ia = std::isinf(a), ib = std::isinf(b);
    if (!ia && !ib) return adaptive_finite(f, a, b, opt);
    auto guard = [](std::complex<double> v) { return std::isfinite(v.real()) && std::isfinite(v.imag()) ? v : 0.0; };
    if (ia && ib) {
        Integrand g = [&](double t) -> std::complex<double> {
            const double d = 1.0 - t * t;
            const double x = t / d;
            if (!std::isfinite(x)) return 0.0;
            return guard(f(x) * ((1.0 + t * t) / (d * d)));
        };
        return adaptive_finite(g, -1.0, 1.0, opt);
    }
    if (ib) {
        Integrand g = [&](double t) -> std::complex<double> {
            const double d = 1.0 - t;
            const double x = a + t / d;
            if (!std::isfinite(x)) return 0.0;
            return guard(f(x) / (d * d));
        };
        return adaptive_finite(g, 0.0, 1.0, opt);
    }
    Integrand g = [&](double t) -> std::complex<double> {
        const double d = 1.0 - t;
        const double x = b - t / d;
        if (!std::isfinite(x)) return 0.0;
        return guard(f(x) / (d * d));
    };
    return adaptive_finite(g, 0.0, 1.0, opt);
}

QuadResult fourier_even(const std::function<double(double)>& w, std::complex<double> z, int m, double tol) {
    if (m < 0 || m > 6) throw std::invalid_argument("fourier_even: derivative order must be in 0..6");
    const double w0 = w(0.0);
    if (!(w0 > 0.0) || !std::isfinite(w0)) throw DecayNotDetected("fourier_even: weight must be positive and finite at 0");
    double cutoff = -1.0;
    for (int k = 1; k * 0.05 <= kWeightCap + 1e-12; ++k) {
        const double phi = k * 0.05;
        if (w(phi) < kWeightThreshold * w0) {
            cutoff = phi;
            break;
        }
    }
    if (cutoff < 0.0) throw DecayNotDetected("fourier_even: weight did not decay below threshold by phi = 60");

    const bool even = m % 2 == 0;
    Integrand g = [&](double phi) -> std::complex<double> {
        const double base = std::pow(phi, m) * w(phi);
        return even ? base * std::cos(phi * z) : base * std::sin(phi * z);
    };
    QuadOptions opt;
    opt.abs_tol = tol / 2.0;
    opt.initial_panels = std::max(4, static_cast<int>(std::ceil(cutoff * std::abs(z.real()) / std::numbers::pi)) + 1);
    QuadResult r = integrate_adaptive(g, 0.0, cutoff, opt);
    // i^m (even m) or i^{m+1} (odd m), times 2
    std::complex<double> factor = 2.0;
    const int power = even ? m : m + 1;
    for (int k = 0; k < power % 4; ++k) factor *= std::complex<double>(0.0, 1.0);
    r.value *= factor;
    r.est_error *= 2.0;
    r.meta["cutoff"] = cutoff;
    r.meta["weight_threshold"] = kWeightThreshold;
    r.meta["cap"] = kWeightCap;
    return r;
}

QuadResult i_n_integral(int n, double tol) {
    if (n < 0) throw std::invalid_argument("i_n_integral: n must be >= 0");
    if (n > 20) throw std::domain_error("i_n_integral: refinement limit exceeded for n > 20 (cancellation)");
    const double pi = std::numbers::pi;
    const double c = 2.0 * std::sqrt(pi);
    const int power = 2 * n + 1;
    // Past the envelope maximum, find where e^{-c y} y^{2n+1} < 1e-20.
    double cutoff = std::max(1.0, power / c);
    while (-c * cutoff + power * std::log(cutoff) >= std::log(1e-20)) cutoff += 0.25;

    auto f = [&](double y) -> std::complex<double> {
        const double e = std::exp(-c * y);
        // 1/(e^{cy} + 1) = e^{-cy} / (1 + e^{-cy})
        return std::sin(0.5 * y * y + pi / 8.0) * std::pow(y, power) * (e / (1.0 + e));
    };

    std::vector<double> breaks{0.0};
    for (int k = 1;; ++k) {
        const double y = std::sqrt(k * pi / 2.0);
        if (y >= cutoff) break;
        breaks.push_back(y);
    }
    breaks.push_back(cutoff);

    QuadResult res;
    const double panel_tol = tol / static_cast<double>(breaks.size() - 1);
    // Neumaier summation of the panel values.
    double sum = 0.0, comp = 0.0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        QuadOptions opt;
        opt.abs_tol = panel_tol;
        const QuadResult p = integrate_adaptive(f, breaks[k], breaks[k + 1], opt);
        const double v = p.value.real();
        const double t = sum + v;
        comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
        res.est_error += p.est_error;
        res.evals += p.evals;
    }
    res.value = sum + comp;
    res.converged = res.est_error <= tol;
    res.meta["cutoff"] = cutoff;
    res.meta["panels"] = static_cast<double>(breaks.size() - 1);
    res.meta["tail_threshold"] = 1e-20;
    return res;
}

}  // namespace fzzt::quad
