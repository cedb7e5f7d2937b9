#include <doctest.h>

#include "fzzt/quad/quad.hpp"
#include "fzzt/specfun/genairy.hpp"
#include "oracles/frozen.hpp"

#include <cmath>
#include <numbers>

using namespace fzzt;
using quad::QuadResult;

namespace {

constexpr double pi = std::numbers::pi;

double quartic(double p) { return std::exp(-0.25 * p * p * p * p); }
double gauss(double p) { return std::exp(-0.5 * p * p); }

}  // namespace

TEST_CASE("est-error is sound on closed-form integrals") {
    struct Case {
        quad::Integrand f;
        double a, b, exact;
    };
    const double inf = INFINITY;
    const Case cases[] = {
        {[](double x) { return std::exp(-x * x); }, -inf, inf, std::sqrt(pi)},
        {[](double x) { return std::exp(-x); }, 0.0, inf, 1.0},
        {[](double x) { return x * x * x; }, 0.0, 2.0, 4.0},
        {[](double x) { return std::sqrt(x); }, 0.0, 1.0, 2.0 / 3.0},
        {[](double x) { return 1.0 / (1.0 + x * x); }, -inf, inf, pi},
        {[](double x) { return std::exp(-x * x) * std::cos(5.0 * x); }, -inf, inf, std::sqrt(pi) * std::exp(-6.25)},
        {[](double x) { return std::pow(x, 10) * std::exp(-x); }, 0.0, inf, 3628800.0},
        {[](double x) { return std::exp(-2.0 * x * x); }, 0.0, 1.5, 0.5 * std::sqrt(pi / 2.0) * std::erf(1.5 * std::sqrt(2.0))},
        {[](double x) { return std::log(x); }, 0.0, 1.0, -1.0},
        {[](double x) { return std::exp(3.0 * x); }, -1.0, 1.0, (std::exp(3.0) - std::exp(-3.0)) / 3.0},
    };
    for (const auto& c : cases) {
        const QuadResult r = quad::integrate_adaptive(c.f, c.a, c.b);
        const double err = std::abs(r.value.real() - c.exact);
        CHECK(err <= std::max(10.0 * r.est_error, 1e-15 * std::abs(c.exact)));
        CHECK(err <= 1e-10 * std::max(1.0, std::abs(c.exact)));
    }
}

TEST_CASE("fourier_even: Gaussian closed form and derivatives") {
    for (double z : {0.0, 0.7, 3.0}) {
        const double f = std::sqrt(2.0 * pi) * std::exp(-0.5 * z * z);
        CHECK(quad::fourier_even(gauss, z, 0).value.real() == doctest::Approx(f).epsilon(1e-12));
        // d/dz gives -z f, d^2/dz^2 gives (z^2 - 1) f
        CHECK(std::abs(quad::fourier_even(gauss, z, 1).value.real() + z * f) <= 1e-12);
        CHECK(std::abs(quad::fourier_even(gauss, z, 2).value.real() - (z * z - 1.0) * f) <= 1e-12);
    }
}

TEST_CASE("fourier_even: quartic weight gives Psi(0)") {
    const auto r = quad::fourier_even(quartic, 0.0, 0);
    CHECK(r.value.real() == doctest::Approx(oracle::kPsi0).epsilon(1e-14));
    CHECK(std::abs(r.value.imag()) <= 1e-12);
    CHECK(std::abs(quad::fourier_even(quartic, 0.0, 1).value) <= 1e-12);
}

TEST_CASE("fourier_even: linearity, evenness and derivative consistency") {
    auto sum = [](double p) { return quartic(p) + gauss(p); };
    for (double z : {0.4, 2.2}) {
        const auto a = quad::fourier_even(quartic, z, 0), b = quad::fourier_even(gauss, z, 0), c = quad::fourier_even(sum, z, 0);
        CHECK(std::abs(a.value + b.value - c.value) <= 2.0 * (a.est_error + b.est_error + c.est_error) + 1e-15);
        const auto m = quad::fourier_even(quartic, -z, 0);
        CHECK(std::abs(a.value - m.value) <= 2.0 * (a.est_error + m.est_error) + 1e-15);
    }
    // central difference with h and h/2: the slope error should drop by ~4
    const double z = 1.3;
    const double d = quad::fourier_even(quartic, z, 1).value.real();
    auto cd = [&](double h) {
        return (quad::fourier_even(quartic, z + h, 0).value.real() - quad::fourier_even(quartic, z - h, 0).value.real()) / (2 * h);
    };
    CHECK(std::abs(cd(1e-4) - d) <= 1e-7);
    const double e1 = std::abs(cd(2e-2) - d), e2 = std::abs(cd(1e-2) - d);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("fourier_even rejects slowly decaying weights and large m") {
    CHECK_THROWS_AS(quad::fourier_even([](double p) { return 1.0 / (1.0 + p * p); }, 0.0, 0), quad::DecayNotDetected);
    CHECK_THROWS(quad::fourier_even(gauss, 0.0, 7));
}

TEST_CASE("I_n integrals") {
    const auto i0 = quad::i_n_integral(0);
    CHECK(i0.est_error <= 1e-12);
    CHECK(std::abs(i0.value.real() - oracle::kI0) <= 1e-13);
    CHECK(std::abs(quad::i_n_integral(1).value.real() - oracle::kI1) <= 1e-13);
    const auto i5 = quad::i_n_integral(5), i5t = quad::i_n_integral(5, 1e-14);
    CHECK(std::abs(i5.value.real() - i5t.value.real()) <= std::max(i5.est_error, i5t.est_error));
    CHECK(std::abs(i5.value.real() - oracle::kI5) <= 1e-11);
    const auto i10 = quad::i_n_integral(10);
    CHECK(std::abs(i10.value.real() - oracle::kI10) <= 10.0 * i10.est_error + 1e-12);
    CHECK_THROWS_AS(quad::i_n_integral(21), std::domain_error);
}
