#include "fzzt/acceptance/acceptance.hpp"

#include "fzzt/mastermat/builders.hpp"
#include "fzzt/mastermat/charpoly.hpp"
#include "fzzt/mastermat/fzzt_q.hpp"
#include "fzzt/specfun/airy.hpp"
#include "fzzt/specfun/gamma.hpp"
#include "fzzt/specfun/genairy.hpp"
#include "fzzt/specfun/hermite.hpp"
#include "fzzt/specfun/mp.hpp"
#include "fzzt/spectra/eigen.hpp"
#include "fzzt/xi/deform.hpp"
#include "fzzt/xi/ode.hpp"
#include "fzzt/xi/potential.hpp"
#include "fzzt/xi/xi.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <random>

namespace fzzt::acceptance {

namespace {

using mastermat::StructuredMatrix;
using specfun::cplx;

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

RatPoly rat_poly(std::initializer_list<Rational> c) { return RatPoly(std::vector<Rational>(c)); }

// Sample points shared by the exact polynomial checks.
const std::vector<Rational>& rational_samples() {
    static const std::vector<Rational> z = {Rational(-2), Rational(-1, 3), Rational(0), Rational(1, 2), Rational(7, 3)};
    return z;
}

Outcome check_21_n8() {
    const std::vector<Rational> gs = {Rational(1, 8), Rational(1, 3), Rational(1, 2), Rational(2), Rational(7, 5)};
    for (const auto& g : gs) {
        const RatPoly expect = rat_poly({Rational(105, 16) * g.pow(4), 0, Rational(-105, 2) * g.pow(3), 0,
                                         Rational(105, 2) * g * g, 0, Rational(-14) * g, 0, 1});
        const RatPoly got = mastermat::charpoly_exact(mastermat::build_master_21(8, g));
        if (!(got == expect)) return {false, "mismatch at g = " + g.str()};
    }
    return {true, "5 rational g, exact equality"};
}

Outcome check_31_n8() {
    const Rational g(1, 8);
    const RatPoly expect = rat_poly({Rational(8085, 4096), Rational(-945, 256), Rational(-175, 8), Rational(105, 16),
                                     Rational(945, 32), Rational(-7, 4), Rational(-21, 2), 0, 1});
    const RatPoly cp = mastermat::charpoly_exact(mastermat::build_master_31(8, g));
    const RatPoly q = mastermat::fzzt_q(8, g);
    if (!(cp == expect)) return {false, "charpoly differs from the printed coefficients"};
    if (!(q == expect)) return {false, "fzzt_q(8, 1/8) differs from the printed coefficients"};
    return {true, "charpoly and fzzt_q both exact"};
}

Outcome check_hermite_duality() {
    int compared = 0;
    for (int n = 1; n <= 16; ++n) {
        for (const Rational& g : {Rational(1, n), Rational(1), Rational(2, 3)}) {
            const RatPoly cp = mastermat::charpoly_exact(mastermat::build_master_21(n, g));
            const RatPoly h = specfun::scaled_hermite(n, g);
            for (const auto& z : rational_samples()) {
                if (cp.eval(z) != h.eval(z)) return {false, "N = " + std::to_string(n) + ", g = " + g.str()};
                ++compared;
            }
        }
    }
    return {true, std::to_string(compared) + " exact point comparisons"};
}

Outcome check_mp_n8() {
    const RatPoly expect = rat_poly({Rational(363825, 16), 0, Rational(-74247, 2), 0, Rational(10493, 2), 0, -154, 0, 1});
    const RatPoly cp = mastermat::charpoly_exact(mastermat::build_mp_matrix(8));
    if (!(cp == expect)) return {false, "charpoly differs from the printed coefficients"};
    for (int k = 0; k < 20; ++k) {
        const Rational z = Rational(k - 10, 3) + Rational(1, 7);
        if (specfun::mp_polynomial(8, z) != cp.eval(z)) return {false, "mp_polynomial differs at z = " + z.str()};
    }
    return {true, "charpoly exact; mp_polynomial agrees at 20 rational points"};
}

Outcome check_u_taylor() {
    const xi::PotentialExpansion p = xi::u_taylor(6);
    const double d2 = std::abs(p.u(2) - 9.36345), d4 = std::abs(p.u(4) - 5.95896), d6 = std::abs(p.u(6) + 2.15104);
    const bool ok = d2 <= 1e-4 && d4 <= 1e-4 && d6 <= 1e-3;
    return {ok, fmt("u2 %.8f u4 %.8f ", p.u(2), p.u(4)) + fmt("u6 %.7f", p.u(6))};
}

Outcome check_deformation() {
    const xi::DeformationParams d = xi::deformation_params(xi::u_taylor(4));
    const double s1_ref = 9.36345 / std::sqrt(5.95896);
    const bool ok = std::abs(d.s1 - s1_ref) <= 2e-4 && std::abs(d.s1 - 3.83576) <= 2e-4 && std::abs(d.alpha - 2.20961) <= 2e-4;
    return {ok, fmt("s1 %.7f (printed-value form %.7f) alpha %.7f", d.s1, s1_ref, d.alpha)};
}

Outcome check_onset() {
    const double s1 = 9.36345 / std::sqrt(5.95896);
    const auto r33 = spectra::eigenvalues(mastermat::build_master_31_deformed(33, s1));
    const auto r34 = spectra::eigenvalues(mastermat::build_master_31_deformed(34, s1));
    const bool ok33 = r33.converged && r33.classification == spectra::Classification::AllReal;
    const bool ok34 = r34.converged && r34.classification == spectra::Classification::ComplexPairsPresent;
    return {ok33 && ok34, "N=33 " + spectra::to_string(r33.classification) + fmt(" (ratio %.2e)", r33.max_imag_ratio) +
                              ", N=34 " + spectra::to_string(r34.classification) + fmt(" (ratio %.2e)", r34.max_imag_ratio)};
}

Outcome check_xi_agreement() {
    double sq = 0.0, qz = 0.0, sz = 0.0;
    for (int i = 0; i <= 50; ++i) {
        const cplx z(-20.0 + 0.8 * i, 0.0);
        const double s = xi::xi_eval(z, xi::XiMethod::Series).value.real();
        const double q = xi::xi_eval(z, xi::XiMethod::Quadrature).value.real();
        const double t = xi::xi_eval(z, xi::XiMethod::ZetaFormula).value.real();
        sq = std::max(sq, std::abs(s - q));
        qz = std::max(qz, std::abs(q - t));
        sz = std::max(sz, std::abs(s - t));
    }
    const double x0 = xi::xi_eval(cplx(0.0, 0.0), xi::XiMethod::Quadrature).value.real();
    const bool ok = std::max({sq, qz, sz}) <= 1e-6 && std::abs(x0 - 0.4971207782) <= 1e-8;
    return {ok, fmt("max diffs series/quad %.2e quad/zeta %.2e series/zeta %.2e", sq, qz, sz) + fmt(", Xi(0) %.12f", x0)};
}

Outcome check_xi_zeros() {
    const auto z = xi::xi_zeros(2);
    const bool ok = z.size() == 2 && std::abs(z[0] - 14.134725) <= 1e-3 && std::abs(z[1] - 21.022040) <= 1e-3;
    return {ok, fmt("zeros %.9f %.9f", z[0], z[1])};
}

Outcome check_ode_ladder() {
    const auto spec = xi::ode_from_potential(xi::PotentialExpansion::from_coeffs({9.36345, 5.95896}));
    const bool printed = spec.rhs_sign == 1 && spec.terms.size() == 2 && spec.terms[0].order == 1 &&
                         spec.terms[0].coeff == -2.0 * 9.36345 && spec.terms[1].order == 3 &&
                         spec.terms[1].coeff == 4.0 * 5.95896;
    const auto quartic = xi::ode_from_potential(xi::PotentialExpansion::from_coeffs({0.0, 0.25}));
    const bool reduces = quartic.rhs_sign == 1 && quartic.terms.size() == 1 && quartic.terms[0].order == 3 &&
                         quartic.terms[0].coeff == 1.0;
    std::vector<double> grid;
    for (int i = 0; i <= 60; ++i) grid.push_back(-3.0 + 0.1 * i);
    const double res = xi::ode_residual(quartic, [](double p) { return std::exp(-0.25 * p * p * p * p); }, grid).max_residual;
    const bool ok = printed && reduces && res <= 1e-8;
    return {ok, std::string(printed ? "order-3 terms bit-exact" : "order-3 terms differ") +
                    (reduces ? ", quartic -> F''' = zF" : ", quartic reduction wrong") + fmt(", residual %.2e", res)};
}

Outcome check_realness_suite() {
    auto all_real = [](const StructuredMatrix& m) {
        const auto r = spectra::eigenvalues(m);
        return r.converged && r.classification == spectra::Classification::AllReal;
    };
    for (int n = 1; n <= 64; ++n)
        if (!all_real(mastermat::build_master_21(n, Rational(1, n)))) return {false, "gaussian21 N = " + std::to_string(n)};
    for (int n = 1; n <= 32; ++n)
        if (!all_real(mastermat::build_master_31(n, Rational(1, n)))) return {false, "minimal31 N = " + std::to_string(n)};
    for (int n = 1; n <= 32; ++n)
        if (!all_real(mastermat::build_mp_matrix(n))) return {false, "meixner-pollaczek N = " + std::to_string(n)};
    return {true, "gaussian21 N<=64, minimal31 N<=32, MP N<=32 all real"};
}

Outcome check_bordered() {
    std::mt19937_64 rng(20240607);
    std::normal_distribution<double> nd;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> b(9);
        for (auto& v : b) v = nd(rng);
        if (b[8] == 0.0) b[8] = 1.0;
        double bn = 0.0;
        for (double v : b) bn += v * v;
        bn = std::sqrt(bn);
        const auto r = spectra::eigenvalues(mastermat::build_bordered_mp(8, b));
        if (r.eigenvalues.size() != 8) return {false, "wrong eigenvalue count"};
        for (const cplx& lam : r.eigenvalues) {
            cplx s = 0.0;
            for (int k = 0; k <= 8; ++k) s += b[k] * specfun::mp_polynomial(k, lam);
            const double bound = 1e-8 * bn * std::pow(std::max(1.0, std::abs(lam)), 8);
            worst = std::max(worst, std::abs(s) / bound);
        }
    }
    return {worst <= 1.0, fmt("worst |sum b_k p_k| / bound = %.2e over 20 vectors", worst)};
}

Outcome check_specfun() {
    double psi_diff = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const double z = -5.0 + 0.25 * i;
        const double s = specfun::gen_airy_psi(cplx(z, 0.0)).value.real();
        const double q = xi::psi_deformed(z, 0.0).value.real();
        psi_diff = std::max(psi_diff, std::abs(s - q));
    }
    const double psi0 = specfun::gen_airy_psi(cplx(0.0, 0.0)).value.real();
    const double psi0_ref = specfun::gamma(0.25) / std::sqrt(2.0);
    const double psi0_err = std::abs(psi0 - psi0_ref) / psi0_ref;

    double airy_res = 0.0;
    for (int i = 0; i <= 60; ++i) {
        const cplx z(-10.0 + 0.25 * i, 0.0);
        const auto v = specfun::airy_ai_all(z);
        airy_res = std::max(airy_res, std::abs(v.d2ai - z * v.ai));
    }
    for (const cplx z : {cplx(-3.0, 2.0), cplx(1.0, -1.5), cplx(-6.0, 0.5)}) {
        const auto v = specfun::airy_ai_all(z);
        airy_res = std::max(airy_res, std::abs(v.d2ai - z * v.ai));
    }

    double r0 = 0.0, ratio_spread = 0.0;
    for (int i = 0; i <= 12; ++i) {
        const double z = 0.25 * i;
        const double r = xi::phi_deformed(z, 0.0).value.real() / specfun::gen_airy_phi(cplx(z, 0.0)).value.real();
        if (i == 0) r0 = r;
        ratio_spread = std::max(ratio_spread, std::abs(r - r0) / std::abs(r0));
    }
    const bool ok = psi_diff <= 1e-8 && psi0_err <= 1e-12 && airy_res <= 1e-8 && ratio_spread <= 1e-8;
    return {ok, fmt("psi series/quad %.2e, psi(0) rel err %.2e, airy residual %.2e", psi_diff, psi0_err, airy_res) +
                    fmt(", phi ratio spread %.2e", ratio_spread)};
}

}  // namespace

const std::vector<Check>& checks() {
    static const std::vector<Check> list = {
        {1, "exact (2,1) N=8 polynomial", "charpoly", 1.0, check_21_n8},
        {2, "exact (3,1) N=8 polynomial and fzzt_q", "charpoly", 1.0, check_31_n8},
        {3, "Hermite duality N<=16", "charpoly", 0.0, check_hermite_duality},
        {4, "MP N=8 polynomial", "charpoly", 0.0, check_mp_n8},
        {5, "potential Taylor coefficients", "xi", 10.0, check_u_taylor},
        {6, "deformation parameters", "xi", 0.0, check_deformation},
        {7, "complex-eigenvalue onset at N=34", "spectra", 5.0, check_onset},
        {8, "Xi cross-method agreement", "xi", 60.0, check_xi_agreement},
        {9, "first two Xi zeros", "xi", 0.0, check_xi_zeros},
        {10, "ODE ladder", "xi", 0.0, check_ode_ladder},
        {11, "eigenvalue realness suite", "spectra", 0.0, check_realness_suite},
        {12, "bordered-matrix property", "spectra", 0.0, check_bordered},
        {13, "special-function suite", "specfun", 0.0, check_specfun},
    };
    return list;
}

namespace {

bool run_check(const Check& c, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o = {false, std::string("threw: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0.0 && dt > c.budget_s) {
        o.pass = false;
        o.detail += fmt("; over runtime budget %.0fs", c.budget_s);
    }
    char head[160];
    std::snprintf(head, sizeof head, "%s %02d %-40s %8.3fs  ", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), dt);
    out << head << o.detail << '\n';
    return o.pass;
}

}  // namespace

RunSummary run_checks(const std::string& filter, std::ostream& out) {
    RunSummary s;
    for (const auto& c : checks()) {
        char id[8];
        std::snprintf(id, sizeof id, "%02d", c.id);
        if (!filter.empty() && c.tag.find(filter) == std::string::npos && c.name.find(filter) == std::string::npos &&
            filter != id && filter != std::to_string(c.id))
            continue;
        ++s.run;
        if (!run_check(c, out)) ++s.failed;
    }
    return s;
}

bool run_one(int id, std::ostream& out, bool& passed) {
    for (const auto& c : checks()) {
        if (c.id != id) continue;
        passed = run_check(c, out);
        return true;
    }
    return false;
}

}  // namespace fzzt::acceptance
