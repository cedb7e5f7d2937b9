#include <doctest.h>

#include "fzzt/mastermat/builders.hpp"
#include "fzzt/mastermat/charpoly.hpp"
#include "fzzt/spectra/eigen.hpp"
#include "fzzt/spectra/scaling.hpp"
#include "oracles/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace fzzt;
using namespace fzzt::mastermat;
using spectra::Classification;

namespace {

const double kAutoS1 = 9.36345 / std::sqrt(5.95896);

// Same matrix with every binary64 entry promoted to its exact rational value.
StructuredMatrix exact_copy(const StructuredMatrix& m) {
    std::vector<Entry> e;
    for (const auto& x : m.entries()) e.push_back(Entry{x.row, x.col, x.value, Rational::from_double(x.value)});
    return StructuredMatrix(m.model(), m.n(), m.structure(), ScalarKind::Exact, std::move(e));
}

double spectral_radius(const spectra::SpectrumReport& r) {
    double s = 0.0;
    for (const auto& z : r.eigenvalues) s = std::max(s, std::abs(z));
    return s;
}

}  // namespace

TEST_CASE("(2,1) n=2, g=1/2 has eigenvalues -1/2 and 1/2") {
    const auto r = spectra::eigenvalues(build_master_21(2, Rational(1, 2)));
    REQUIRE(r.eigenvalues.size() == 2);
    CHECK(r.eigenvalues[0].real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(r.eigenvalues[1].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.classification == Classification::AllReal);
}

TEST_CASE("symmetric tridiagonal path returns imaginary parts exactly zero") {
    for (int n : {1, 5, 33, 200}) {
        const auto r = spectra::eigenvalues(build_master_21(n, 1.0 / n));
        for (const auto& z : r.eigenvalues) CHECK(z.imag() == 0.0);
        CHECK(std::is_sorted(r.eigenvalues.begin(), r.eigenvalues.end(),
                             [](auto a, auto b) { return a.real() < b.real(); }));
    }
}

TEST_CASE("(3,1) n=8, g=1/8 is real with max imag ratio <= 1e-10") {
    const auto r = spectra::eigenvalues(build_master_31(8, Rational(1, 8)));
    CHECK(r.eigenvalues.size() == 8);
    CHECK(r.classification == Classification::AllReal);
    CHECK(r.max_imag_ratio <= 1e-10);
    CHECK(oracle::distinct_real_roots(charpoly_exact(build_master_31(8, Rational(1, 8)))) == 8);
}

TEST_CASE("trace and determinant match the characteristic polynomial") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> nd;
    for (int n = 2; n <= 16; ++n) {
        std::vector<StructuredMatrix> ms{build_master_31(n, 1.0 / n), build_mp_matrix(n), build_master_31_deformed(n, 2.0)};
        std::vector<double> b(n + 1);
        for (auto& v : b) v = nd(rng);
        b[n] = 1.0;
        ms.push_back(build_bordered_mp(n, b));
        for (const auto& m : ms) {
            const auto r = spectra::eigenvalues(m);
            const auto p = charpoly_real(m);
            std::complex<double> sum = 0.0, prod = 1.0;
            for (const auto& z : r.eigenvalues) {
                sum += z;
                prod *= z;
            }
            double tr = 0.0;
            for (int i = 0; i < n; ++i) tr += m.at(i, i);
            CHECK(std::abs(sum.real() - tr) <= 1e-10 * std::max(1.0, spectral_radius(r) * n));
            CHECK(std::abs(sum.real() + p.coeff(n - 1)) <= 1e-10 * std::max(1.0, spectral_radius(r) * n));
            const double c0 = (n % 2 ? -1.0 : 1.0) * p.coeff(0);
            if (c0 == 0.0) {
                // exact zero eigenvalue (odd MP sizes): the product is only meaningful through min |lambda|
                double smallest = INFINITY;
                for (const auto& z : r.eigenvalues) smallest = std::min(smallest, std::abs(z));
                CHECK(smallest <= 1e-12 * spectral_radius(r));
            } else {
                CHECK(std::abs(prod.real() - c0) <= 1e-8 * std::max(1.0, std::abs(c0)));
            }
        }
    }
}

TEST_CASE("complex eigenvalues come in conjugate pairs") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> nd;
    int with_pairs = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 10;
        std::vector<double> a(n * n);
        for (auto& v : a) v = nd(rng);
        const auto r = spectra::eigenvalues_dense(a, n);
        if (r.classification == Classification::ComplexPairsPresent) ++with_pairs;
        for (const auto& z : r.eigenvalues) {
            double best = INFINITY;
            for (const auto& w : r.eigenvalues) best = std::min(best, std::abs(w - std::conj(z)));
            CHECK(best <= 1e-10 * std::max(1.0, std::abs(z)));
        }
    }
    CHECK(with_pairs > 0);  // the battery does exercise complex pairs
}

TEST_CASE("classification is invariant under diagonal similarity") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ud(-3.0, 3.0);
    std::normal_distribution<double> nd;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 12;
        std::vector<double> b(n + 1);
        for (auto& v : b) v = nd(rng);
        const auto m = trial % 2 ? build_bordered_mp(n, b) : build_master_31(n, 1.0 / n);
        auto a = m.dense();
        std::vector<double> d(n);
        for (auto& v : d) v = std::exp2(std::round(ud(rng) * 4.0)) * (1.0 + 0.1 * ud(rng));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i * n + j] *= d[i] / d[j];
        CHECK(spectra::eigenvalues_dense(a, n).classification == spectra::eigenvalues(m).classification);
    }
}

TEST_CASE("realness classification is confirmed by exact Sturm counts") {
    for (int n = 2; n <= 32; ++n) {
        const auto p = charpoly_exact(build_master_31(n, Rational(1, n)));
        CHECK(oracle::squarefree(p));
        CHECK(oracle::distinct_real_roots(p) == n);
    }
    for (int n = 2; n <= 24; ++n) CHECK(oracle::distinct_real_roots(charpoly_exact(build_mp_matrix(n))) == n);
}

TEST_CASE("deformed (3,1) at s1 = 9.36345/sqrt(5.95896): N = 33 and N = 34 spectra are exactly real") {
    // Sturm count on the exact rational image of the binary64 matrix. This is
    // the ground truth behind the realness scan: no complex pair at N = 34.
    for (int n : {33, 34}) {
        const auto m = build_master_31_deformed(n, kAutoS1);
        const auto p = charpoly_exact(exact_copy(m));
        CHECK(oracle::distinct_real_roots(p) == n);
        const auto r = spectra::eigenvalues(m);
        CHECK(r.converged);
        CHECK(r.classification == Classification::AllReal);
    }
}

TEST_CASE("realness_boundary: undeformed and gaussian families find nothing") {
    ModelSpec d;
    d.model = Model::Minimal31Deformed;
    d.s1 = 0.0;
    CHECK_FALSE(spectra::realness_boundary(d, 2, 40).first_complex.has_value());
    ModelSpec g;
    g.model = Model::Gaussian21;
    for (double gv : {0.3, 1.0, 7.0}) {
        g.g_float = gv;
        const auto scan = spectra::realness_boundary(g, 2, 40);
        CHECK_FALSE(scan.first_complex.has_value());
        CHECK(scan.n_values.size() == 39);
    }
}

TEST_CASE("realness_boundary reports the first complex N of a family") {
    // [[0, 1], [c, 0]] style family: real while the product is positive
    auto family = [](int n) {
        std::vector<Entry> e;
        for (int k = 1; k < n; ++k) {
            e.push_back(Entry{k - 1, k, 1.0, std::nullopt});
            e.push_back(Entry{k, k - 1, k < 5 ? 1.0 : -1.0, std::nullopt});
        }
        return StructuredMatrix(Model::MeixnerPollaczek, n, Structure::TridiagonalNonsymmetric, ScalarKind::Floating, e);
    };
    const auto scan = spectra::realness_boundary(family, 2, 10);
    REQUIRE(scan.first_complex.has_value());
    CHECK(*scan.first_complex == 6);
    CHECK(scan.max_imag_ratio[4] > 1e-8);
}

TEST_CASE("scaling report: gaussian21 gap ratio approaches the Airy value") {
    const auto r = spectra::scaling_report(Model::Gaussian21, {16, 64, 256});
    CHECK(r.reference_gap_ratio == doctest::Approx((4.08794944413097 - 2.33810741045977) / (5.52055982809555 - 4.08794944413097)));
    REQUIRE(r.relative_errors.size() == 3);
    CHECK(r.relative_errors[2] <= 0.10);
    CHECK(r.relative_errors[2] < r.relative_errors[0]);
    CHECK(r.convergence.size() == 2);
    CHECK(r.all_real);
}

TEST_CASE("scaling report: single N gives empty convergence") {
    const auto r = spectra::scaling_report(Model::Minimal31, {16});
    CHECK(r.convergence.empty());
    CHECK(r.gap_ratios.size() == 1);
}

TEST_CASE("scaling report: minimal31 mapped eigenvalues are real and the gap ratio drifts monotonically") {
    const auto r = spectra::scaling_report(Model::Minimal31, {16, 32, 64});
    CHECK(r.all_real);
    MESSAGE("minimal31 gap ratios " << r.gap_ratios[0] << " " << r.gap_ratios[1] << " " << r.gap_ratios[2]
                                    << ", Phi-zero ratio " << r.reference_gap_ratio);
    CHECK(r.gap_ratios[0] < r.gap_ratios[1]);
    CHECK(r.gap_ratios[1] < r.gap_ratios[2]);
    CHECK(r.gap_ratios[2] < r.reference_gap_ratio);
}

TEST_CASE("scaling report validates its N list") {
    CHECK_THROWS(spectra::scaling_report(Model::Gaussian21, {3, 8}));
    CHECK_THROWS(spectra::scaling_report(Model::Gaussian21, {16, 16}));
    CHECK_THROWS(spectra::scaling_report(Model::MeixnerPollaczek, {16}));
}
