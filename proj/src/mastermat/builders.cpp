#include "fzzt/mastermat/builders.hpp"

#include <cmath>
#include <stdexcept>

namespace fzzt::mastermat {

namespace {

void require_dimension(int n) {
    if (n < 1) throw std::invalid_argument("master matrix dimension must be >= 1");
}

Entry exact_entry(int row, int col, const Rational& v) { return Entry{row, col, v.to_double(), v}; }

// Lower-two-banded (3,1) pattern with a given superdiagonal coupling; rows
// and columns are 0-based here, so row r corresponds to i = r + 1.
template <class Coupling>
std::vector<Entry> minimal31_entries(int n, Coupling&& superdiag) {
    std::vector<Entry> e;
    for (int r = 0; r < n; ++r) {
        const long i = r + 1;
        if (r + 1 < n) e.push_back(superdiag(r));
        if (r >= 1) e.push_back(exact_entry(r, r - 1, Rational(3 * (i - 1))));
        if (r >= 2) e.push_back(exact_entry(r, r - 2, Rational((i - 1) * (i - 2))));
    }
    return e;
}

}  // namespace

StructuredMatrix build_master_21(int n, const Rational& g) {
    require_dimension(n);
    if (g.sign() <= 0) throw std::invalid_argument("build_master_21: g must be positive");
    std::vector<Entry> e;
    std::vector<Rational> sq;
    for (int k = 1; k < n; ++k) {
        const Rational prod = g * Rational(k, 2);
        const double v = std::sqrt(prod.to_double());
        e.push_back(Entry{k - 1, k, v, std::nullopt});
        e.push_back(Entry{k, k - 1, v, std::nullopt});
        sq.push_back(prod);
    }
    ModelParams p;
    p.g = g;
    return StructuredMatrix(Model::Gaussian21, n, Structure::SymmetricTridiagonal, ScalarKind::Exact, std::move(e),
                            std::move(p), std::move(sq));
}

StructuredMatrix build_master_21(int n, double g) {
    require_dimension(n);
    if (!(g > 0.0)) throw std::invalid_argument("build_master_21: g must be positive");
    std::vector<Entry> e;
    for (int k = 1; k < n; ++k) {
        const double v = std::sqrt(g / 2.0) * std::sqrt(static_cast<double>(k));
        e.push_back(Entry{k - 1, k, v, std::nullopt});
        e.push_back(Entry{k, k - 1, v, std::nullopt});
    }
    ModelParams p;
    p.g_float = g;
    return StructuredMatrix(Model::Gaussian21, n, Structure::SymmetricTridiagonal, ScalarKind::Floating, std::move(e),
                            std::move(p));
}

StructuredMatrix build_master_31(int n, const Rational& g) {
    require_dimension(n);
    auto e = minimal31_entries(n, [&](int r) { return exact_entry(r, r + 1, g); });
    ModelParams p;
    p.g = g;
    return StructuredMatrix(Model::Minimal31, n, Structure::LowerTwoBandedHessenberg, ScalarKind::Exact, std::move(e),
                            std::move(p));
}

StructuredMatrix build_master_31(int n, double g) {
    require_dimension(n);
    auto e = minimal31_entries(n, [&](int r) { return Entry{r, r + 1, g, std::nullopt}; });
    for (auto& x : e) x.exact.reset();
    ModelParams p;
    p.g_float = g;
    return StructuredMatrix(Model::Minimal31, n, Structure::LowerTwoBandedHessenberg, ScalarKind::Floating,
                            std::move(e), std::move(p));
}

double deformed_coupling(int n, double s1) {
    const double nn = static_cast<double>(n);
    return (1.0 / nn) * (1.0 + s1 / std::sqrt(nn));
}

StructuredMatrix build_master_31_deformed(int n, double s1) {
    require_dimension(n);
    const double c = deformed_coupling(n, s1);
    auto e = minimal31_entries(n, [&](int r) { return Entry{r, r + 1, c, std::nullopt}; });
    for (auto& x : e) x.exact.reset();
    ModelParams p;
    p.g_float = c;
    p.s1 = s1;
    return StructuredMatrix(Model::Minimal31Deformed, n, Structure::LowerTwoBandedHessenberg, ScalarKind::Floating,
                            std::move(e), std::move(p));
}

StructuredMatrix build_mp_matrix(int n) {
    require_dimension(n);
    std::vector<Entry> e;
    for (int i = 1; i < n; ++i) {
        e.push_back(exact_entry(i - 1, i, Rational(1)));
        e.push_back(exact_entry(i, i - 1, Rational(i) * Rational(2 * i + 1, 2)));
    }
    return StructuredMatrix(Model::MeixnerPollaczek, n, Structure::TridiagonalNonsymmetric, ScalarKind::Exact,
                            std::move(e));
}

StructuredMatrix build_bordered_mp(int n, std::span<const double> b) {
    require_dimension(n);
    if (b.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("build_bordered_mp: need n+1 border coefficients");
    const double bn = b[static_cast<std::size_t>(n)];
    if (bn == 0.0) throw std::invalid_argument("build_bordered_mp: b[n] must be nonzero");
    for (double v : b)
        if (!std::isfinite(v)) throw std::invalid_argument("build_bordered_mp: non-finite border coefficient");

    std::vector<Entry> e;
    for (int i = 1; i < n; ++i) {
        e.push_back(Entry{i - 1, i, 1.0, std::nullopt});
        if (i < n - 1) e.push_back(Entry{i, i - 1, static_cast<double>(i) * (i + 0.5), std::nullopt});
    }
    const int last = n - 1;
    for (int j = 0; j < n; ++j) {
        double v = -b[static_cast<std::size_t>(j)] / bn;
        if (last >= 1 && j == last - 1) v += static_cast<double>(last) * (last + 0.5);
        e.push_back(Entry{last, j, v, std::nullopt});
    }
    ModelParams p;
    p.border.assign(b.begin(), b.end());
    return StructuredMatrix(Model::BorderedMP, n, Structure::Bordered, ScalarKind::Floating, std::move(e), std::move(p));
}

}  // namespace fzzt::mastermat
