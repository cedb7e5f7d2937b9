#include "fzzt/spectra/eigen.hpp"

#include "fzzt/mastermat/builders.hpp"
#include "fzzt/mastermat/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fzzt::spectra {

using mastermat::Structure;
using mastermat::StructuredMatrix;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Row-major square matrix view with (i, j) indexing.
struct Dense {
    int n;
    std::vector<double> a;
    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Implicit QL on a symmetric tridiagonal matrix; d is the diagonal and
// e[i] couples rows i and i+1 (e has n entries, the last unused).
bool tqli(std::vector<double>& d, std::vector<double>& e, long& sweeps) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return true;
    e.resize(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(n - 1)] = 0.0;
    const long cap = 30L * n;
    for (int l = 0; l < n; ++l) {
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
            }
            if (m != l) {
                if (++sweeps > cap) return false;
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + sign_of(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    const double f = s * e[i];
                    const double b = c * e[i];
                    e[i + 1] = (r = std::hypot(f, g));
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    return true;
}

// Diagonal similarity with power-of-two factors until row and column norms
// are comparable. Preserves Hessenberg and band structure.
void balance(Dense& a) {
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    const int n = a.n;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                g = 1.0 / f;
                for (int j = 0; j < n; ++j) a(i, j) *= g;
                for (int j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

// Gaussian elimination with pivoting to upper Hessenberg form.
void elmhes(Dense& a) {
    const int n = a.n;
    for (int m = 1; m < n - 1; ++m) {
        double x = 0.0;
        int i = m;
        for (int j = m; j < n; ++j)
            if (std::abs(a(j, m - 1)) > std::abs(x)) {
                x = a(j, m - 1);
                i = j;
            }
        if (i != m) {
            for (int j = m - 1; j < n; ++j) std::swap(a(i, j), a(m, j));
            for (int j = 0; j < n; ++j) std::swap(a(j, i), a(j, m));
        }
        if (x != 0.0) {
            for (i = m + 1; i < n; ++i) {
                double y = a(i, m - 1);
                if (y == 0.0) continue;
                y /= x;
                a(i, m - 1) = y;
                for (int j = m; j < n; ++j) a(i, j) -= y * a(m, j);
                for (int j = 0; j < n; ++j) a(j, m) += y * a(j, i);
            }
        }
    }
    for (int i = 2; i < n; ++i)
        for (int j = 0; j < i - 1; ++j) a(i, j) = 0.0;
}

// Francis double-shift QR on an upper Hessenberg matrix. Returns false when
// the sweep cap is hit; wr/wi then hold deflated eigenvalues plus the
// diagonal of the remaining block.
bool hqr(Dense& a, std::vector<double>& wr, std::vector<double>& wi, long& sweeps) {
    const int n = a.n;
    wr.assign(static_cast<std::size_t>(n), 0.0);
    wi.assign(static_cast<std::size_t>(n), 0.0);
    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
    const long cap = 30L * n;
    int nn = n - 1;
    double t = 0.0;
    double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l = 0;
        do {
            for (l = nn; l > 0; --l) {
                s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) <= kEps * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            x = a(nn, nn);
            if (l == nn) {
                wr[nn] = x + t;
                wi[nn--] = 0.0;
            } else {
                y = a(nn - 1, nn - 1);
                w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    p = 0.5 * (y - x);
                    q = p * p + w;
                    z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_of(z, p);
                        wr[nn - 1] = wr[nn] = x + z;
                        if (z != 0.0) wr[nn] = x - w / z;
                        wi[nn - 1] = wi[nn] = 0.0;
                    } else {
                        wr[nn - 1] = wr[nn] = x + p;
                        wi[nn - 1] = -(wi[nn] = z);
                    }
                    nn -= 2;
                } else {
                    if (++sweeps > cap) {
                        for (int i = 0; i <= nn; ++i) {
                            wr[i] = a(i, i) + t;
                            wi[i] = 0.0;
                        }
                        return false;
                    }
                    if (its > 0 && its % 10 == 0) {
                        // exceptional shift
                        t += x;
                        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                        s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int m = nn - 2;
                    for (; m >= l; --m) {
                        z = a(m, m);
                        r = x - z;
                        s = y - z;
                        p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - r - s;
                        r = a(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
                        if (u <= kEps * v) break;
                    }
                    for (int i = m; i < nn - 1; ++i) {
                        a(i + 2, i) = 0.0;
                        if (i != m) a(i + 2, i - 1) = 0.0;
                    }
                    for (int k = m; k < nn; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0.0;
                            if (k + 1 != nn) r = a(k + 2, k - 1);
                            if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        if ((s = sign_of(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
                            if (k == m) {
                                if (l != m) a(k, k - 1) = -a(k, k - 1);
                            } else {
                                a(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for (int j = k; j <= nn; ++j) {
                                p = a(k, j) + q * a(k + 1, j);
                                if (k + 1 != nn) {
                                    p += r * a(k + 2, j);
                                    a(k + 2, j) -= p * z;
                                }
                                a(k + 1, j) -= p * y;
                                a(k, j) -= p * x;
                            }
                            const int mmin = nn < k + 3 ? nn : k + 3;
                            for (int i = l; i <= mmin; ++i) {
                                p = x * a(i, k) + y * a(i, k + 1);
                                if (k + 1 != nn) {
                                    p += z * a(i, k + 2);
                                    a(i, k + 2) -= p * r;
                                }
                                a(i, k + 1) -= p * q;
                                a(i, k) -= p;
                            }
                        }
                    }
                }
            }
        } while (l + 1 < nn);
    }
    return true;
}

void sort_eigs(std::vector<std::complex<double>>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
}

SpectrumReport from_hqr(Dense& h, std::string method) {
    SpectrumReport rep;
    std::vector<double> wr, wi;
    rep.converged = hqr(h, wr, wi, rep.sweeps);
    rep.method = std::move(method);
    for (std::size_t i = 0; i < wr.size(); ++i) rep.eigenvalues.emplace_back(wr[i], wi[i]);
    sort_eigs(rep.eigenvalues);
    classify(rep);
    return rep;
}

SpectrumReport from_tridiagonal(std::vector<double> d, std::vector<double> e, std::string method) {
    SpectrumReport rep;
    rep.converged = tqli(d, e, rep.sweeps);
    rep.method = std::move(method);
    for (double v : d) rep.eigenvalues.emplace_back(v, 0.0);
    sort_eigs(rep.eigenvalues);
    classify(rep);
    return rep;
}

double residual_of(const mastermat::StructuredMatrix& m, const std::vector<std::complex<double>>& eigs) {
    const RealPoly cp = mastermat::charpoly_real(m);
    double norm = 0.0;
    for (double c : cp.coeffs()) norm += c * c;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm)) return 0.0;
    double worst = 0.0;
    for (const auto& l : eigs) worst = std::max(worst, std::abs(eval_complex(cp, l)) / norm);
    return worst;
}

}  // namespace

std::string to_string(Classification c) {
    return c == Classification::AllReal ? "all-real" : "complex-pairs-present";
}

void classify(SpectrumReport& r, double threshold) {
    double radius = 0.0, max_im = 0.0;
    for (const auto& l : r.eigenvalues) {
        radius = std::max(radius, std::abs(l));
        max_im = std::max(max_im, std::abs(l.imag()));
    }
    r.max_imag_ratio = radius > 0.0 ? max_im / radius : 0.0;
    r.classification = r.max_imag_ratio <= threshold ? Classification::AllReal : Classification::ComplexPairsPresent;
}

SpectrumReport eigenvalues_dense(std::vector<double> a, int n) {
    if (n < 1 || a.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("eigenvalues_dense: bad dimensions");
    Dense h{n, std::move(a)};
    balance(h);
    elmhes(h);
    return from_hqr(h, "balance+hessenberg+francis-qr");
}

SpectrumReport eigenvalues(const StructuredMatrix& m) {
    const int n = m.n();
    SpectrumReport rep;
    switch (m.structure()) {
        case Structure::SymmetricTridiagonal: {
            std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n), 0.0);
            const auto sq = m.offdiag_squared();
            for (int i = 0; i < n; ++i) d[i] = m.at(i, i);
            for (int i = 0; i + 1 < n; ++i) e[i] = sq.empty() ? m.at(i + 1, i) : std::sqrt(sq[i].to_double());
            rep = from_tridiagonal(std::move(d), std::move(e), "implicit-ql");
            break;
        }
        case Structure::TridiagonalNonsymmetric: {
            bool positive = true;
            std::vector<double> d(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n), 0.0);
            for (int i = 0; i < n; ++i) d[i] = m.at(i, i);
            for (int i = 0; i + 1 < n; ++i) {
                // product from exact entries when available, to avoid double rounding
                const auto lo = m.exact_at(i + 1, i);
                const auto up = m.exact_at(i, i + 1);
                const double c = (lo && up) ? (*lo * *up).to_double() : m.at(i + 1, i) * m.at(i, i + 1);
                if (!(c > 0.0)) positive = false;
                e[i] = c > 0.0 ? std::sqrt(c) : 0.0;
            }
            if (positive) {
                rep = from_tridiagonal(std::move(d), std::move(e), "symmetrized-implicit-ql");
            } else {
                rep = eigenvalues_dense(m.dense(), n);
            }
            break;
        }
        case Structure::LowerTwoBandedHessenberg:
        case Structure::Bordered: {
            Dense h{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
            for (const auto& e : m.entries()) h(e.col, e.row) = e.value;  // transpose: upper Hessenberg
            balance(h);
            rep = from_hqr(h, "transpose+balance+francis-qr");
            break;
        }
    }
    rep.residual = residual_of(m, rep.eigenvalues);
    return rep;
}

std::function<StructuredMatrix(int)> family_of(const mastermat::ModelSpec& base) {
    return [base](int n) {
        mastermat::ModelSpec s = base;
        s.n = n;
        const bool needs_g = s.model == mastermat::Model::Gaussian21 || s.model == mastermat::Model::Minimal31;
        if (needs_g && !s.g && !s.g_float) s.g = Rational(1, n);
        return mastermat::build(s);
    };
}

RealnessScan realness_boundary(const std::function<StructuredMatrix(int)>& family, int lo, int hi) {
    if (lo > hi || lo < 1) throw std::invalid_argument("realness_boundary: empty or invalid N range");
    RealnessScan scan;
    for (int n = lo; n <= hi; ++n) {
        const auto rep = eigenvalues(family(n));
        scan.n_values.push_back(n);
        scan.max_imag_ratio.push_back(rep.max_imag_ratio);
        if (!scan.first_complex && rep.classification == Classification::ComplexPairsPresent) scan.first_complex = n;
    }
    return scan;
}

RealnessScan realness_boundary(const mastermat::ModelSpec& base, int lo, int hi) {
    return realness_boundary(family_of(base), lo, hi);
}

}  // namespace fzzt::spectra
