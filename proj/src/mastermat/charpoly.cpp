#include "fzzt/mastermat/charpoly.hpp"

#include <stdexcept>

namespace fzzt::mastermat {

namespace {

template <class T>
struct Access;

template <>
struct Access<Rational> {
    static Rational at(const StructuredMatrix& m, int i, int j) { return *m.exact_at(i, j); }
    static Rational sq(const StructuredMatrix& m, int k) { return m.offdiag_squared()[static_cast<std::size_t>(k)]; }
};

template <>
struct Access<double> {
    static double at(const StructuredMatrix& m, int i, int j) { return m.at(i, j); }
    static double sq(const StructuredMatrix& m, int k) {
        return m.offdiag_squared()[static_cast<std::size_t>(k)].to_double();
    }
};

template <class T>
Poly<T> tridiagonal(const StructuredMatrix& m) {
    using A = Access<T>;
    const int n = m.n();
    const Poly<T> z = Poly<T>::monomial(1);
    const bool have_sq = !m.offdiag_squared().empty();
    Poly<T> prev = Poly<T>::constant(T(1));
    Poly<T> cur = z - Poly<T>::constant(A::at(m, 0, 0));
    for (int k = 1; k < n; ++k) {
        const T c = have_sq ? A::sq(m, k - 1) : A::at(m, k, k - 1) * A::at(m, k - 1, k);
        Poly<T> next = (z - Poly<T>::constant(A::at(m, k, k))) * cur - prev * c;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// D_k = (z - m_kk) D_{k-1} - sum_{j<k} m_kj (prod_{t=j}^{k-1} m_{t,t+1}) D_{j-1},
// 0-based here with D_{-1} = 1 stored at index 0.
template <class T>
Poly<T> lower_hessenberg(const StructuredMatrix& m) {
    using A = Access<T>;
    const int n = m.n();
    const Poly<T> z = Poly<T>::monomial(1);
    std::vector<Poly<T>> d;
    d.reserve(static_cast<std::size_t>(n) + 1);
    d.push_back(Poly<T>::constant(T(1)));
    for (int k = 0; k < n; ++k) {
        Poly<T> next = (z - Poly<T>::constant(A::at(m, k, k))) * d[static_cast<std::size_t>(k)];
        T chain = T(1);
        for (int j = k - 1; j >= 0; --j) {
            chain *= A::at(m, j, j + 1);
            if (detail::is_zero_scalar(chain)) break;
            const T mkj = A::at(m, k, j);
            if (detail::is_zero_scalar(mkj)) continue;
            next -= d[static_cast<std::size_t>(j)] * (mkj * chain);
        }
        d.push_back(std::move(next));
    }
    return d.back();
}

template <class T>
Poly<T> compute(const StructuredMatrix& m) {
    switch (m.structure()) {
        case Structure::SymmetricTridiagonal:
        case Structure::TridiagonalNonsymmetric: return tridiagonal<T>(m);
        case Structure::LowerTwoBandedHessenberg:
        case Structure::Bordered: return lower_hessenberg<T>(m);
    }
    throw std::logic_error("charpoly: unknown structure");
}

}  // namespace

RatPoly charpoly_exact(const StructuredMatrix& m) {
    if (m.kind() != ScalarKind::Exact) throw std::invalid_argument("charpoly_exact: matrix has floating entries");
    if (m.structure() == Structure::SymmetricTridiagonal && m.n() > 1 && m.offdiag_squared().empty())
        throw std::invalid_argument("charpoly_exact: symmetric-tridiagonal matrix without exact squared products");
    return compute<Rational>(m);
}

RealPoly charpoly_real(const StructuredMatrix& m) { return compute<double>(m); }

std::variant<RatPoly, RealPoly> charpoly(const StructuredMatrix& m) {
    if (m.kind() == ScalarKind::Exact) return charpoly_exact(m);
    return charpoly_real(m);
}

}  // namespace fzzt::mastermat
