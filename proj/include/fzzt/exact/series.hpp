#pragma once

#include "fzzt/exact/poly.hpp"

#include <stdexcept>
#include <vector>

namespace fzzt {

/// Power series in x truncated at x^order, whose coefficients are
/// polynomials in a second variable z.
template <class T>
class TruncSeries {
public:
    explicit TruncSeries(int order) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}
    TruncSeries(int order, std::vector<Poly<T>> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(static_cast<std::size_t>(check_order(order)) + 1);
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Poly<T>& operator[](std::size_t k) const { return coeffs_.at(k); }
    Poly<T>& operator[](std::size_t k) { return coeffs_.at(k); }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
        require_same_order(a, b);
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
        return a;
    }
    friend TruncSeries operator-(TruncSeries a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        require_same_order(a, b);
        TruncSeries r(a.order());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative truncation order");
        return order;
    }
    static void require_same_order(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order()) throw std::invalid_argument("TruncSeries: truncation orders differ");
    }

    std::vector<Poly<T>> coeffs_;
};

/// exp(p) mod x^{order+1}. Uses n f_n = sum_{k=1..n} k p_k f_{n-k}, which
/// follows from f' = p' f. The constant term of p must vanish.
template <class T>
TruncSeries<T> series_exp(const TruncSeries<T>& p) {
    if (!p[0].is_zero()) throw std::invalid_argument("series_exp: nonzero constant term");
    const int order = p.order();
    TruncSeries<T> f(order);
    f[0] = Poly<T>::constant(T(1));
    for (int n = 1; n <= order; ++n) {
        Poly<T> acc;
        for (int k = 1; k <= n; ++k) {
            if (p[k].is_zero()) continue;
            acc += (p[k] * f[n - k]) * T(k);
        }
        f[n] = acc * (T(1) / T(n));
    }
    return f;
}

}  // namespace fzzt
