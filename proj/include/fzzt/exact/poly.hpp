#pragma once

#include "fzzt/exact/rational.hpp"

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace fzzt {

namespace detail {
inline bool is_zero_scalar(const Rational& r) { return r.is_zero(); }
inline bool is_zero_scalar(double x) { return x == 0.0; }
inline bool is_zero_scalar(long double x) { return x == 0.0L; }
}  // namespace detail

/// Dense univariate polynomial; coefficient k multiplies z^k. Trailing zero
/// coefficients are stripped, so the zero polynomial has no coefficients and
/// degree -1.
template <class T>
class Poly {
public:
    using value_type = T;

    Poly() = default;
    Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }  // NOLINT
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly monomial(std::size_t k, T v = T(1)) {
        std::vector<T> c(k + 1, T(0));
        c[k] = std::move(v);
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::span<const T> coeffs() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const T& leading() const { return c_.back(); }

    template <class U = T>
    U eval(const U& z) const {
        U acc = U(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + convert<U>(*it);
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::is_zero_scalar(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// z -> z * factor, i.e. coefficient k is multiplied by factor^k.
    Poly scale_argument(const T& factor) const {
        std::vector<T> r = c_;
        T f = T(1);
        for (auto& v : r) {
            v *= f;
            f *= factor;
        }
        return Poly(std::move(r));
    }

    template <class U>
    Poly<U> cast() const {
        std::vector<U> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(convert<U>(v));
        return Poly<U>(std::move(r));
    }

private:
    template <class U>
    static U convert(const T& v) {
        if constexpr (std::is_same_v<T, U>) return v;
        else if constexpr (std::is_same_v<T, Rational>) return static_cast<U>(v.to_double());
        else return static_cast<U>(v);
    }

    void trim() {
        while (!c_.empty() && detail::is_zero_scalar(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

using RatPoly = Poly<Rational>;
using RealPoly = Poly<double>;

/// Complex evaluation of a real-coefficient polynomial (Horner, binary64).
template <class T>
std::complex<double> eval_complex(const Poly<T>& p, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        double v;
        if constexpr (std::is_same_v<T, Rational>) v = it->to_double();
        else v = static_cast<double>(*it);
        acc = acc * z + v;
    }
    return acc;
}

}  // namespace fzzt
