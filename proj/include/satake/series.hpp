#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace satake {

namespace detail {
inline bool coeff_is_zero(long long v) { return v == 0; }
inline bool coeff_is_zero(double v) { return v == 0.0; }
inline bool coeff_is_zero(const std::complex<double>& v) { return v == std::complex<double>(0.0, 0.0); }
} // namespace detail

/// Dense one-variable power series / polynomial with coefficient type T.
/// Index k holds the coefficient of q^k. Trailing exact zeros are trimmed.
template <typename T>
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PowerSeries monomial(int k, T v = T(1)) {
        std::vector<T> c(static_cast<size_t>(k) + 1, T(0));
        c[static_cast<size_t>(k)] = v;
        return PowerSeries(std::move(c));
    }
    static PowerSeries one() { return monomial(0); }

    [[nodiscard]] int size() const { return static_cast<int>(c_.size()); }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }

    [[nodiscard]] T coeff(int k) const {
        if (k < 0 || k >= size()) return T(0);
        return c_[static_cast<size_t>(k)];
    }
    void set_coeff(int k, T v) {
        if (k < 0) throw std::invalid_argument("PowerSeries: negative index");
        if (k >= size()) c_.resize(static_cast<size_t>(k) + 1, T(0));
        c_[static_cast<size_t>(k)] = v;
        trim();
    }

    /// Highest index with nonzero coefficient, -1 if zero.
    [[nodiscard]] int degree() const { return size() - 1; }
    /// Lowest index with nonzero coefficient, -1 if zero.
    [[nodiscard]] int min_degree() const {
        for (int k = 0; k < size(); ++k)
            if (!detail::coeff_is_zero(c_[static_cast<size_t>(k)])) return k;
        return -1;
    }

    PowerSeries& operator+=(const PowerSeries& o) {
        if (o.size() > size()) c_.resize(o.c_.size(), T(0));
        for (int k = 0; k < o.size(); ++k) c_[static_cast<size_t>(k)] += o.c_[static_cast<size_t>(k)];
        trim();
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        if (o.size() > size()) c_.resize(o.c_.size(), T(0));
        for (int k = 0; k < o.size(); ++k) c_[static_cast<size_t>(k)] -= o.c_[static_cast<size_t>(k)];
        trim();
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    PowerSeries& scale(T s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

    template <typename X>
    [[nodiscard]] X eval(const X& x) const {
        X acc = X(0);
        for (int k = size() - 1; k >= 0; --k) acc = acc * x + X(c_[static_cast<size_t>(k)]);
        return acc;
    }

    [[nodiscard]] const std::vector<T>& coeffs() const { return c_; }

private:
    std::vector<T> c_;

    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
};

/// Product, optionally truncated to degree <= trunc (trunc < 0: exact).
template <typename T>
PowerSeries<T> mul(const PowerSeries<T>& a, const PowerSeries<T>& b, int trunc = -1) {
    if (a.is_zero() || b.is_zero()) return {};
    int deg = a.degree() + b.degree();
    if (trunc >= 0 && deg > trunc) deg = trunc;
    std::vector<T> c(static_cast<size_t>(deg) + 1, T(0));
    for (int i = 0; i <= a.degree(); ++i) {
        if (i > deg) break;
        for (int j = 0; j <= b.degree() && i + j <= deg; ++j)
            c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return PowerSeries<T>(std::move(c));
}

/// Multiplicative inverse as a power series up to degree trunc; requires
/// an invertible constant term.
template <typename T>
PowerSeries<T> inverse(const PowerSeries<T>& a, int trunc) {
    T a0 = a.coeff(0);
    if (detail::coeff_is_zero(a0)) throw std::invalid_argument("PowerSeries inverse: zero constant term");
    std::vector<T> c(static_cast<size_t>(trunc) + 1, T(0));
    c[0] = T(1) / a0;
    for (int k = 1; k <= trunc; ++k) {
        T s = T(0);
        for (int j = 1; j <= k; ++j) s += a.coeff(j) * c[static_cast<size_t>(k - j)];
        c[static_cast<size_t>(k)] = -s / a0;
    }
    return PowerSeries<T>(std::move(c));
}

using QPoly = PowerSeries<long long>;
using CSeries = PowerSeries<std::complex<double>>;

/// max_k |a_k - b_k| over indices up to the larger degree.
inline double max_coeff_dev(const CSeries& a, const CSeries& b) {
    int top = std::max(a.degree(), b.degree());
    double m = 0.0;
    for (int k = 0; k <= top; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
    return m;
}

/// Geometric series 1/(1 - q^step) truncated at degree trunc.
inline CSeries geometric_series(int step, int trunc) {
    std::vector<std::complex<double>> c(static_cast<size_t>(trunc) + 1, 0.0);
    for (int k = 0; k <= trunc; k += step) c[static_cast<size_t>(k)] = 1.0;
    return CSeries(std::move(c));
}

} // namespace satake
