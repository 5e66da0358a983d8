#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace satake {

using Complex = std::complex<double>;

/// log(sin(pi z)) without overflow for large |Im z|. The imaginary part is
/// some branch; callers only exponentiate or combine with other logs.
inline Complex log_sin_pi(Complex z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    const double pi = std::numbers::pi;
    Complex w = std::exp(Complex(0.0, 2.0 * pi) * z); // |w| <= 1 here
    return Complex(0.0, -pi) * z + std::log(Complex(1.0, 0.0) - w) +
           Complex(0.0, pi) - std::log(Complex(0.0, 2.0));
}

/// Principal-branch log-gamma via a 9-term Lanczos approximation (g = 7),
/// with the reflection formula for Re z < 1/2.
inline Complex lgamma_complex(Complex z) {
    static const double c[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,       -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
    const double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        return std::log(pi) - log_sin_pi(z) - lgamma_complex(Complex(1.0, 0.0) - z);
    }
    z -= 1.0;
    Complex x(c[0], 0.0);
    for (int i = 1; i < 9; ++i) x += c[i] / (z + Complex(static_cast<double>(i), 0.0));
    Complex t = z + Complex(7.5, 0.0);
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

/// log of the normalized real-place factor pi^(-s/2) Gamma(s/2).
inline Complex lgamma_r(Complex s) {
    return -0.5 * s * std::log(std::numbers::pi) + lgamma_complex(0.5 * s);
}

inline Complex gamma_r(Complex s) { return std::exp(lgamma_r(s)); }

namespace detail {

// Ascending series, long double accumulation. J0/I0 everywhere below the
// asymptotic crossover; the log-coupled forms for Y0/K0 lose ~x/ln(10)
// digits to cancellation, which long double absorbs for x < 9.
inline void bessel_series(double xd, bool modified, long double& f0, long double& flog) {
    const long double x = xd;
    const long double q = x * x / 4.0L;
    long double term = 1.0L, hsum = 0.0L;
    f0 = 1.0L;
    flog = 0.0L;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        long double signed_term = (!modified && (k & 1)) ? -term : term;
        hsum += 1.0L / k;
        f0 += signed_term;
        // J-family log series carries (-1)^(k-1); the modified one is all-plus.
        flog += (modified ? term : -signed_term) * hsum;
        if (term < 1e-24L * (std::abs(f0) + 1.0L)) break;
    }
}

// Coefficients a_k(0) of the large-argument expansions.
inline const std::vector<long double>& hankel_a() {
    static const std::vector<long double> a = [] {
        std::vector<long double> v{1.0L};
        for (int k = 1; k <= 40; ++k) {
            long double m = 2.0L * k - 1.0L;
            v.push_back(v.back() * (-(m * m)) / (8.0L * k));
        }
        return v;
    }();
    return a;
}

inline void hankel_pq(double xd, long double& P, long double& Q) {
    const auto& a = hankel_a();
    const long double x = xd;
    P = 0.0L;
    Q = 0.0L;
    long double xpow = 1.0L;
    long double prev = 1e30L;
    for (int k = 0; k < 40; ++k) {
        long double t = a[static_cast<size_t>(k)] / xpow;
        if (std::abs(t) > prev) break; // divergent tail reached
        prev = std::abs(t);
        if (k % 4 == 0) P += t;
        else if (k % 4 == 1) Q += t;
        else if (k % 4 == 2) P -= t;
        else Q -= t;
        xpow *= x;
    }
}

} // namespace detail

inline double bessel_j0(double x) {
    x = std::abs(x);
    if (x < 16.0) {
        long double f0, flog;
        detail::bessel_series(x, false, f0, flog);
        return static_cast<double>(f0);
    }
    long double P, Q;
    detail::hankel_pq(x, P, Q);
    long double w = x - 0.25L * std::numbers::pi_v<long double>;
    return static_cast<double>(std::sqrt(2.0L / (std::numbers::pi_v<long double> * x)) *
                               (std::cos(w) * P - std::sin(w) * Q));
}

inline double bessel_y0(double x) {
    if (x <= 0.0) throw std::invalid_argument("bessel_y0: requires x > 0");
    const long double pi = std::numbers::pi_v<long double>;
    const long double euler = 0.5772156649015328606065120900824024L;
    if (x < 16.0) {
        long double f0, flog;
        detail::bessel_series(x, false, f0, flog);
        long double lead = (std::log(static_cast<long double>(x) / 2.0L) + euler) * f0;
        return static_cast<double>((2.0L / pi) * (lead + flog));
    }
    long double P, Q;
    detail::hankel_pq(x, P, Q);
    long double w = x - 0.25L * pi;
    return static_cast<double>(std::sqrt(2.0L / (pi * x)) * (std::sin(w) * P + std::cos(w) * Q));
}

inline double bessel_i0(double x) {
    x = std::abs(x);
    if (x < 16.0) {
        long double f0, flog;
        detail::bessel_series(x, true, f0, flog);
        return static_cast<double>(f0);
    }
    const auto& a = detail::hankel_a();
    long double s = 0.0L, xpow = 1.0L, prev = 1e30L;
    for (int k = 0; k < 40; ++k) {
        long double t = std::abs(a[static_cast<size_t>(k)]) / xpow; // all-plus signs here
        if (t > prev) break;
        prev = t;
        s += t;
        xpow *= x;
    }
    const long double pi = std::numbers::pi_v<long double>;
    return static_cast<double>(std::exp(static_cast<long double>(x)) /
                               std::sqrt(2.0L * pi * x) * s);
}

inline double bessel_k0(double x) {
    if (x <= 0.0) throw std::invalid_argument("bessel_k0: requires x > 0");
    const long double pi = std::numbers::pi_v<long double>;
    const long double euler = 0.5772156649015328606065120900824024L;
    if (x < 7.0) {
        long double f0, flog;
        detail::bessel_series(x, true, f0, flog);
        return static_cast<double>(-(std::log(static_cast<long double>(x) / 2.0L) + euler) * f0 +
                                   flog);
    }
    if (x < 16.0) {
        // Trapezoid rule on the even integrand exp(-x cosh t); exponentially
        // convergent in the step, bridges the series/asymptotic gap.
        const long double h = 0.0625L;
        const long double lx = x;
        long double tmax = std::acosh((46.0L + 2.0L * lx) / lx) + 1.0L;
        long double acc = 0.5L * std::exp(-lx); // half-weight endpoint at t = 0
        for (long double t = h; t < tmax; t += h) acc += std::exp(-lx * std::cosh(t));
        return static_cast<double>(acc * h);
    }
    const auto& a = detail::hankel_a();
    long double s = 0.0L, xpow = 1.0L, prev = 1e30L;
    for (int k = 0; k < 40; ++k) {
        long double t = a[static_cast<size_t>(k)] / xpow; // signs alternate via a_k
        if (std::abs(t) > prev) break;
        prev = std::abs(t);
        s += t;
        xpow *= x;
    }
    return static_cast<double>(std::sqrt(pi / (2.0L * x)) *
                               std::exp(-static_cast<long double>(x)) * s);
}

} // namespace satake
