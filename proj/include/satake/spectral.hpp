#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "satake/quadrature.hpp"
#include "satake/satake_param.hpp"

namespace satake {

/// tan(z) computed through exp(±2iz), stable for large |Im z| where the
/// naive sin/cos ratio overflows.
inline Complex tan_safe(Complex z) {
    const Complex I(0.0, 1.0);
    if (z.imag() >= 0.0) {
        Complex w = std::exp(2.0 * I * z);
        return -I * (w - 1.0) / (w + 1.0);
    }
    Complex w = std::exp(-2.0 * I * z);
    return -I * (1.0 - w) / (1.0 + w);
}

/// Rank-2 spectral parameter: three coordinates mu summing to zero,
/// equivalently the pair nu with
///   mu1 = 2 nu1 + nu2,  mu2 = nu2 - nu1,  mu3 = -nu1 - 2 nu2,
///   nu1 = (mu1 - mu2)/3,  nu2 = (mu2 - mu3)/3.
/// The symmetric group acts by permuting the mu coordinates.
struct SpectralParam {
    std::array<Complex, 3> mu{};

    static SpectralParam from_nu(Complex nu1, Complex nu2) {
        SpectralParam p;
        p.mu = {2.0 * nu1 + nu2, nu2 - nu1, -nu1 - 2.0 * nu2};
        return p;
    }
    static SpectralParam from_mu(const std::array<Complex, 3>& m, double tol = 1e-12) {
        if (std::abs(m[0] + m[1] + m[2]) > tol * (1.0 + std::abs(m[0]) + std::abs(m[1])))
            throw std::invalid_argument("spectral coordinates must sum to zero");
        SpectralParam p;
        p.mu = m;
        return p;
    }
    Complex nu1() const { return (mu[0] - mu[1]) / 3.0; }
    Complex nu2() const { return (mu[1] - mu[2]) / 3.0; }
    Complex nu3() const { return (mu[2] - mu[0]) / 3.0; }

    SpectralParam permuted(const std::array<int, 3>& s) const {
        SpectralParam p;
        for (int i = 0; i < 3; ++i) p.mu[static_cast<size_t>(i)] = mu[static_cast<size_t>(s[static_cast<size_t>(i)])];
        return p;
    }
};

inline const std::array<std::array<int, 3>, 6>& s3_permutations() {
    static const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                             {0, 2, 1},
                                                             {1, 0, 2},
                                                             {1, 2, 0},
                                                             {2, 0, 1},
                                                             {2, 1, 0}}};
    return perms;
}

/// Localized even test function on the spectral parameter space.
/// T: localization height; nu0: lump location (purely imaginary in use);
/// A: number of zero-pair factors removing poles near the walls;
/// eps: lump width exponent (width T^{1-eps}).
struct TestFunctionSpec {
    double T = 8.0;
    Complex nu0_1{0.0, 0.7};
    Complex nu0_2{0.0, 0.2};
    int A = 2;
    double eps = 0.1;
};

namespace detail {

inline Complex psi_gauss(Complex a, Complex b) {
    // exp(3 * sum of squared coordinates) with third coordinate -a-b
    Complex c = -a - b;
    return std::exp(3.0 * (a * a + b * b + c * c));
}

} // namespace detail

/// Polynomial factor vanishing at the first A+1 odd-integer-over-3 points of
/// each coordinate, scaled by T^2 per factor.
inline Complex h_poly_factor(Complex nu1, Complex nu2, const TestFunctionSpec& tf) {
    std::array<Complex, 3> nu = {nu1, nu2, -nu1 - nu2};
    Complex P(1.0, 0.0);
    double T2 = tf.T * tf.T;
    for (int n = 0; n <= tf.A; ++n) {
        double c = (2.0 * n + 1.0) / 3.0;
        for (const Complex& v : nu) P *= (v * v - c * c) / T2;
    }
    return P;
}

/// h(nu) = P(nu)^2 (sum over the Weyl orbit of Gaussian lumps at T*nu0)^2.
/// Real and nonnegative on purely imaginary nu when nu0 is purely imaginary.
inline Complex h_test(Complex nu1, Complex nu2, const TestFunctionSpec& tf) {
    SpectralParam base = SpectralParam::from_nu(nu1, nu2);
    double width = std::pow(tf.T, 1.0 - tf.eps);
    Complex S(0.0, 0.0);
    for (const auto& s : s3_permutations()) {
        SpectralParam w = base.permuted(s);
        S += detail::psi_gauss((w.nu1() - tf.T * tf.nu0_1) / width,
                               (w.nu2() - tf.T * tf.nu0_2) / width);
    }
    Complex P = h_poly_factor(nu1, nu2, tf);
    return P * P * S * S;
}

/// Spectral-measure density factor prod_j 3 nu_j tan(3 pi nu_j / 2).
/// On nu = i u each factor is -3 u_j tanh(3 pi u_j / 2) <= 0, so the product
/// is real and nonpositive.
inline Complex spec_measure(Complex nu1, Complex nu2) {
    std::array<Complex, 3> nu = {nu1, nu2, -nu1 - nu2};
    Complex prod(1.0, 0.0);
    for (const Complex& v : nu) prod *= 3.0 * v * tan_safe(1.5 * std::numbers::pi * v);
    return prod;
}

/// Integration box radius covering the Weyl orbit of lumps plus tails.
inline double spectral_box_radius(const TestFunctionSpec& tf, double tail_sigmas = 3.5) {
    double m = std::max({std::abs(tf.nu0_1), std::abs(tf.nu0_2), std::abs(tf.nu0_1 + tf.nu0_2)});
    return tf.T * m + tail_sigmas * std::pow(tf.T, 1.0 - tf.eps);
}

struct DeltaResult {
    double value = 0.0;     // signed: integrand is h * spec, spec <= 0 on iu
    double abs_value = 0.0; // same integral with |spec|
    double error = 0.0;
    long long evals = 0;
    bool converged = true;
    double box_radius = 0.0;
};

/// Main diagonal term: (1 / 64 pi^5) * Integral of h(iu) spec(iu) du1 du2
/// over the real u-plane (truncated to the lump-covering box).
inline DeltaResult main_term_delta(const TestFunctionSpec& tf, double rel_tol = 1e-7) {
    double R = spectral_box_radius(tf);
    auto integrand = [&](double u1, double u2) -> std::complex<double> {
        Complex nu1(0.0, u1), nu2(0.0, u2);
        Complex v = h_test(nu1, nu2, tf) * spec_measure(nu1, nu2);
        return {v.real(), std::abs(v.real())};
    };
    // pilot scale from the lump centers
    double width = std::pow(tf.T, 1.0 - tf.eps);
    double scale = 0.0;
    SpectralParam base = SpectralParam::from_nu(tf.T * tf.nu0_1, tf.T * tf.nu0_2);
    for (const auto& s : s3_permutations()) {
        SpectralParam w = base.permuted(s);
        scale += std::abs(integrand(w.nu1().imag(), w.nu2().imag()).real()) * width * width;
    }
    scale = std::max(scale, 1e-300);
    CubatureResult r =
        integrate2d_adaptive(integrand, -R, R, -R, R, rel_tol * scale, 14, 8);
    const double norm = 1.0 / (64.0 * std::pow(std::numbers::pi, 5));
    DeltaResult out;
    out.value = r.value.real() * norm;
    out.abs_value = r.value.imag() * norm;
    out.error = r.error * norm;
    out.evals = r.evals;
    out.converged = r.converged;
    out.box_radius = R;
    return out;
}

} // namespace satake
