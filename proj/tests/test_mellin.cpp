#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "satake/mellin_kernels.hpp"

using namespace satake;

namespace {

SpectralParam physical(double u1, double u2) {
    return SpectralParam::from_nu(Complex(0.0, u1), Complex(0.0, u2));
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-30, std::abs(b)); }

} // namespace

TEST_CASE("Gamma-factor products at hand-checked points") {
    const double pi = std::numbers::pi;
    SpectralParam zero = SpectralParam::from_nu(Complex(0, 0), Complex(0, 0));

    // all six gamma factors collapse to Gamma(1/2)^6 / Gamma(1)
    Complex g = g_meromorphic(Complex(0.5, 0.0), Complex(0.5, 0.0), zero);
    CHECK(rel(g, Complex(std::pow(pi, 3.0), 0.0)) < 1e-13);

    // frozen: (1 +- i) / (12288 pi^5)
    Complex gp = g_tilde(Complex(0.5, 0.0), zero, +1);
    Complex gm = g_tilde(Complex(0.5, 0.0), zero, -1);
    double c = 1.0 / (12288.0 * std::pow(pi, 5.0));
    CHECK(rel(gp, Complex(c, c)) < 1e-13);
    CHECK(rel(gm, Complex(c, -c)) < 1e-13);

    // conjugation symmetry of the meromorphic factor for physical parameters
    SpectralParam mu = physical(0.8, -0.3);
    Complex s1(0.4, 1.3), s2(0.3, -0.6);
    Complex a = g_meromorphic(s1, s2, mu);
    Complex b = g_meromorphic(std::conj(s1), std::conj(s2), physical(-0.8, 0.3));
    CHECK(rel(std::conj(a), b) < 1e-12);
}

TEST_CASE("Barnes integral of the K/Y Bessel combination") {
    for (double z : {0.25, 1.3, 5.0}) {
        for (int d3 : {0, 1}) {
            MellinCheckReport r = bessel_mellin_check(z, d3);
            CHECK(std::abs(r.barnes - Complex(r.closed, 0.0)) <=
                  1e-6 * std::max(1.0, std::abs(r.closed)));
        }
    }
    // small-z expansion of the d3 = 0 combination:
    // (1/pi)(-log z - 4 gamma - 4 log 2) + O(sqrt(z) log z)
    double z = 1e-7;
    MellinCheckReport r = bessel_mellin_check(z, 0);
    double lead = (-std::log(z) - 4.0 * 0.5772156649015329 - 4.0 * std::log(2.0)) /
                  std::numbers::pi;
    CHECK(std::abs(r.closed - lead) < 2e-3 * std::abs(lead));
    CHECK(std::abs(r.barnes - Complex(r.closed, 0.0)) < 1e-6 * std::abs(r.closed));
}

TEST_CASE("Barnes integral of the half-integral Bessel kernel") {
    // frozen closed-form values: cos(2 sqrt(x))/sqrt(pi x) and
    // sin(2 sqrt(x))/sqrt(pi) at x = 0.3, 2, 10
    const double frozen[2][3] = {
        {0.4714098077189557, -0.37953897582436595, 0.1782597589312609},
        {0.50163903769513775, 0.17381086802663805, 0.023333873263523563}};
    const double xs[3] = {0.3, 2.0, 10.0};
    for (int ix = 0; ix < 3; ++ix) {
        for (int d : {0, 1}) {
            MellinCheckReport r = j_half_check(xs[ix], d);
            CHECK(std::abs(r.closed - frozen[d][ix]) < 1e-14);
            CHECK(std::abs(r.barnes - Complex(r.closed, 0.0)) <=
                  1e-6 * std::max(0.1, std::abs(r.closed)));
        }
    }
}

TEST_CASE("Beta identity: gamma quotient = beta sum = real integral") {
    Complex s1(0.15, 0.3), s2(0.2, -0.1), u(0.05, 0.2);
    for (int d1 : {0, 1})
        for (int d2 : {0, 1}) {
            BetaIdentityReport r = beta_identity_check(s1, s2, u, d1, d2);
            CHECK(rel(r.beta_form, r.gamma_form) < 1e-10);
            CHECK(rel(r.integral_form, r.gamma_form) < 1e-6);
        }
    // second parameter set closer to the validity boundary
    Complex t1(0.1, -0.7), t2(0.3, 0.45), v(-0.02, -0.35);
    for (int d1 : {0, 1})
        for (int d2 : {0, 1}) {
            BetaIdentityReport r = beta_identity_check(t1, t2, v, d1, d2);
            CHECK(rel(r.beta_form, r.gamma_form) < 1e-10);
            CHECK(rel(r.integral_form, r.gamma_form) < 1e-6);
        }
    CHECK_THROWS(beta_identity_check(Complex(0.4, 0.0), Complex(0.3, 0.0), Complex(0.0, 0.0), 0, 0));
}

TEST_CASE("Long-element kernel: contour independence and conjugation") {
    // Arguments are kept small enough that |4 pi^2 y_j| = O(1): for larger
    // arguments the kernel is exponentially small against the O(1) integrand
    // and relative comparisons only measure the rounding floor of the
    // quadrature sum. Sign classes with a negative argument decay only
    // algebraically along the rays, so their tolerance reflects ray
    // truncation rather than node density.
    SpectralParam mu = physical(0.5, 0.1);
    for (auto [y1, y2] : {std::pair{0.02, 0.03}, {-0.03, 0.02}, {0.016, -0.04}, {-0.02, -0.028}}) {
        ContourSpec base = kw6_contour(mu);
        base.ray_length = 60.0;
        ContourSpec alt = base;
        alt.bounded_abscissa = 0.3;
        alt.ray_abscissa = -0.15;
        alt.ray_length = 75.0;
        alt.nodes_per_unit = 14;
        auto ca = build_contour(base), cb = build_contour(alt);
        Complex a = k_w6_mb(y1, y2, mu, ca, ca);
        Complex b = k_w6_mb(y1, y2, mu, cb, cb);
        CHECK(rel(a, b) < (y1 > 0 && y2 > 0 ? 1e-8 : 5e-4));

        // kernel at the reflected parameter is the complex conjugate; the
        // truncated quadrature sum satisfies this exactly because the node
        // set is symmetric under conjugation
        Complex ad = k_w6_mb(y1, y2, mu);
        Complex refl = k_w6_mb(y1, y2, physical(-0.5, -0.1));
        CHECK(rel(std::conj(ad), refl) < 1e-12);
    }
}

TEST_CASE("Long-element kernel: truncation tail is controlled") {
    for (auto [u1, u2] : {std::pair{0.3, 0.2}, {1.6, -0.8}}) {
        SpectralParam mu = physical(u1, u2);
        for (auto [y1, y2] : {std::pair{0.1, 0.5}, {1.0, 1.0}, {8.0, 0.4}}) {
            KernelValue r = k_w6_mb_with_tail(y1, y2, mu);
            CHECK(r.tail_estimate < 1e-6 * std::max(1e-12, std::abs(r.value)));
        }
    }
}

TEST_CASE("Symmetrized kernel: contour independence and conjugation") {
    SpectralParam mu = physical(0.7, -0.2);
    auto c = build_contour(ksym_contour(mu, 0.35, 40.0));
    for (auto [y1, y2] : {std::pair{0.02, 0.03}, {-0.03, 0.02}, {0.016, -0.04}, {-0.02, -0.028}}) {
        Complex a = k_sym_mb(y1, y2, mu);
        Complex b = k_sym_mb(y1, y2, mu, c, c);
        CHECK(rel(a, b) < 1e-8);

        Complex refl = k_sym_mb(y1, y2, physical(-0.7, 0.2));
        CHECK(rel(std::conj(a), refl) < 1e-12);
    }
}

TEST_CASE("Degenerate kernel: contour independence and conjugation") {
    SpectralParam mu = physical(0.4, 0.15);
    for (double y : {0.05, 0.7, 2.2, -1.4}) {
        Complex a = k_w4_mb(y, mu);
        auto c = build_contour(tilted_contour(0.4, mu_norm(mu)));
        Complex b = k_w4_mb(y, mu, c);
        CHECK(rel(a, b) < 1e-8);

        // conjugating swaps the +-i branch of the gamma-ratio factor as well
        // as negating the spectral parameters, so the conjugate is an
        // integral of the opposite-sign factor, not a kernel value itself
        int sgn = y > 0 ? 1 : -1;
        double ly = std::log(std::abs(y));
        SpectralParam neg = physical(-0.4, -0.15);
        Complex cc = barnes_integral(
            [&](Complex s) { return std::exp(-s * ly) * g_tilde(s, neg, -sgn); },
            build_contour(ksym_contour(mu)));
        CHECK(rel(std::conj(a), cc) < 1e-12);
    }
}

TEST_CASE("Weyl average of the long-element kernel matches the symmetrized kernel") {
    // five sign/argument combinations, tolerance 1e-4
    SpectralParam mu = physical(0.6, 0.25);
    for (auto [y1, y2] :
         {std::pair{0.02, 0.03}, {0.05, 0.012}, {-0.03, 0.02}, {0.016, -0.04}, {-0.02, -0.028}}) {
        SymmetrizeReport r = symmetrize_check(y1, y2, mu);
        CHECK(r.rel_err < 1e-4);
    }
}
