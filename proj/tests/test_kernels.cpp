#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "satake/kernel_integrals.hpp"

using namespace satake;

namespace {

SpectralParam physical(double u1, double u2) {
    return SpectralParam::from_nu(Complex(0.0, u1), Complex(0.0, u2));
}

} // namespace

TEST_CASE("Smooth window and Bessel combination building blocks") {
    CHECK(detail::smooth_step(-0.2) == 0.0);
    CHECK(detail::smooth_step(1.1) == 1.0);
    CHECK(std::abs(detail::smooth_step(0.5) - 0.5) < 1e-15);
    // monotone and C^inf flat at the ends
    CHECK(detail::smooth_step(0.15) < detail::smooth_step(0.3));
    CHECK(detail::smooth_step(1e-4) < 1e-300);

    CHECK(detail::taper(2.0, 4.0, 8.0) == 1.0);
    CHECK(detail::taper(-9.0, 4.0, 8.0) == 0.0);
    CHECK(detail::taper(6.0, 4.0, 8.0) == detail::taper(-6.0, 4.0, 8.0));

    // odd combination vanishes at the origin, even one diverges like -log
    CHECK(detail::bessel_combo(1e-9, 1) == 0.0);
    CHECK(std::abs(detail::bessel_combo(1e-3, 1)) < 1e-5);
    CHECK(detail::bessel_combo(1e-6, 0) > 10.0);
    // frozen spot values against the underlying Bessel functions
    double x = 2.7;
    CHECK(std::abs(detail::bessel_combo(x, 0) -
                   (2.0 / std::numbers::pi * bessel_k0(x) - bessel_y0(x))) < 1e-15);
    CHECK(std::abs(detail::bessel_combo(x, 1) -
                   (2.0 / std::numbers::pi * bessel_k0(x) + bessel_y0(x))) < 1e-15);
}

TEST_CASE("Axis rule integrates a log-singular oscillatory model") {
    // integral over (0, 3) of log(u) cos(4u) du, singular endpoint treated as
    // an interior cut of the extended interval
    auto rate = [](double) { return 8.0; };
    detail::AxisRule r = detail::build_axis_rule(-1.0, 3.0, {0.0}, rate);
    double s = 0.0;
    for (size_t i = 0; i < r.x.size(); ++i) {
        if (r.x[i] <= 0.0) continue;
        s += r.w[i] * std::log(r.x[i]) * std::cos(4.0 * r.x[i]);
    }
    // reference: Si-based antiderivative evaluated with an independent
    // high-order rule on a split interval
    double ref = 0.0;
    {
        const GLRule& g = gauss_legendre(40);
        // integrate log(u)cos(4u) on [h,3] + series on [0,h]
        double h = 1e-6;
        for (int p = 0; p < 600; ++p) {
            double a = h + (3.0 - h) * p / 600.0, b = h + (3.0 - h) * (p + 1) / 600.0;
            double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            for (size_t i = 0; i < g.x.size(); ++i) {
                double u = mid + half * g.x[i];
                ref += half * g.w[i] * std::log(u) * std::cos(4.0 * u);
            }
        }
        ref += h * (std::log(h) - 1.0); // head: cos(4u) ~ 1
    }
    CHECK(std::abs(s - ref) < 1e-9);
}

TEST_CASE("Symmetrized kernel: real-integral representation matches Mellin-Barnes") {
    SpectralParam mu = physical(0.5, 0.15);
    int checked = 0;
    for (auto [y1, y2] : {std::pair{0.9, 1.2}, {1.6, 0.7}, {-0.8, 1.1}}) {
        Complex a = k_sym_int(y1, y2, mu);
        Complex b = k_sym_mb(y1, y2, mu);
        CHECK(std::abs(a - b) <= 1e-3 * std::abs(b));
        ++checked;
    }
    REQUIRE(checked == 3);
}

TEST_CASE("Degenerate kernel: real-integral representation matches Mellin-Barnes") {
    SpectralParam mu = physical(0.35, 0.1);
    int checked = 0;
    for (double y : {0.8, 1.9, -1.2}) {
        Complex a = k_w4_int(y, mu);
        Complex b = k_w4_mb(y, mu);
        CHECK(std::abs(a - b) <= 1e-2 * std::abs(b));
        ++checked;
    }
    REQUIRE(checked == 3);

    // the convolution is symmetric under permuting the spectral parameters,
    // but the quadrature grid is not, so agreement is an independent check
    Complex a = k_w4_int(1.3, mu), b = k_w4_int(1.3, mu.permuted({1, 2, 0}));
    CHECK(std::abs(a - b) <= 1e-6 * std::abs(b));
}
