#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "satake/transforms.hpp"

using namespace satake;

namespace {

// nu0 whose Weyl orbit contains its own negative (mu0 = (ai, -ai, 0)),
// which makes the test function even and hhat real and mirror-symmetric
TestFunctionSpec symmetric_spec(double T) {
    TestFunctionSpec tf;
    tf.T = T;
    tf.nu0_1 = Complex(0.0, 0.8);
    tf.nu0_2 = Complex(0.0, -0.4);
    return tf;
}

} // namespace

TEST_CASE("hhat grid: reality, decay, mirror symmetry") {
    TestFunctionSpec tf = symmetric_spec(5.0);
    HhatGrid g = HhatGrid::build(tf);
    double sup = g.sup_abs();
    REQUIRE(sup > 0.0);

    double max_im = 0.0, max_mirror = 0.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const Complex& v = g.vals[static_cast<size_t>(i) * g.n + j];
            max_im = std::max(max_im, std::abs(v.imag()));
            const Complex& m = g.vals[static_cast<size_t>(g.n - 1 - i) * g.n + (g.n - 1 - j)];
            max_mirror = std::max(max_mirror, std::abs(v - m));
        }
    CHECK(max_im < 1e-9 * sup);
    CHECK(max_mirror < 1e-9 * sup);

    // decay towards the edge of the tabulated box
    double edge = 0.0;
    for (int j = 0; j < g.n; ++j) {
        edge = std::max(edge, std::abs(g.vals[static_cast<size_t>(0) * g.n + j]));
        edge = std::max(edge, std::abs(g.vals[static_cast<size_t>(g.n - 1) * g.n + j]));
        edge = std::max(edge, std::abs(g.vals[static_cast<size_t>(j) * g.n + 0]));
        edge = std::max(edge, std::abs(g.vals[static_cast<size_t>(j) * g.n + (g.n - 1)]));
    }
    CHECK(edge < 1e-5 * sup);
    CHECK(g.eval_log(2.0 * g.Wv, 0.0) == Complex(0.0, 0.0));
}

TEST_CASE("hhat grid agrees with direct adaptive cubature of the transform") {
    TestFunctionSpec tf = symmetric_spec(5.0);
    HhatGrid g = HhatGrid::build(tf);
    double pref = -3.0 / (std::pow(tf.T, 3.0) * 1536.0 * std::numbers::pi);
    for (auto [L1, L2] : {std::pair{0.31, -0.17}, {-1.1, 0.6}}) {
        auto f = [&](double u1, double u2) {
            Complex h = h_test(Complex(0.0, u1), Complex(0.0, u2), tf) *
                        spec_measure(Complex(0.0, u1), Complex(0.0, u2));
            return h.real() * std::exp(Complex(0.0, u1 * L1 + u2 * L2));
        };
        CubatureResult direct =
            integrate2d_adaptive(f, -g.U, g.U, -g.U, g.U, 1e-9 * g.sup_abs() / std::abs(pref));
        REQUIRE(direct.converged);
        Complex expect = pref * direct.value;
        Complex got = g.eval_log(L1, L2);
        CHECK(std::abs(got - expect) < 2e-3 * g.sup_abs());
    }
}

TEST_CASE("hhat sup grows no faster than the spectral-width square") {
    double s4 = HhatGrid::build(symmetric_spec(4.0)).sup_abs();
    double s8 = HhatGrid::build(symmetric_spec(8.0)).sup_abs();
    REQUIRE(s4 > 0.0);
    REQUIRE(s8 > 0.0);
    double slope = std::log2(s8 / s4);
    CHECK(slope < 2.1); // bound exponent 2 - 2 eps = 1.8 plus finite-T slack
}

TEST_CASE("Long-element transform agrees with the direct spectral integral") {
    TestFunctionSpec tf = symmetric_spec(5.0);
    HhatGrid g = HhatGrid::build(tf);
    for (auto [y1, y2] : {std::pair{0.9, 1.4}, {-1.2, 0.8}}) {
        Complex via_hhat = phi_w6(y1, y2, g);
        Complex direct = phi_w6_direct(y1, y2, tf);
        CHECK(std::abs(via_hhat - direct) <= 0.05 * std::abs(direct));
    }
}

TEST_CASE("Degenerate transform agrees with the direct spectral integral") {
    TestFunctionSpec tf = symmetric_spec(5.0);
    HhatGrid g = HhatGrid::build(tf);
    for (double y : {0.9, -0.9, 2.3}) {
        Complex via_hhat = phi_w4(y, g);
        Complex direct = phi_w4_direct(y, tf);
        CHECK(std::abs(via_hhat - direct) <= 0.05 * std::abs(direct));
    }
}

TEST_CASE("Transforms with an asymmetric spectral window pin the hhat orientation") {
    // nu0 whose orbit is not negation-stable: h is not even, so reading hhat
    // at the wrong sign of the log-arguments would not cancel here
    TestFunctionSpec tf;
    tf.T = 5.0;
    tf.nu0_1 = Complex(0.0, 1.1);
    tf.nu0_2 = Complex(0.0, 0.3);
    HhatGrid g = HhatGrid::build(tf);

    Complex a6 = phi_w6(0.9, 1.4, g);
    Complex d6 = phi_w6_direct(0.9, 1.4, tf);
    CHECK(std::abs(a6 - d6) <= 0.05 * std::abs(d6));

    Complex a4 = phi_w4(1.1, g);
    Complex d4 = phi_w4_direct(1.1, tf);
    CHECK(std::abs(a4 - d4) <= 0.05 * std::abs(d4));

    // the mirrored transform pairs with the reflected window (h(-nu) equals
    // h(nu) with nu0 -> -nu0 since the lump and polynomial factors are even)
    TestFunctionSpec tfn = tf;
    tfn.nu0_1 = -tf.nu0_1;
    tfn.nu0_2 = -tf.nu0_2;
    Complex a5 = phi_w5(1.1, g);
    Complex d5 = phi_w4_direct(-1.1, tfn);
    CHECK(std::abs(a5 - d5) <= 0.05 * std::abs(d5));
}

TEST_CASE("Degenerate transforms: mirror relation and small-argument limit") {
    TestFunctionSpec tf = symmetric_spec(5.0);
    HhatGrid g = HhatGrid::build(tf);

    // with an even test function the two degenerate transforms coincide at
    // reflected arguments (up to the independently built quadrature grids)
    for (double y : {1.3, -0.6}) {
        Complex a = phi_w5(y, g);
        Complex b = phi_w4(-y, g);
        CHECK(std::abs(a - b) <= 1e-6 * std::max(1e-30, std::abs(b)));
    }

    // as y -> 0 the even carriers flatten to 1 and the odd term vanishes
    // linearly, so the transform approaches the plain box integral of hhat
    Complex box(0.0, 0.0);
    for (const Complex& v : g.vals) box += v;
    box *= g.step * g.step * std::pow(tf.T, 3.0) /
           (9.0 * std::pow(std::numbers::pi, 4.0));
    Complex tiny = phi_w4(1e-8, g);
    CHECK(std::abs(tiny - box) <= 1e-3 * std::abs(box));
}
