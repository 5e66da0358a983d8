#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "satake/contour.hpp"
#include "satake/kernel_integrals.hpp"
#include "satake/mellin_kernels.hpp"
#include "satake/parallel.hpp"
#include "satake/quadrature.hpp"
#include "satake/spectral.hpp"

namespace satake {

/// Precomputed table of the spectral transform
///   hhat(v1, v2) = -3 T^-3 / (1536 pi) * integral over (u1, u2) of
///                  h(i u) v1^{i u1} v2^{i u2} spec(i u) du1 du2,
/// carrying the symmetrized kernel's overall constant so that the arithmetic
/// transforms pair with it directly.
/// The transform concentrates on |log v_j| <~ T^{eps-1}, so the table covers
/// |log v_j| <= Wv = 16 T^{eps-1} on a uniform n x n grid (zero outside) and
/// is read back with bicubic interpolation. The double integral factorizes
/// through the one-dimensional node exponentials, so the build costs
/// O(n_u^2 n + n_u n^2) multiply-adds rather than n^2 two-dimensional sums.
struct HhatGrid {
    TestFunctionSpec tf;
    double Wv = 0.0;   // half-width of the log-argument box
    double step = 0.0; // grid spacing
    double U = 0.0;    // spectral box radius used for the u-integral
    int n = 0;
    std::vector<Complex> vals; // vals[i * n + j] = hhat(exp(L_i), exp(L_j))

    static HhatGrid build(const TestFunctionSpec& tf, int n_grid = 0, int threads = 0) {
        HhatGrid g;
        g.tf = tf;
        double scale = std::pow(tf.T, 1.0 - tf.eps);
        g.U = spectral_box_radius(tf);
        g.Wv = 16.0 / scale;
        if (n_grid <= 0) {
            // ~8 samples per wavelength of the fastest carrier e^{iUL}
            n_grid = std::clamp(2 * static_cast<int>(std::ceil(1.35 * g.U * g.Wv)), 256, 768);
        }
        g.n = n_grid;
        g.step = 2.0 * g.Wv / (n_grid - 1);

        // one-dimensional u-rule: Gauss-Legendre panels narrower than the
        // spectral lump width and short against the e^{iuL} wavelength
        const GLRule& gl = gauss_legendre(20);
        double panel = std::min({4.0, 0.5 * scale, 6.0 / g.Wv});
        int n_panels = std::max(1, static_cast<int>(std::ceil(2.0 * g.U / panel)));
        std::vector<double> ux, uw;
        for (int p = 0; p < n_panels; ++p) {
            double a = -g.U + 2.0 * g.U * p / n_panels;
            double b = -g.U + 2.0 * g.U * (p + 1) / n_panels;
            double mid = 0.5 * (a + b), half = 0.5 * (b - a);
            for (size_t i = 0; i < gl.x.size(); ++i) {
                ux.push_back(mid + half * gl.x[i]);
                uw.push_back(half * gl.w[i]);
            }
        }
        const long long nu = static_cast<long long>(ux.size());
        const long long n = n_grid;

        // H[a][b] = h(iu_a, iu_b) spec(iu_a, iu_b) w_a w_b  (real on Re nu = 0)
        std::vector<double> H(static_cast<size_t>(nu * nu));
        parallel_for(nu, [&](long long a) {
            Complex na(0.0, ux[static_cast<size_t>(a)]);
            for (long long b = 0; b < nu; ++b) {
                Complex nb(0.0, ux[static_cast<size_t>(b)]);
                Complex v = h_test(na, nb, tf) * spec_measure(na, nb);
                H[static_cast<size_t>(a * nu + b)] =
                    v.real() * uw[static_cast<size_t>(a)] * uw[static_cast<size_t>(b)];
            }
        }, threads);

        // Et[g][b] = exp(i u_b L_g)
        std::vector<Complex> Et(static_cast<size_t>(n * nu));
        for (long long gidx = 0; gidx < n; ++gidx) {
            double L = -g.Wv + g.step * gidx;
            for (long long b = 0; b < nu; ++b)
                Et[static_cast<size_t>(gidx * nu + b)] =
                    std::exp(Complex(0.0, ux[static_cast<size_t>(b)] * L));
        }

        // Ct[g][a] = sum_b H[a][b] Et[g][b]
        std::vector<Complex> Ct(static_cast<size_t>(n * nu));
        parallel_for(n, [&](long long gidx) {
            const Complex* e = &Et[static_cast<size_t>(gidx * nu)];
            for (long long a = 0; a < nu; ++a) {
                const double* hrow = &H[static_cast<size_t>(a * nu)];
                Complex acc(0.0, 0.0);
                for (long long b = 0; b < nu; ++b) acc += hrow[static_cast<size_t>(b)] * e[static_cast<size_t>(b)];
                Ct[static_cast<size_t>(gidx * nu + a)] = acc;
            }
        }, threads);

        double pref = -3.0 / (std::pow(tf.T, 3.0) * 1536.0 * std::numbers::pi);
        g.vals.assign(static_cast<size_t>(n * n), Complex(0.0, 0.0));
        parallel_for(n, [&](long long i) {
            const Complex* e1 = &Et[static_cast<size_t>(i * nu)];
            for (long long j = 0; j < n; ++j) {
                const Complex* c = &Ct[static_cast<size_t>(j * nu)];
                Complex acc(0.0, 0.0);
                for (long long a = 0; a < nu; ++a) acc += e1[static_cast<size_t>(a)] * c[static_cast<size_t>(a)];
                g.vals[static_cast<size_t>(i * n + j)] = pref * acc;
            }
        }, threads);
        return g;
    }

    /// Bicubic (Catmull-Rom) read-back at logarithmic arguments; identically
    /// zero outside the tabulated box.
    Complex eval_log(double L1, double L2) const {
        if (std::abs(L1) >= Wv || std::abs(L2) >= Wv) return Complex(0.0, 0.0);
        auto weights = [](double t, double w[4]) {
            w[0] = ((-0.5 * t + 1.0) * t - 0.5) * t;
            w[1] = (1.5 * t - 2.5) * t * t + 1.0;
            w[2] = ((-1.5 * t + 2.0) * t + 0.5) * t;
            w[3] = (0.5 * t - 0.5) * t * t;
        };
        double t1 = (L1 + Wv) / step, t2 = (L2 + Wv) / step;
        int i1 = std::clamp(static_cast<int>(std::floor(t1)), 0, n - 2);
        int i2 = std::clamp(static_cast<int>(std::floor(t2)), 0, n - 2);
        double w1[4], w2[4];
        weights(t1 - i1, w1);
        weights(t2 - i2, w2);
        Complex out(0.0, 0.0);
        for (int di = 0; di < 4; ++di) {
            int r = std::clamp(i1 - 1 + di, 0, n - 1);
            Complex row(0.0, 0.0);
            for (int dj = 0; dj < 4; ++dj) {
                int c = std::clamp(i2 - 1 + dj, 0, n - 1);
                row += w2[dj] * vals[static_cast<size_t>(r) * n + c];
            }
            out += w1[di] * row;
        }
        return out;
    }

    Complex eval(double v1, double v2) const {
        if (v1 <= 0.0 || v2 <= 0.0) throw std::invalid_argument("hhat arguments must be positive");
        return eval_log(std::log(v1), std::log(v2));
    }

    double sup_abs() const {
        double m = 0.0;
        for (const Complex& v : vals) m = std::max(m, std::abs(v));
        return m;
    }
};

/// Long-element arithmetic transform from the tabulated hhat: same signed
/// Bessel-weighted double integral as the symmetrized kernel representation,
/// with the spectral powers replaced by hhat read at the reciprocal arguments
/// (pairing the kernel's v^{-nu} powers against hhat's v^{+iu} convention)
/// and weight T^3. The integrand's support is the preimage of the hhat box,
/// so no truncation window is needed.
inline Complex phi_w6(double Y1, double Y2, const HhatGrid& g) {
    if (Y1 == 0.0 || Y2 == 0.0) throw std::invalid_argument("transform arguments must be nonzero");
    const double pi = std::numbers::pi;
    double y1 = std::abs(Y1), y2 = std::abs(Y2);
    int a1 = Y1 > 0 ? 1 : -1, a2 = Y2 > 0 ? 1 : -1;
    double ly21 = std::log(y2 / y1), ly12 = -ly21;
    double c3 = 2.0 * std::log(y1 / y2);
    // L1 = 1.5 u1 + ly21, L2 = 1.5 u2 + ly12 must land in the hhat box
    double lo1 = (-g.Wv - ly21) / 1.5, hi1 = (g.Wv - ly21) / 1.5;
    double lo2 = (-g.Wv - ly12) / 1.5, hi2 = (g.Wv - ly12) / 1.5;

    auto z4bound = [&](double u1, double u2) {
        return (1.0 + std::exp(0.5 * u1)) * (1.0 + std::exp(0.5 * u2)) *
               (1.0 + std::exp(0.5 * (u2 - u1 + c3))) * y2 * std::exp(-0.5 * u2);
    };
    double carrier = 1.5 * g.U + 3.0;

    Complex total(0.0, 0.0);
    for (int d1 = 0; d1 < 2; ++d1)
        for (int d2 = 0; d2 < 2; ++d2)
            for (int e1 : {1, -1})
                for (int e2 : {1, -1})
                    for (int e3 : {1, -1}) {
                        int d3 = d1 ^ d2;
                        double pref = 1.0;
                        if (d1 && e1 * e3 * a1 < 0) pref = -pref;
                        if (d2 && e2 * a2 < 0) pref = -pref;

                        auto rate2 = [&](double u2) {
                            double zb = 0.0;
                            for (double u1 : {lo1, std::clamp(0.0, lo1, hi1),
                                              std::clamp(u2 + c3, lo1, hi1), hi1})
                                zb = std::max(zb, z4bound(u1, u2));
                            return carrier + 3.0 * pi * std::sqrt(zb);
                        };
                        std::vector<double> ocuts;
                        if (e2 < 0) ocuts.push_back(0.0);
                        detail::AxisRule outer = detail::build_axis_rule(lo2, hi2, ocuts, rate2);

                        Complex term(0.0, 0.0);
                        for (size_t oj = 0; oj < outer.x.size(); ++oj) {
                            double u2 = outer.x[oj];
                            double sz2 = std::exp(0.5 * u2), z2 = sz2 * sz2;
                            double f2 = 1.0 + e2 * sz2;
                            double L2 = 1.5 * u2 + ly12;
                            auto rate1 = [&](double u1) {
                                return carrier + 2.0 * pi * std::sqrt(z4bound(u1, u2));
                            };
                            std::vector<double> icuts;
                            if (e1 < 0) icuts.push_back(0.0);
                            if (e3 < 0) icuts.push_back(u2 + c3);
                            detail::AxisRule inner = detail::build_axis_rule(lo1, hi1, icuts, rate1);

                            Complex row(0.0, 0.0);
                            for (size_t ii = 0; ii < inner.x.size(); ++ii) {
                                double u1 = inner.x[ii];
                                Complex hv = g.eval_log(-(1.5 * u1 + ly21), -L2);
                                if (hv == Complex(0.0, 0.0)) continue;
                                double sz1 = std::exp(0.5 * u1), z1 = sz1 * sz1;
                                double u3 = u2 - u1 + c3;
                                double sz3 = std::exp(0.5 * u3), z3 = sz3 * sz3;
                                double f1 = 1.0 + e1 * sz1, f3 = 1.0 + e3 * sz3;
                                double z4 = f1 * f2 * f3 * y2 / sz2;
                                double B = detail::bessel_combo(4.0 * pi * std::sqrt(std::abs(z4)), d3);
                                double sgn = 1.0;
                                if ((d1 + d2) & 1) {
                                    if (1.0 + e1 * z1 < 0.0) sgn = -sgn;
                                    if (1.0 + e2 * z2 < 0.0) sgn = -sgn;
                                    if (1.0 + e3 * z3 < 0.0) sgn = -sgn;
                                }
                                row += (sgn * B * inner.w[ii]) * hv;
                            }
                            term += row * outer.w[oj];
                        }
                        total += pref * term;
                    }
    return total * std::pow(g.tf.T, 3.0);
}

namespace detail {

/// Shared core of the two degenerate-element transforms: the kernel's
/// convolution form paired with the tabulated hhat. In the coordinates
/// X1 = log X - 3 log t1, X2 = 2 log X - 3 log(t1 t2) the read-back
/// arguments are the coordinates themselves, the domain is exactly the hhat
/// box, and the Jacobian is 1/9:
///   (T^3 / (9 pi^4)) sum_{d in {0,1}} (alpha i)^d  II_box  hhat(X1, X2)
///       trig_d(t1) trig_d(t2) trig_d(t3) dX1 dX2,
/// t1 = (X e^{-X1})^{1/3}, t2 = (X e^{X1-X2})^{1/3}, t3 = (X e^{X2})^{1/3},
/// X = 8 pi^3 |y|, alpha = sgn y. The mirrored variant reads hhat at the
/// negated coordinates, matching the reflected spectral argument.
inline Complex phi_w4_impl(double Y, const HhatGrid& g, bool mirror) {
    if (Y == 0.0) throw std::invalid_argument("transform argument must be nonzero");
    const double pi = std::numbers::pi;
    double X = 8.0 * pi * pi * pi * std::abs(Y);
    double lX3 = std::log(X) / 3.0;
    Complex branch = Y > 0 ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
    const double W = g.Wv;
    double rd = mirror ? -1.0 : 1.0;

    auto t_of = [&](double e) { return std::exp(lX3 + e / 3.0); };
    Complex total(0.0, 0.0);
    for (int d = 0; d < 2; ++d) {
        auto rate2 = [&](double X2) {
            return g.U + 1.0 + (t_of(W - X2) + t_of(X2)) / 3.0;
        };
        detail::AxisRule outer = detail::build_axis_rule(-W, W, {}, rate2);
        Complex term(0.0, 0.0);
        for (size_t oj = 0; oj < outer.x.size(); ++oj) {
            double X2 = outer.x[oj];
            double t3 = t_of(X2);
            double trig3 = d ? std::sin(t3) : std::cos(t3);
            auto rate1 = [&](double X1) {
                return g.U + 1.0 + (t_of(-X1) + t_of(X1 - X2)) / 3.0;
            };
            detail::AxisRule inner = detail::build_axis_rule(-W, W, {}, rate1);
            Complex row(0.0, 0.0);
            for (size_t ii = 0; ii < inner.x.size(); ++ii) {
                double X1 = inner.x[ii];
                Complex hv = g.eval_log(rd * X1, rd * X2);
                if (hv == Complex(0.0, 0.0)) continue;
                double t1 = t_of(-X1), t2 = t_of(X1 - X2);
                double trig12 = d ? std::sin(t1) * std::sin(t2) : std::cos(t1) * std::cos(t2);
                row += (trig12 * inner.w[ii]) * hv;
            }
            term += row * (trig3 * outer.w[oj]);
        }
        total += (d ? branch : Complex(1.0, 0.0)) * term;
    }
    return total * std::pow(g.tf.T, 3.0) / (9.0 * pi * pi * pi * pi);
}

} // namespace detail

/// First degenerate-element transform.
inline Complex phi_w4(double Y, const HhatGrid& g) { return detail::phi_w4_impl(Y, g, false); }

/// Second degenerate-element transform: the same machinery evaluated at -Y
/// with the spectral argument reflected, which mirrors hhat through
/// (v1, v2) -> (1/v1, 1/v2).
inline Complex phi_w5(double Y, const HhatGrid& g) { return detail::phi_w4_impl(-Y, g, true); }

/// Direct evaluation of the long-element transform as a spectral integral of
/// h times the Mellin-Barnes kernel against the spectral measure, bypassing
/// hhat entirely. Used to cross-check phi_w6; the measure normalization in
/// the (u1, u2) chart is measure_factor = -3.
inline Complex phi_w6_direct(double Y1, double Y2, const TestFunctionSpec& tf,
                             double measure_factor = -3.0, int threads = 0) {
    double U = spectral_box_radius(tf);
    ContourSpec cs;
    cs.bounded_abscissa = 0.25;
    cs.ray_abscissa = -0.125;
    cs.corner_height = ContourSpec::corner_for(U);
    cs.ray_length = 10.0;
    cs.nodes_per_unit = 7;
    cs.max_panel_width = 999.0; // coarse cross-check; node count dominates cost
    auto contour = build_contour(cs);

    const GLRule& gl = gauss_legendre(10);
    double panel = std::min(2.4, 0.55 * std::pow(tf.T, 1.0 - tf.eps));
    int n_panels = std::max(1, static_cast<int>(std::ceil(2.0 * U / panel)));
    std::vector<double> ux, uw;
    for (int p = 0; p < n_panels; ++p) {
        double a = -U + 2.0 * U * p / n_panels;
        double b = -U + 2.0 * U * (p + 1) / n_panels;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (size_t i = 0; i < gl.x.size(); ++i) {
            ux.push_back(mid + half * gl.x[i]);
            uw.push_back(half * gl.w[i]);
        }
    }
    const long long nu = static_cast<long long>(ux.size());

    // pass 1: spectral weight at every node pair, to skip the dead regions
    std::vector<double> hsv(static_cast<size_t>(nu * nu));
    double hs_max = 0.0;
    for (long long a = 0; a < nu; ++a)
        for (long long b = 0; b < nu; ++b) {
            Complex n1(0.0, ux[static_cast<size_t>(a)]), n2(0.0, ux[static_cast<size_t>(b)]);
            double v = (h_test(n1, n2, tf) * spec_measure(n1, n2)).real();
            hsv[static_cast<size_t>(a * nu + b)] = v;
            hs_max = std::max(hs_max, std::abs(v));
        }
    const double cutoff = 1e-13 * hs_max;

    std::vector<Complex> rows(static_cast<size_t>(nu), Complex(0.0, 0.0));
    parallel_for(nu, [&](long long a) {
        double u1 = ux[static_cast<size_t>(a)];
        Complex acc(0.0, 0.0);
        for (long long b = 0; b < nu; ++b) {
            double hs = hsv[static_cast<size_t>(a * nu + b)];
            if (std::abs(hs) < cutoff) continue;
            double u2 = ux[static_cast<size_t>(b)];
            SpectralParam mu = SpectralParam::from_nu(Complex(0.0, u1), Complex(0.0, u2));
            acc += hs * k_w6_mb(Y1, Y2, mu, contour, contour) * uw[static_cast<size_t>(b)];
        }
        rows[static_cast<size_t>(a)] = acc * uw[static_cast<size_t>(a)];
    }, threads);
    Complex total(0.0, 0.0);
    for (const Complex& r : rows) total += r;
    return measure_factor * total;
}

/// Direct evaluation of the degenerate-element transform as a spectral
/// integral of h times its Mellin-Barnes kernel, bypassing hhat. Cross-checks
/// phi_w4. The mirrored transform phi_w5(Y) equals phi_w4_direct(-Y, ...)
/// with the spectral window reflected (nu0 -> -nu0); for an even window the
/// reflection is a no-op.
inline Complex phi_w4_direct(double Y, const TestFunctionSpec& tf, double measure_factor = -3.0,
                             int threads = 0) {
    double U = spectral_box_radius(tf);
    const GLRule& gl = gauss_legendre(10);
    double panel = std::min(2.4, 0.55 * std::pow(tf.T, 1.0 - tf.eps));
    int n_panels = std::max(1, static_cast<int>(std::ceil(2.0 * U / panel)));
    std::vector<double> ux, uw;
    for (int p = 0; p < n_panels; ++p) {
        double a = -U + 2.0 * U * p / n_panels;
        double b = -U + 2.0 * U * (p + 1) / n_panels;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (size_t i = 0; i < gl.x.size(); ++i) {
            ux.push_back(mid + half * gl.x[i]);
            uw.push_back(half * gl.w[i]);
        }
    }
    const long long nu = static_cast<long long>(ux.size());

    std::vector<double> hsv(static_cast<size_t>(nu * nu));
    double hs_max = 0.0;
    for (long long a = 0; a < nu; ++a)
        for (long long b = 0; b < nu; ++b) {
            Complex n1(0.0, ux[static_cast<size_t>(a)]), n2(0.0, ux[static_cast<size_t>(b)]);
            double v = (h_test(n1, n2, tf) * spec_measure(n1, n2)).real();
            hsv[static_cast<size_t>(a * nu + b)] = v;
            hs_max = std::max(hs_max, std::abs(v));
        }
    const double cutoff = 1e-13 * hs_max;

    std::vector<Complex> rows(static_cast<size_t>(nu), Complex(0.0, 0.0));
    parallel_for(nu, [&](long long a) {
        double u1 = ux[static_cast<size_t>(a)];
        Complex acc(0.0, 0.0);
        for (long long b = 0; b < nu; ++b) {
            double hs = hsv[static_cast<size_t>(a * nu + b)];
            if (std::abs(hs) < cutoff) continue;
            double u2 = ux[static_cast<size_t>(b)];
            SpectralParam mu = SpectralParam::from_nu(Complex(0.0, u1), Complex(0.0, u2));
            acc += hs * k_w4_mb(Y, mu) * uw[static_cast<size_t>(b)];
        }
        rows[static_cast<size_t>(a)] = acc * uw[static_cast<size_t>(a)];
    }, threads);
    Complex total(0.0, 0.0);
    for (const Complex& r : rows) total += r;
    return measure_factor * total;
}

} // namespace satake
