#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "satake/quadrature.hpp"
#include "satake/satake_param.hpp"

namespace satake {

/// One quadrature node of a contour: sum f(s) * w approximates the path
/// integral of f ds (orientation bottom-to-top included in w).
struct ContourNode {
    Complex s;
    Complex w;
};

/// Barnes-integral path: central vertical segment at bounded_abscissa with
/// |Im s| <= corner_height, continued either by vertical rays at
/// ray_abscissa (horizontal connectors at the corners) or by rays tilted
/// 135 degrees into the left half-plane (tilted = true). Tilted rays give
/// superexponential decay for reflection-type gamma ratios and stay clear of
/// the horizontal pole lines Im s = Im mu_j once corner_height exceeds them.
struct ContourSpec {
    double bounded_abscissa = 0.25;
    double ray_abscissa = -0.125;
    double corner_height = 10.0;
    double ray_length = 40.0;
    double nodes_per_unit = 12.0;
    // Panel-width cap on the central segment. Gamma-ratio integrands have
    // poles a fixed horizontal distance (typically 1/4) from that segment, so
    // panel convergence is geometric with ratio set by pole distance over
    // panel half-width; 0.8-wide order-20 panels put that error near 1e-10.
    // Coarse-tolerance callers may raise the cap.
    double max_panel_width = 0.8;
    bool tilted = false;

    static double corner_for(double mu_norm, double floor_h = 10.0) {
        return std::max(floor_h, 2.0 * mu_norm);
    }
};

namespace detail {

inline void contour_segment(std::vector<ContourNode>& out, Complex z0, Complex z1,
                            double nodes_per_unit, int per_panel = 16,
                            double max_width = 1e9) {
    double len = std::abs(z1 - z0);
    if (len < 1e-14) return;
    int total = std::max(per_panel, static_cast<int>(std::ceil(len * nodes_per_unit)));
    int panels = (total + per_panel - 1) / per_panel;
    panels = std::max(panels, static_cast<int>(std::ceil(len / max_width)));
    const GLRule& r = gauss_legendre(per_panel);
    Complex dz = (z1 - z0) / static_cast<double>(panels);
    for (int p = 0; p < panels; ++p) {
        Complex a = z0 + dz * static_cast<double>(p);
        for (int i = 0; i < per_panel; ++i) {
            double t = 0.5 * (r.x[static_cast<size_t>(i)] + 1.0);
            out.push_back({a + dz * t, dz * (0.5 * r.w[static_cast<size_t>(i)])});
        }
    }
}

/// Ray with geometrically growing panels (integrand decays along the ray).
inline void contour_ray(std::vector<ContourNode>& out, Complex start, Complex dir,
                        double length, double nodes_per_unit, int per_panel = 16) {
    const GLRule& r = gauss_legendre(per_panel);
    double pos = 0.0, panel = std::min(2.0, length);
    while (pos < length - 1e-12) {
        double next = std::min(length, pos + panel);
        Complex a = start + dir * pos, b = start + dir * next;
        int local = std::max(per_panel, static_cast<int>(std::ceil((next - pos) * nodes_per_unit)));
        int sub = (local + per_panel - 1) / per_panel;
        Complex dz = (b - a) / static_cast<double>(sub);
        for (int p = 0; p < sub; ++p) {
            Complex c = a + dz * static_cast<double>(p);
            for (int i = 0; i < per_panel; ++i) {
                double t = 0.5 * (r.x[static_cast<size_t>(i)] + 1.0);
                out.push_back({c + dz * t, dz * (0.5 * r.w[static_cast<size_t>(i)])});
            }
        }
        pos = next;
        panel = std::min(panel * 2.0, 16.0);
    }
}

} // namespace detail

inline std::vector<ContourNode> build_contour(const ContourSpec& c) {
    std::vector<ContourNode> nodes;
    const Complex I(0.0, 1.0);
    const double H = c.corner_height, L = c.ray_length;
    const Complex cb(c.bounded_abscissa, 0.0);
    if (c.tilted) {
        Complex up = std::polar(1.0, 3.0 * std::numbers::pi / 4.0);
        Complex dn = std::conj(up);
        // lower ray runs toward the corner: integrate outward with flipped sign
        std::vector<ContourNode> lower;
        detail::contour_ray(lower, cb - I * H, dn, L, c.nodes_per_unit);
        for (auto& n : lower) nodes.push_back({n.s, -n.w});
        detail::contour_segment(nodes, cb - I * H, cb + I * H, c.nodes_per_unit, 20,
                                c.max_panel_width);
        detail::contour_ray(nodes, cb + I * H, up, L, c.nodes_per_unit);
    } else {
        const Complex cr(c.ray_abscissa, 0.0);
        std::vector<ContourNode> lower;
        detail::contour_ray(lower, cr - I * H, -I, L, c.nodes_per_unit);
        for (auto& n : lower) nodes.push_back({n.s, -n.w});
        detail::contour_segment(nodes, cr - I * H, cb - I * H, c.nodes_per_unit);
        detail::contour_segment(nodes, cb - I * H, cb + I * H, c.nodes_per_unit, 20,
                                c.max_panel_width);
        detail::contour_segment(nodes, cb + I * H, cr + I * H, c.nodes_per_unit);
        detail::contour_ray(nodes, cr + I * H, I, L, c.nodes_per_unit);
    }
    return nodes;
}

/// Single-variable Barnes integral: (1/2 pi i) * path integral of f.
template <typename F>
Complex barnes_integral(F&& f, const std::vector<ContourNode>& nodes) {
    Complex acc(0.0, 0.0);
    for (const ContourNode& n : nodes) acc += f(n.s) * n.w;
    return acc / (2.0 * std::numbers::pi * Complex(0.0, 1.0));
}

} // namespace satake
