#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace satake {

struct GLRule {
    std::vector<double> x, w; // nodes/weights on [-1, 1]
};

/// Gauss-Legendre nodes by Newton iteration on the recurrence; cached per n.
inline const GLRule& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, GLRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GLRule r;
    r.x.resize(static_cast<size_t>(n));
    r.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[static_cast<size_t>(n - 1 - i)] = x;
        r.w[static_cast<size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

/// Fixed-order Gauss-Legendre integral over [a, b].
template <typename F>
auto integrate_gl(F&& f, double a, double b, int n) {
    const GLRule& r = gauss_legendre(n);
    using R = decltype(f(0.0));
    R acc{};
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i)
        acc += f(mid + half * r.x[static_cast<size_t>(i)]) * r.w[static_cast<size_t>(i)];
    return acc * half;
}

/// Composite rule: [a, b] cut into panels no wider than max_panel.
template <typename F>
auto integrate_panels(F&& f, double a, double b, double max_panel, int n_per_panel) {
    int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
    using R = decltype(f(0.0));
    R acc{};
    double step = (b - a) / panels;
    for (int k = 0; k < panels; ++k)
        acc += integrate_gl(f, a + k * step, a + (k + 1) * step, n_per_panel);
    return acc;
}

/// tanh-sinh quadrature on (a, b), robust to endpoint singularities.
/// Doubles the node density until two levels agree to tol.
template <typename F>
auto integrate_tanh_sinh(F&& f, double a, double b, double tol = 1e-12, int max_level = 12) {
    using R = decltype(f(0.0));
    const double half_pi = 0.5 * std::numbers::pi;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    auto eval = [&](double t) -> R {
        double s = std::sinh(t);
        double x = std::tanh(half_pi * s);
        double c = std::cosh(half_pi * s);
        double w = half_pi * std::cosh(t) / (c * c);
        double arg = mid + half * x;
        if (arg <= a || arg >= b) return R{}; // underflowed to the endpoint
        return f(arg) * w;
    };
    const double tmax = 6.5;
    double h = 1.0;
    R prev{};
    R sum = eval(0.0);
    for (double t = h; t < tmax; t += h) sum += eval(t) + eval(-t);
    prev = sum * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        R add{};
        for (double t = h; t < tmax; t += 2.0 * h) add += eval(t) + eval(-t);
        R cur = prev * 0.5 + add * h;
        if (level >= 3 && std::abs(cur - prev) <= tol * (std::abs(cur) + 1.0)) return cur * half;
        prev = cur;
    }
    return prev * half;
}

/// Adaptive 2-d cubature: embedded Gauss-Legendre pair (n and 2n per axis)
/// on a quadtree of cells. value/error reported; absolute tolerance spread
/// by cell area.
struct CubatureResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    long long evals = 0;
    bool converged = true;
};

template <typename F>
CubatureResult integrate2d_adaptive(F&& f, double ax, double bx, double ay, double by,
                                    double abs_tol, int max_depth = 14, int base_order = 6) {
    struct Cell {
        double ax, bx, ay, by;
        int depth;
    };
    auto cell_gl = [&](const Cell& c, int n) {
        const GLRule& r = gauss_legendre(n);
        std::complex<double> acc(0.0, 0.0);
        double mx = 0.5 * (c.ax + c.bx), hx = 0.5 * (c.bx - c.ax);
        double my = 0.5 * (c.ay + c.by), hy = 0.5 * (c.by - c.ay);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                acc += f(mx + hx * r.x[static_cast<size_t>(i)],
                         my + hy * r.x[static_cast<size_t>(j)]) *
                       (r.w[static_cast<size_t>(i)] * r.w[static_cast<size_t>(j)]);
        return acc * (hx * hy);
    };
    const double total_area = (bx - ax) * (by - ay);
    CubatureResult out;
    std::vector<Cell> stack{{ax, bx, ay, by, 0}};
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        std::complex<double> coarse = cell_gl(c, base_order);
        std::complex<double> fine = cell_gl(c, 2 * base_order);
        out.evals += static_cast<long long>(base_order) * base_order * 5;
        double err = std::abs(fine - coarse);
        double area = (c.bx - c.ax) * (c.by - c.ay);
        double budget = abs_tol * area / total_area;
        if (err <= budget || c.depth >= max_depth) {
            out.value += fine;
            out.error += err;
            if (c.depth >= max_depth && err > budget) out.converged = false;
            continue;
        }
        double mx = 0.5 * (c.ax + c.bx), my = 0.5 * (c.ay + c.by);
        stack.push_back({c.ax, mx, c.ay, my, c.depth + 1});
        stack.push_back({mx, c.bx, c.ay, my, c.depth + 1});
        stack.push_back({c.ax, mx, my, c.by, c.depth + 1});
        stack.push_back({mx, c.bx, my, c.by, c.depth + 1});
    }
    return out;
}

/// Accelerated summation of oscillatory shell contributions by iterated
/// pairwise averaging of the partial sums (Euler transformation in van
/// Wijngaarden's form): row zero of the averaging table holds the partial
/// sums, each later row averages neighbours, and the triangle's apex is the
/// estimate. For tails with an alternating envelope the apex error shrinks
/// geometrically in the shell count, unlike plain Cesaro means whose error
/// decays only like log(n)/n. Convergence is declared when two consecutive
/// apex increments fall below tol relative to the current value.
struct CesaroResult {
    std::complex<double> value{0.0, 0.0};
    double achieved_tol = 0.0;
    int shells_used = 0;
    bool converged = false;
};

inline CesaroResult shell_cesaro_sum(const std::function<std::complex<double>(int)>& shell,
                                     double tol, int max_shells, int min_shells = 8) {
    std::vector<std::complex<double>> diag; // newest anti-diagonal of the table
    std::complex<double> S(0.0, 0.0);
    std::complex<double> apex_prev(0.0, 0.0), apex_prev2(0.0, 0.0);
    CesaroResult out;
    for (int k = 0; k < max_shells; ++k) {
        S += shell(k);
        std::complex<double> carry = S;
        for (size_t j = 0; j < diag.size(); ++j) {
            std::complex<double> next = 0.5 * (carry + diag[j]);
            diag[j] = carry;
            carry = next;
        }
        diag.push_back(carry);
        out.shells_used = k + 1;
        out.value = carry;
        if (k >= 2) {
            double scale = std::abs(carry) + 1e-300;
            double d1 = std::abs(carry - apex_prev), d2 = std::abs(apex_prev - apex_prev2);
            out.achieved_tol = std::max(d1, d2) / scale;
            if (k + 1 >= min_shells && d1 <= tol * scale && d2 <= tol * scale) {
                out.converged = true;
                return out;
            }
        }
        apex_prev2 = apex_prev;
        apex_prev = carry;
    }
    return out;
}

} // namespace satake
