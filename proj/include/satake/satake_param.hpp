#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace satake {

using Complex = std::complex<double>;

/// Unitary torus point for rank N: N unit-modulus eigenvalues with product 1.
/// Parametrized by N-1 free angles; the last eigenvalue absorbs the rest.
struct SatakeParam {
    std::vector<Complex> alphas;

    [[nodiscard]] int rank_n() const { return static_cast<int>(alphas.size()); }

    static SatakeParam from_angles(const std::vector<double>& theta) {
        SatakeParam sp;
        double sum = 0.0;
        for (double t : theta) {
            sp.alphas.push_back(std::polar(1.0, t));
            sum += t;
        }
        sp.alphas.push_back(std::polar(1.0, -sum));
        return sp;
    }

    [[nodiscard]] bool is_valid(double eps = 1e-9) const {
        Complex prod(1.0, 0.0);
        for (const Complex& a : alphas) {
            if (std::abs(std::abs(a) - 1.0) > eps) return false;
            prod *= a;
        }
        return std::abs(prod - Complex(1.0, 0.0)) <= eps;
    }

    /// Smallest pairwise eigenvalue separation; zero means a singular
    /// (non-regular) point where Weyl-denominator formulas degenerate.
    [[nodiscard]] double min_separation() const {
        double m = 2.0;
        for (size_t i = 0; i < alphas.size(); ++i)
            for (size_t j = i + 1; j < alphas.size(); ++j)
                m = std::min(m, std::abs(alphas[i] - alphas[j]));
        return m;
    }
};

/// Integer power by repeated squaring (exponent may be negative for
/// invertible bases).
inline Complex pow_int(Complex base, long long e) {
    if (e < 0) {
        base = 1.0 / base;
        e = -e;
    }
    Complex acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace satake
