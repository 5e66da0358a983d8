#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "satake/satake_param.hpp"
#include "satake/series.hpp"
#include "satake/weights.hpp"

namespace satake {

namespace detail {

inline Complex det_inplace(std::vector<std::vector<Complex>>& m) {
    const size_t n = m.size();
    Complex det(1.0, 0.0);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (std::abs(m[piv][c]) == 0.0) return Complex(0.0, 0.0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            Complex f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

inline const WeylGroup& cached_weyl_group(int n) {
    static std::mutex mtx;
    static std::map<int, WeylGroup> groups;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = groups.find(n);
    if (it == groups.end()) it = groups.emplace(n, WeylGroup::make(n)).first;
    return it->second;
}

} // namespace detail

/// Elementary symmetric polynomials e_0..e_n of the given values.
inline std::vector<Complex> elementary_symmetric(const std::vector<Complex>& a) {
    std::vector<Complex> e(a.size() + 1, Complex(0.0, 0.0));
    e[0] = Complex(1.0, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = i + 1; k > 0; --k) e[k] += a[i] * e[k - 1];
    return e;
}

/// Complete homogeneous symmetric polynomials h_0..h_max via the Wronski
/// recurrence sum_{i} (-1)^i e_i h_{k-i} = 0.
inline std::vector<Complex> complete_homogeneous(const std::vector<Complex>& a, int kmax) {
    std::vector<Complex> e = elementary_symmetric(a);
    std::vector<Complex> h(static_cast<size_t>(kmax) + 1, Complex(0.0, 0.0));
    h[0] = Complex(1.0, 0.0);
    for (int k = 1; k <= kmax; ++k) {
        Complex s(0.0, 0.0);
        for (int i = 1; i <= k && i < static_cast<int>(e.size()); ++i) {
            Complex term = e[static_cast<size_t>(i)] * h[static_cast<size_t>(k - i)];
            s += (i % 2 == 1) ? term : -term;
        }
        h[static_cast<size_t>(k)] = s;
    }
    return h;
}

/// Schur polynomial of a partition (weakly decreasing nonnegative integers,
/// padded with zeros to the number of variables). Bialternant determinant
/// ratio at well-separated points, column determinant in the complete
/// homogeneous basis otherwise.
inline Complex schur_poly(std::vector<long long> lambda, const std::vector<Complex>& a,
                          double vandermonde_eps = 1e-8) {
    const size_t n = a.size();
    if (lambda.size() > n) {
        for (size_t i = n; i < lambda.size(); ++i)
            if (lambda[i] != 0)
                throw std::invalid_argument("schur_poly: partition longer than variable count");
        lambda.resize(n);
    }
    lambda.resize(n, 0);
    for (size_t i = 0; i + 1 < n; ++i)
        if (lambda[i] < lambda[i + 1])
            throw std::invalid_argument("schur_poly: partition must be weakly decreasing");
    if (!lambda.empty() && lambda.back() < 0)
        throw std::invalid_argument("schur_poly: partition entries must be nonnegative");

    Complex vand(1.0, 0.0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) vand *= a[i] - a[j];

    if (std::abs(vand) > vandermonde_eps) {
        std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m[i][j] = pow_int(a[i], lambda[j] + static_cast<long long>(n - 1 - j));
        return detail::det_inplace(m) / vand;
    }

    // Jacobi-Trudi: s_lambda = det[ h_{lambda_i - i + j} ].
    int hmax = 0;
    for (size_t i = 0; i < n; ++i)
        hmax = std::max(hmax, static_cast<int>(lambda[i]) + static_cast<int>(n));
    std::vector<Complex> h = complete_homogeneous(a, hmax);
    std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            long long idx = lambda[i] - static_cast<long long>(i) + static_cast<long long>(j);
            m[i][j] = (idx < 0) ? Complex(0.0, 0.0) : h[static_cast<size_t>(idx)];
        }
    return detail::det_inplace(m);
}

/// Irreducible character of the dominant integral weight at a torus point,
/// by the alternating-sum quotient over the Weyl group. Falls back to the
/// symmetric-function route near singular points.
inline Complex weyl_character(const Weight& lambda, const std::vector<Complex>& a,
                              double denom_eps = 1e-8) {
    const int n = lambda.rank_n();
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("weyl_character: variable count mismatch");

    Complex denom(1.0, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) denom *= a[static_cast<size_t>(i)] - a[static_cast<size_t>(j)];
    if (std::abs(denom) <= denom_eps) return schur_poly(lambda.integer_lift(), a);

    std::vector<long long> lift = (lambda + rho_weight(n)).integer_lift();
    const WeylGroup& W = detail::cached_weyl_group(n);
    Complex numer(0.0, 0.0);
    for (int k = 0; k < W.order(); ++k) {
        const auto& w = W.perms[static_cast<size_t>(k)];
        Complex term(1.0, 0.0);
        for (int j = 0; j < n; ++j)
            term *= pow_int(a[static_cast<size_t>(w[static_cast<size_t>(j)])],
                            lift[static_cast<size_t>(j)]);
        numer += (W.sign(k) > 0) ? term : -term;
    }
    return numer / denom;
}

/// Exact dimension of the irreducible representation with the given highest
/// weight, by the factored Weyl dimension product.
inline long long weyl_dim(const Weight& lambda) {
    const int n = lambda.rank_n();
    Rational acc(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational diff = lambda[i] - lambda[j] + Rational(j - i);
            acc = acc * diff / Rational(j - i);
        }
    if (!acc.is_integer()) throw std::logic_error("weyl_dim: non-integer dimension");
    return acc.num();
}

/// Taylor coefficients through degree trunc of prod_i 1/(1 - a_i t), the
/// standard-representation local factor. Coefficient k is h_k(a).
inline CSeries standard_l_series(const std::vector<Complex>& a, int trunc) {
    std::vector<Complex> h = complete_homogeneous(a, trunc);
    return CSeries(std::move(h));
}

} // namespace satake
