#pragma once

#include "satake/kostka.hpp"
#include "satake/schur.hpp"
#include "satake/specfun.hpp"

namespace satake {

/// Eigenvalues of the adjoint action at a torus point: a_i/a_j for i != j,
/// plus N-1 copies of 1 from the Cartan directions (N^2 - 1 in total).
inline std::vector<Complex> adjoint_eigenvalues(const std::vector<Complex>& a) {
    std::vector<Complex> e;
    e.reserve(a.size() * a.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (i != j) e.push_back(a[i] / a[j]);
    for (size_t k = 0; k + 1 < a.size(); ++k) e.emplace_back(1.0, 0.0);
    return e;
}

/// Local adjoint L-factor as a power series in t = p^{-s}: product of
/// 1/(1 - e t) over the adjoint eigenvalues, multiplied out term by term.
inline CSeries adjoint_lfactor_direct(const std::vector<Complex>& a, int trunc) {
    std::vector<Complex> c(static_cast<size_t>(trunc) + 1, Complex(0.0, 0.0));
    c[0] = Complex(1.0, 0.0);
    for (const Complex& e : adjoint_eigenvalues(a)) {
        // multiply by 1/(1 - e t): c_k += e * c_{k-1}
        for (int k = 1; k <= trunc; ++k)
            c[static_cast<size_t>(k)] += e * c[static_cast<size_t>(k - 1)];
    }
    return CSeries(std::move(c));
}

/// Graded character of the symmetric algebra of the adjoint representation,
/// through the Newton recurrence n h_n = sum_k p_k h_{n-k} on power sums of
/// the adjoint eigenvalues. Independent route to the same series.
inline CSeries sym_power_series(const std::vector<Complex>& a, int trunc) {
    std::vector<Complex> eig = adjoint_eigenvalues(a);
    std::vector<Complex> p(static_cast<size_t>(trunc) + 1, Complex(0.0, 0.0));
    for (int k = 1; k <= trunc; ++k)
        for (const Complex& e : eig) p[static_cast<size_t>(k)] += pow_int(e, k);
    std::vector<Complex> h(static_cast<size_t>(trunc) + 1, Complex(0.0, 0.0));
    h[0] = Complex(1.0, 0.0);
    for (int n = 1; n <= trunc; ++n) {
        Complex s(0.0, 0.0);
        for (int k = 1; k <= n; ++k) s += p[static_cast<size_t>(k)] * h[static_cast<size_t>(n - k)];
        h[static_cast<size_t>(n)] = s / static_cast<double>(n);
    }
    return CSeries(std::move(h));
}

namespace detail {

/// Smallest total root multiplicity expressing the weight: the maximum of
/// its simple-root coordinates (prefix sums of canonical coordinates). A
/// multiplicity polynomial's lowest power is at least this, so indices with
/// min_degree > trunc cannot touch the truncated series.
inline long long weight_min_degree(const Weight& v) {
    Rational prefix(0);
    Rational best(0);
    for (int i = 0; i + 1 < v.rank_n(); ++i) {
        prefix = prefix + v[i];
        if (best < prefix) best = prefix;
    }
    return best.ceil();
}

} // namespace detail

/// Enumerate the moment indices whose multiplicity polynomial can reach
/// degree <= trunc: root-lattice members of the box [0, N*trunc]^(N-1) whose
/// minimal degree passes the prefix bound.
inline std::vector<std::vector<long long>> adjoint_truncation_indices(int n, int trunc,
                                                                      bool prune = true) {
    std::vector<std::vector<long long>> out;
    const long long cap = static_cast<long long>(n) * trunc;
    std::vector<long long> m(static_cast<size_t>(n - 1), 0);
    while (true) {
        Weight w = aleph_weight(m, n);
        if (w.in_root_lattice() && (!prune || detail::weight_min_degree(w) <= trunc))
            out.push_back(m);
        size_t pos = 0;
        while (pos < m.size()) {
            if (++m[pos] <= cap) break;
            m[pos] = 0;
            ++pos;
        }
        if (pos == m.size()) break;
    }
    return out;
}

/// Local adjoint L-factor via the graded multiplicity expansion: the product
/// of zeta_p(ls) for l = 2..N times the sum over moment indices of the
/// multiplicity polynomial (in t) weighted by the character value.
inline CSeries adjoint_lfactor_kf(const std::vector<Complex>& a, int trunc) {
    const int n = static_cast<int>(a.size());
    const WeylGroup& W = detail::cached_weyl_group(n);
    CSeries sum;
    for (const auto& m : adjoint_truncation_indices(n, trunc)) {
        QPoly kf = kostka_foulkes(aleph_weight(m, n), W);
        if (kf.is_zero()) continue;
        Complex chi = schur_poly(moment_partition(m, n), a);
        CSeries term;
        for (int k = 0; k <= std::min(kf.degree(), trunc); ++k)
            if (kf.coeff(k) != 0)
                term.set_coeff(k, chi * static_cast<double>(kf.coeff(k)));
        sum += term;
    }
    CSeries out = sum;
    for (int l = 2; l <= n; ++l) out = mul(out, geometric_series(l, trunc), trunc);
    return out;
}

/// Rank-2 closed form of the same L-factor: zeta_p(2s) zeta_p(3s) times the
/// double sum over indices congruent mod 3 of the character times the
/// geometric block t^max..t^(m1+m2).
inline CSeries adjoint_lfactor_n3(const std::vector<Complex>& a, int trunc) {
    if (a.size() != 3) throw std::invalid_argument("adjoint_lfactor_n3: needs 3 eigenvalues");
    CSeries sum;
    for (long long m1 = 0; m1 <= trunc; ++m1)
        for (long long m2 = 0; m2 <= trunc; ++m2) {
            if ((m1 - m2) % 3 != 0) continue;
            if (std::max(m1, m2) > trunc) continue;
            Complex chi = schur_poly(moment_partition({m1, m2}, 3), a);
            for (long long j = std::max(m1, m2); j <= std::min(m1 + m2, static_cast<long long>(trunc)); ++j)
                sum.set_coeff(static_cast<int>(j), sum.coeff(static_cast<int>(j)) + chi);
        }
    CSeries out = mul(sum, geometric_series(2, trunc), trunc);
    return mul(out, geometric_series(3, trunc), trunc);
}

/// Rank-1 closed form: zeta_p(2s) times sum_k t^k chi_{(2k)}.
inline CSeries adjoint_lfactor_n2(const std::vector<Complex>& a, int trunc) {
    if (a.size() != 2) throw std::invalid_argument("adjoint_lfactor_n2: needs 2 eigenvalues");
    CSeries sum;
    for (long long k = 0; k <= trunc; ++k) {
        Complex chi = schur_poly({2 * k, 0}, a);
        sum.set_coeff(static_cast<int>(k), chi);
    }
    return mul(sum, geometric_series(2, trunc), trunc);
}

/// Largest coefficient deviation between the graded symmetric-power series
/// and its multiplicity-expansion form (the series identity behind the
/// L-factor factorization).
inline double poincare_identity_error(const std::vector<Complex>& a, int trunc) {
    CSeries lhs = sym_power_series(a, trunc);
    CSeries rhs = adjoint_lfactor_kf(a, trunc);
    return max_coeff_dev(lhs, rhs);
}

/// Reciprocal of a truncated L-factor series; for a genuine Euler factor this
/// is a polynomial of degree N^2 - 1 (the adjoint characteristic polynomial).
inline CSeries lfactor_reciprocal(const CSeries& l, int trunc) { return inverse(l, trunc); }

/// Exact characteristic polynomial prod_e (1 - e t) of the adjoint action.
inline CSeries adjoint_charpoly(const std::vector<Complex>& a) {
    std::vector<Complex> eig = adjoint_eigenvalues(a);
    std::vector<Complex> c(eig.size() + 1, Complex(0.0, 0.0));
    c[0] = Complex(1.0, 0.0);
    size_t used = 0;
    for (const Complex& e : eig) {
        ++used;
        for (size_t k = used; k > 0; --k) c[k] -= e * c[k - 1];
    }
    return CSeries(std::move(c));
}

/// Archimedean completion: Gamma_R(s)^(N-1) prod_{i != j} Gamma_R(s - mu_j + mu_i).
inline Complex completed_adjoint_gamma(Complex s, const std::vector<Complex>& mu) {
    const int n = static_cast<int>(mu.size());
    Complex acc = static_cast<double>(n - 1) * lgamma_r(s);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                acc += lgamma_r(s - mu[static_cast<size_t>(j)] + mu[static_cast<size_t>(i)]);
    return std::exp(acc);
}

} // namespace satake
