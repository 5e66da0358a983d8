#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "satake/kostka.hpp"
#include "satake/parallel.hpp"
#include "satake/schur.hpp"

namespace satake {

namespace detail {

/// prod_{i<j} 4 sin^2((theta_i - theta_j)/2) = prod_{i != j} (1 - a_i/a_j)
/// for unit-modulus eigenvalues, including the dependent last angle.
inline double weyl_denominator_sq(const std::vector<double>& theta_full) {
    double prod = 1.0;
    for (size_t i = 0; i < theta_full.size(); ++i)
        for (size_t j = i + 1; j < theta_full.size(); ++j) {
            double s = std::sin(0.5 * (theta_full[i] - theta_full[j]));
            prod *= 4.0 * s * s;
        }
    return prod;
}

/// prod_{i != j} (1 - q a_i/a_j) = prod_{i<j} (1 - 2 q cos(d) + q^2).
inline double damped_denominator(const std::vector<double>& theta_full, double q) {
    double prod = 1.0;
    for (size_t i = 0; i < theta_full.size(); ++i)
        for (size_t j = i + 1; j < theta_full.size(); ++j) {
            double c = std::cos(theta_full[i] - theta_full[j]);
            prod *= 1.0 - 2.0 * q * c + q * q;
        }
    return prod;
}

inline std::vector<double> full_angles(const std::vector<double>& theta) {
    std::vector<double> full = theta;
    double sum = 0.0;
    for (double t : theta) sum += t;
    full.push_back(-sum);
    return full;
}

inline long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace detail

/// Equilibrium density on the unitarized torus with respect to the normalized
/// Haar measure d theta / (2 pi)^(N-1) in the N-1 free angles.
inline double sato_tate_density(const std::vector<double>& theta) {
    auto full = detail::full_angles(theta);
    int n = static_cast<int>(full.size());
    return detail::weyl_denominator_sq(full) / static_cast<double>(detail::factorial(n));
}

/// p-adic density with respect to the same normalized Haar measure; converges
/// to the equilibrium density as p grows.
inline double plancherel_density(const std::vector<double>& theta, double p) {
    auto full = detail::full_angles(theta);
    int n = static_cast<int>(full.size());
    double q = 1.0 / p;
    double wq = 1.0;
    {
        QPoly w = weyl_poincare_poly(n);
        wq = 0.0;
        double qp = 1.0;
        for (int k = 0; k <= w.degree(); ++k, qp *= q)
            wq += static_cast<double>(w.coeff(k)) * qp;
    }
    return wq * detail::weyl_denominator_sq(full) /
           (static_cast<double>(detail::factorial(n)) * detail::damped_denominator(full, q));
}

/// Uniform bound for the p-adic density, used as a rejection envelope.
inline double plancherel_envelope(double p, int n) {
    double q = 1.0 / p;
    QPoly w = weyl_poincare_poly(n);
    double wq = 0.0, qp = 1.0;
    for (int k = 0; k <= w.degree(); ++k, qp *= q) wq += static_cast<double>(w.coeff(k)) * qp;
    int pairs = n * (n - 1);
    return wq * std::pow(2.0, pairs) /
           (static_cast<double>(detail::factorial(n)) * std::pow(1.0 - q, pairs));
}

/// Tensor trapezoid rule over the periodic torus [0, 2pi)^(N-1): applies fn
/// at every node of an M^(N-1) grid and averages. Spectrally accurate for
/// smooth periodic integrands.
template <typename F>
auto torus_average(int n, int m_per_dim, F&& fn) {
    using R = decltype(fn(std::declval<const std::vector<double>&>()));
    const int dims = n - 1;
    const double step = 2.0 * std::numbers::pi / m_per_dim;
    std::vector<int> idx(static_cast<size_t>(dims), 0);
    std::vector<double> theta(static_cast<size_t>(dims), 0.0);
    R acc{};
    long long total = 1;
    for (int d = 0; d < dims; ++d) total *= m_per_dim;
    for (long long flat = 0; flat < total; ++flat) {
        long long rem = flat;
        for (int d = 0; d < dims; ++d) {
            idx[static_cast<size_t>(d)] = static_cast<int>(rem % m_per_dim);
            rem /= m_per_dim;
            theta[static_cast<size_t>(d)] = idx[static_cast<size_t>(d)] * step;
        }
        acc += fn(theta);
    }
    return acc / static_cast<double>(total);
}

/// Grid moment of a character against the p-adic measure; the exact value is
/// the q-weight multiplicity polynomial at q = 1/p.
inline Complex character_moment(const std::vector<long long>& m, double p, int n,
                                int m_per_dim = 200) {
    auto lambda = moment_partition(m, n);
    return torus_average(n, m_per_dim, [&](const std::vector<double>& theta) {
        SatakeParam sp = SatakeParam::from_angles(theta);
        return schur_poly(lambda, sp.alphas) * plancherel_density(theta, p);
    });
}

/// Grid moment against the equilibrium measure (1 at the trivial index, 0
/// otherwise, by character orthogonality).
inline Complex character_moment_equilibrium(const std::vector<long long>& m, int n,
                                            int m_per_dim = 200) {
    auto lambda = moment_partition(m, n);
    return torus_average(n, m_per_dim, [&](const std::vector<double>& theta) {
        SatakeParam sp = SatakeParam::from_angles(theta);
        return schur_poly(lambda, sp.alphas) * sato_tate_density(theta);
    });
}

/// Draw `count` points from the p-adic measure by rejection sampling.
/// Deterministic for a fixed (seed, count): proposals are generated in
/// fixed-size chunks, each chunk seeded independently from (seed, chunk),
/// and accepted points are concatenated in chunk order, so the output is
/// independent of the number of threads.
inline std::vector<std::vector<double>> sample_plancherel(double p, int n, long long count,
                                                          uint64_t seed, int threads = 0,
                                                          int chunk_size = 4096) {
    const int dims = n - 1;
    const double env = plancherel_envelope(p, n);
    const double two_pi = 2.0 * std::numbers::pi;

    std::vector<std::vector<double>> out;
    out.reserve(static_cast<size_t>(count));

    long long produced = 0;
    long long first_chunk = 0;
    // Acceptance rate is 1/env on average; size each wave to overshoot a bit.
    while (produced < static_cast<long long>(count)) {
        long long want = count - produced;
        long long wave = 2 + static_cast<long long>(
                                 1.5 * static_cast<double>(want) * env / chunk_size);
        std::vector<std::vector<std::vector<double>>> per_chunk(static_cast<size_t>(wave));
        parallel_for(
            wave,
            [&](long long ci) {
                uint64_t state = seed ^ (0xd1342543de82ef95ull *
                                         static_cast<uint64_t>(first_chunk + ci + 1));
                auto& bucket = per_chunk[static_cast<size_t>(ci)];
                std::vector<double> theta(static_cast<size_t>(dims));
                for (int t = 0; t < chunk_size; ++t) {
                    for (int d = 0; d < dims; ++d) theta[static_cast<size_t>(d)] = two_pi * uniform01(state);
                    double u = uniform01(state);
                    if (u * env < plancherel_density(theta, p)) bucket.push_back(theta);
                }
            },
            threads);
        for (auto& bucket : per_chunk) {
            for (auto& s : bucket) {
                if (produced >= static_cast<long long>(count)) break;
                out.push_back(std::move(s));
                ++produced;
            }
        }
        first_chunk += wave;
    }
    return out;
}

} // namespace satake
