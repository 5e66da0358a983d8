#pragma once

#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "satake/series.hpp"
#include "satake/weights.hpp"

namespace satake {

namespace detail {

inline bool prefix_sums_nonneg(const std::vector<long long>& v) {
    long long s = 0;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        s += v[i];
        if (s < 0) return false;
    }
    return true;
}

struct VecHash {
    size_t operator()(const std::vector<long long>& v) const {
        size_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Recursion over the positive-root list: spend k copies of root r, recurse on
// the remainder. Pruned by the prefix-sum criterion, which characterizes the
// cone spanned by the positive roots in type A.
class KostantSolver {
public:
    KostantSolver(int n) : roots_(positive_root_pairs(n)) {
        if (roots_.size() > 32) throw std::invalid_argument("kostant_q_partition: rank too large");
    }

    QPoly solve(const std::vector<long long>& beta) {
        if (!prefix_sums_nonneg(beta)) return {};
        return rec(0, beta);
    }

private:
    std::vector<std::pair<int, int>> roots_;
    std::unordered_map<std::vector<long long>, QPoly, VecHash> memo_[32];

    QPoly rec(size_t r, const std::vector<long long>& w) {
        bool all_zero = true;
        for (long long x : w)
            if (x != 0) { all_zero = false; break; }
        if (all_zero) return QPoly::one();
        if (r == roots_.size()) return {};

        auto it = memo_[r].find(w);
        if (it != memo_[r].end()) return it->second;

        auto [i, j] = roots_[r];
        // Max feasible multiplicity: subtracting k*(e_i - e_j) lowers the
        // prefix sums over [i, j) by k, and those must stay nonnegative.
        long long kmax = -1;
        {
            long long s = 0;
            for (int t = 0; t < static_cast<int>(w.size()) - 1; ++t) {
                s += w[static_cast<size_t>(t)];
                if (t >= i && t < j) kmax = (kmax < 0) ? s : std::min(kmax, s);
            }
        }

        QPoly acc;
        std::vector<long long> rem = w;
        for (long long k = 0; k <= kmax; ++k) {
            if (k > 0) {
                rem[static_cast<size_t>(i)] -= 1;
                rem[static_cast<size_t>(j)] += 1;
            }
            if (!prefix_sums_nonneg(rem)) break;
            QPoly sub = rec(r + 1, rem);
            if (!sub.is_zero()) acc += mul(sub, QPoly::monomial(static_cast<int>(k)));
        }
        memo_[r][w] = acc;
        return acc;
    }
};

} // namespace detail

/// Kostant q-partition count of beta (root-lattice element in canonical
/// integer coordinates): sum over decompositions of beta into positive roots,
/// weighted q^(total multiplicity).
inline QPoly kostant_q_partition(const std::vector<long long>& beta, int n) {
    if (static_cast<int>(beta.size()) != n)
        throw std::invalid_argument("kostant_q_partition: coordinate count must equal N");
    long long s = 0;
    for (long long x : beta) s += x;
    if (s != 0) throw std::invalid_argument("kostant_q_partition: coordinates must sum to zero");

    static std::mutex mtx;
    static std::map<std::pair<int, std::vector<long long>>, QPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({n, beta});
        if (it != cache.end()) return it->second;
    }
    detail::KostantSolver solver(n);
    QPoly out = solver.solve(beta);
    {
        std::lock_guard<std::mutex> lock(mtx);
        cache.insert({{n, beta}, out});
    }
    return out;
}

/// q-weight multiplicity polynomial: alternating sum over the Weyl group of
/// Kostant q-partitions of w(lambda + rho) - (beta + rho). Exact integer
/// output; zero when lambda - beta is outside the root lattice.
inline QPoly kostka_foulkes(const Weight& lambda, const Weight& beta, const WeylGroup& W) {
    const int n = lambda.rank_n();
    if (W.n != n) throw std::invalid_argument("kostka_foulkes: Weyl group rank mismatch");
    if (!(lambda - beta).in_root_lattice()) return {};

    Weight lr = lambda + rho_weight(n);
    Weight br = beta + rho_weight(n);
    QPoly acc;
    for (int k = 0; k < W.order(); ++k) {
        Weight v = lr.permuted(W.perms[static_cast<size_t>(k)]) - br;
        if (!v.in_root_lattice()) continue;
        auto coords = v.integer_coords();
        if (!detail::prefix_sums_nonneg(coords)) continue;
        QPoly part = kostant_q_partition(coords, n);
        if (W.sign(k) > 0)
            acc += part;
        else
            acc -= part;
    }
    return acc;
}

/// Specialization at beta = 0.
inline QPoly kostka_foulkes(const Weight& lambda, const WeylGroup& W) {
    return kostka_foulkes(lambda, Weight::zero(lambda.rank_n()), W);
}

/// Closed form for N = 3 at the weighted tuple (l2, l1): vanishes unless
/// l1 == l2 mod 3, otherwise sum of q^i over max(l1,l2) <= i <= l1+l2.
inline QPoly kf_closed_form_n3(long long l1, long long l2) {
    if (l1 < 0 || l2 < 0) throw std::invalid_argument("kf_closed_form_n3: negative input");
    if ((l1 - l2) % 3 != 0) return {};
    QPoly out;
    for (long long i = std::max(l1, l2); i <= l1 + l2; ++i) out += QPoly::monomial(static_cast<int>(i));
    return out;
}

/// Poincare polynomial of the Weyl group: prod_{k=1}^{N} (1 + q + ... + q^{k-1}).
inline QPoly weyl_poincare_poly(int n) {
    QPoly out = QPoly::one();
    for (int k = 2; k <= n; ++k) {
        std::vector<long long> ones(static_cast<size_t>(k), 1);
        out = mul(out, QPoly(std::move(ones)));
    }
    return out;
}

} // namespace satake
