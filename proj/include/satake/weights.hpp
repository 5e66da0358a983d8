#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "satake/rational.hpp"

namespace satake {

/// Weight of sl_N in epsilon coordinates. Stored canonically: the mean of
/// the N coordinates is subtracted so they always sum to zero.
class Weight {
public:
    explicit Weight(std::vector<Rational> coords) : c_(std::move(coords)) {
        if (c_.size() < 2) throw std::invalid_argument("Weight: rank must be >= 2");
        canonicalize();
    }

    static Weight zero(int n) { return Weight(std::vector<Rational>(static_cast<size_t>(n), Rational(0))); }

    static Weight from_integers(const std::vector<long long>& v) {
        std::vector<Rational> c;
        c.reserve(v.size());
        for (long long x : v) c.emplace_back(x);
        return Weight(std::move(c));
    }

    [[nodiscard]] int rank_n() const { return static_cast<int>(c_.size()); }
    [[nodiscard]] const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    [[nodiscard]] const std::vector<Rational>& coords() const { return c_; }

    [[nodiscard]] bool is_dominant() const {
        for (size_t i = 0; i + 1 < c_.size(); ++i)
            if (c_[i] < c_[i + 1]) return false;
        return true;
    }

    /// Root lattice = integer vectors summing to zero (in canonical coords).
    [[nodiscard]] bool in_root_lattice() const {
        for (const auto& x : c_)
            if (!x.is_integer()) return false;
        return true;
    }

    [[nodiscard]] std::vector<long long> integer_coords() const {
        std::vector<long long> v;
        v.reserve(c_.size());
        for (const auto& x : c_) {
            if (!x.is_integer()) throw std::invalid_argument("Weight: coordinates are not integral");
            v.push_back(x.num());
        }
        return v;
    }

    /// Integer lift with last coordinate zero: coords() + t*(1,...,1) for the
    /// unique rational t making the last entry vanish. Well defined with
    /// integer entries for any weight-lattice element.
    [[nodiscard]] std::vector<long long> integer_lift() const {
        std::vector<long long> v;
        v.reserve(c_.size());
        Rational last = c_.back();
        for (const auto& x : c_) {
            Rational d = x - last;
            if (!d.is_integer()) throw std::invalid_argument("Weight: not in the weight lattice");
            v.push_back(d.num());
        }
        return v;
    }

    /// Action of a permutation w given as images: (w.v)_{w[i]} = v_i.
    [[nodiscard]] Weight permuted(const std::vector<int>& w) const {
        std::vector<Rational> out(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) out[static_cast<size_t>(w[i])] = c_[i];
        return Weight(std::move(out));
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        check_same_rank(a, b);
        std::vector<Rational> out(a.c_.size());
        for (size_t i = 0; i < out.size(); ++i) out[i] = a.c_[i] + b.c_[i];
        return Weight(std::move(out));
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        check_same_rank(a, b);
        std::vector<Rational> out(a.c_.size());
        for (size_t i = 0; i < out.size(); ++i) out[i] = a.c_[i] - b.c_[i];
        return Weight(std::move(out));
    }
    [[nodiscard]] Weight scaled(const Rational& s) const {
        std::vector<Rational> out(c_.size());
        for (size_t i = 0; i < out.size(); ++i) out[i] = c_[i] * s;
        return Weight(std::move(out));
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;

    void canonicalize() {
        Rational sum(0);
        for (const auto& x : c_) sum += x;
        Rational mean = sum / Rational(static_cast<long long>(c_.size()));
        for (auto& x : c_) x -= mean;
    }

    static void check_same_rank(const Weight& a, const Weight& b) {
        if (a.c_.size() != b.c_.size()) throw std::invalid_argument("Weight: rank mismatch");
    }
};

/// Fundamental weight for the i-th exterior power, 1 <= i <= n-1.
inline Weight fundamental_weight(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("fundamental_weight: index out of range");
    std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
    for (int k = 0; k < i; ++k) c[static_cast<size_t>(k)] = Rational(1);
    return Weight(std::move(c));
}

/// Half sum of positive roots: ((n-1)/2, (n-3)/2, ..., -(n-1)/2).
inline Weight rho_weight(int n) {
    std::vector<Rational> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = Rational(n - 1 - 2 * i, 2);
    return Weight(std::move(c));
}

/// Positive roots e_i - e_j as index pairs (i, j), i < j.
inline std::vector<std::pair<int, int>> positive_root_pairs(int n) {
    std::vector<std::pair<int, int>> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots.emplace_back(i, j);
    return roots;
}

/// Weighted-tuple embedding: the input tuple lists, in display order,
/// (l_{N-1}, ..., l_1); entry l_k multiplies the k-th fundamental weight.
/// The result is the highest weight whose character is the Schur polynomial
/// with the same index tuple.
inline Weight aleph_weight(const std::vector<long long>& l, int n) {
    if (static_cast<int>(l.size()) != n - 1)
        throw std::invalid_argument("aleph_weight: tuple must have N-1 entries");
    for (long long v : l)
        if (v < 0) throw std::invalid_argument("aleph_weight: entries must be nonnegative");
    Weight w = Weight::zero(n);
    for (int k = 0; k < n - 1; ++k) {
        long long coeff = l[static_cast<size_t>(k)];
        if (coeff != 0) w = w + fundamental_weight(n, n - 1 - k).scaled(Rational(coeff));
    }
    return w;
}

/// Partition attached to a moment index vector m = (m_1, ..., m_{N-1}):
/// lambda_i = m_1 + ... + m_{N-i}. This is the integer lift of
/// aleph_weight(m, n), so the same index vector addresses both the weight
/// and the Schur polynomial of its character.
inline std::vector<long long> moment_partition(const std::vector<long long>& m, int n) {
    if (static_cast<int>(m.size()) != n - 1)
        throw std::invalid_argument("moment_partition: index must have N-1 entries");
    std::vector<long long> lambda(static_cast<size_t>(n), 0);
    for (int i = 0; i < n - 1; ++i) {
        long long s = 0;
        for (int k = 0; k < n - 1 - i; ++k) s += m[static_cast<size_t>(k)];
        lambda[static_cast<size_t>(i)] = s;
    }
    return lambda;
}

/// Symmetric group on n letters with permutation lengths (inversion counts).
struct WeylGroup {
    int n = 0;
    std::vector<std::vector<int>> perms; // images: w maps i -> perms[k][i]
    std::vector<int> lengths;

    [[nodiscard]] int order() const { return static_cast<int>(perms.size()); }
    [[nodiscard]] int sign(int k) const { return lengths[static_cast<size_t>(k)] % 2 == 0 ? 1 : -1; }

    static WeylGroup make(int n) {
        WeylGroup g;
        g.n = n;
        std::vector<int> p(static_cast<size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do {
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) ++inv;
            g.perms.push_back(p);
            g.lengths.push_back(inv);
        } while (std::next_permutation(p.begin(), p.end()));
        return g;
    }
};

} // namespace satake
