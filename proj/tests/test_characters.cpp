#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "satake/schur.hpp"

using namespace satake;

namespace {

SatakeParam random_regular_point(std::mt19937_64& rng, int n, double min_sep = 0.05) {
    std::uniform_real_distribution<double> U(0.0, 2.0 * std::numbers::pi);
    while (true) {
        std::vector<double> theta(static_cast<size_t>(n - 1));
        for (double& t : theta) t = U(rng);
        SatakeParam sp = SatakeParam::from_angles(theta);
        if (sp.min_separation() > min_sep) return sp;
    }
}

// Brute-force complete homogeneous polynomial: sum over all multisets of
// size k drawn from the variables.
Complex h_brute(const std::vector<Complex>& a, int k) {
    const int n = static_cast<int>(a.size());
    Complex total(0.0, 0.0);
    std::vector<int> idx(static_cast<size_t>(k), 0); // nondecreasing index tuple
    while (true) {
        Complex prod(1.0, 0.0);
        for (int i : idx) prod *= a[static_cast<size_t>(i)];
        total += prod;
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        int v = ++idx[static_cast<size_t>(pos)];
        for (int t = pos + 1; t < k; ++t) idx[static_cast<size_t>(t)] = v;
    }
    return total;
}

std::vector<Complex> unitary3() {
    return {std::polar(1.0, 0.7), std::polar(1.0, -0.3), std::polar(1.0, -0.4)};
}

std::vector<Complex> unitary4() {
    return {std::polar(1.0, 0.5), std::polar(1.0, 1.1), std::polar(1.0, -0.2),
            std::polar(1.0, -1.4)};
}

} // namespace

TEST_CASE("Schur values frozen from tableau enumeration") {
    // Independent oracle: sum over semistandard tableaux, exact arithmetic.
    std::vector<Complex> x1{{2.0, 0.0}, {1.0, 0.0}, {0.5, 0.0}};
    CHECK(std::abs(schur_poly({2, 1, 0}, x1) - Complex(11.25, 0.0)) < 1e-12);

    std::vector<Complex> x2{{1.5, 0.0}, {2.0 / 3.0, 0.0}, {1.0, 0.0}};
    CHECK(std::abs(schur_poly({3, 1, 0}, x2) - Complex(4009.0 / 216.0, 0.0)) < 1e-12);

    auto a3 = unitary3();
    CHECK(std::abs(schur_poly({2, 2, 0}, a3) -
                   Complex(4.3332491375700641, 0.25582797257379852)) < 1e-12);
    CHECK(std::abs(schur_poly({3, 1, 1}, a3) -
                   Complex(4.333249137570065, -0.25582797257379886)) < 1e-12);
    CHECK(std::abs(schur_poly({4, 2, 0}, a3) - Complex(11.864690854659445, 0.0)) < 1e-12);

    auto a4 = unitary4();
    CHECK(std::abs(schur_poly({2, 1, 1, 0}, a4) - Complex(5.1912024057699835, 0.0)) < 1e-12);
    CHECK(std::abs(schur_poly({3, 2, 1, 0}, a4) - Complex(6.9215739315124392, 0.0)) < 1e-12);
}

TEST_CASE("Complete homogeneous polynomials match multiset enumeration") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 4; ++n) {
        auto a = random_regular_point(rng, n).alphas;
        auto h = complete_homogeneous(a, 6);
        CSeries ls = standard_l_series(a, 6);
        for (int k = 0; k <= 6; ++k) {
            CAPTURE(n, k);
            Complex ref = h_brute(a, k);
            CHECK(std::abs(h[static_cast<size_t>(k)] - ref) < 1e-12);
            CHECK(std::abs(ls.coeff(k) - ref) < 1e-12);
        }
    }
}

TEST_CASE("Alternating-sum character equals Schur determinant route") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> part(0, 5);
    for (int n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            auto a = random_regular_point(rng, n).alphas;
            std::vector<long long> lam(static_cast<size_t>(n), 0);
            for (auto& v : lam) v = part(rng);
            std::sort(lam.begin(), lam.end(), std::greater<>());
            Weight w = Weight::from_integers(lam);
            CAPTURE(n, rep, lam);
            CHECK(std::abs(weyl_character(w, a) - schur_poly(lam, a)) < 1e-9);
        }
    }
}

TEST_CASE("Character at the identity is the dimension") {
    std::vector<Complex> id3(3, Complex(1.0, 0.0));
    std::vector<Complex> id4(4, Complex(1.0, 0.0));
    CHECK(std::abs(weyl_character(Weight::from_integers({3, 0, 0}), id3) - 10.0) < 1e-12);
    CHECK(std::abs(weyl_character(Weight::from_integers({2, 1, 0}), id3) - 8.0) < 1e-12);
    CHECK(std::abs(weyl_character(Weight::from_integers({1, 1, 0}), id3) - 3.0) < 1e-12);
    CHECK(std::abs(weyl_character(Weight::from_integers({4, 2, 0}), id3) - 27.0) < 1e-12);
    CHECK(std::abs(weyl_character(Weight::from_integers({2, 1, 1, 0}), id4) - 15.0) < 1e-12);

    CHECK(weyl_dim(Weight::from_integers({3, 0, 0})) == 10);
    CHECK(weyl_dim(Weight::from_integers({2, 1, 0})) == 8);
    CHECK(weyl_dim(aleph_weight({1, 1}, 3)) == 8);
    CHECK(weyl_dim(aleph_weight({0, 3}, 3)) == 10);
    CHECK(weyl_dim(Weight::from_integers({2, 1, 1, 0})) == 15);
}

TEST_CASE("Dimension bounds characters on the unitary torus") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 10; ++rep) {
        auto a = random_regular_point(rng, 3).alphas;
        for (long long l1 = 0; l1 <= 3; ++l1)
            for (long long l2 = 0; l2 <= 3; ++l2) {
                Weight w = aleph_weight({l2, l1}, 3);
                CHECK(std::abs(weyl_character(w, a)) <=
                      static_cast<double>(weyl_dim(w)) + 1e-9);
            }
    }
}

TEST_CASE("Determinant-twist invariance on the product-one torus") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 10; ++rep) {
        auto a = random_regular_point(rng, 3).alphas;
        CHECK(std::abs(schur_poly({2, 0, 0}, a) - schur_poly({3, 1, 1}, a)) < 1e-10);
        CHECK(std::abs(schur_poly({2, 1, 0}, a) - schur_poly({3, 2, 1}, a)) < 1e-10);
    }
}

TEST_CASE("Real-coefficient symmetry under conjugation") {
    auto a = unitary3();
    auto ac = a;
    for (auto& z : ac) z = std::conj(z);
    CHECK(std::abs(schur_poly({3, 1, 0}, ac) - std::conj(schur_poly({3, 1, 0}, a))) < 1e-12);
}

TEST_CASE("Moment index addresses both weight and partition") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> d(0, 4);
    for (int n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 12; ++rep) {
            std::vector<long long> m(static_cast<size_t>(n - 1));
            for (auto& v : m) v = d(rng);
            CAPTURE(n, m);
            CHECK(aleph_weight(m, n).integer_lift() == moment_partition(m, n));
            auto a = random_regular_point(rng, n).alphas;
            CHECK(std::abs(weyl_character(aleph_weight(m, n), a) -
                           schur_poly(moment_partition(m, n), a)) < 1e-9);
        }
    }
}

TEST_CASE("Torus point construction") {
    SatakeParam sp = SatakeParam::from_angles({0.7, -0.3});
    REQUIRE(sp.rank_n() == 3);
    CHECK(sp.is_valid());
    CHECK(std::abs(sp.alphas[2] - std::polar(1.0, -0.4)) < 1e-15);

    CHECK(std::abs(pow_int(Complex(0.0, 1.0), 3) - Complex(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(pow_int(Complex(2.0, 0.0), -2) - Complex(0.25, 0.0)) < 1e-15);
    CHECK(std::abs(pow_int(Complex(1.7, -0.3), 0) - Complex(1.0, 0.0)) < 1e-15);
}
