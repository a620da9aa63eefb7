#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gtpac/designs.hpp"
#include "gtpac/errors.hpp"

using namespace gtpac;

TEST_CASE("zero tests yields an empty matrix with the right width") {
    const auto matrix = sample_bernoulli(5, 0, 0.3, RngStream(1, 0));
    CHECK(matrix.tests() == 0);
    CHECK(matrix.items() == 5);
}

TEST_CASE("bernoulli empirical density lands inside the binomial interval") {
    const long long n = 1000, m = 1000;
    const double p = 0.02;
    const auto matrix = sample_bernoulli(n, m, p, RngStream(2024, 7));
    long long ones = 0;
    for (long long i = 0; i < m; ++i) ones += matrix.row_weight(i);
    const double mean = static_cast<double>(ones) / static_cast<double>(m * n);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(m * n));
    CHECK(std::fabs(mean - p) < 4.0 * sigma);
}

TEST_CASE("same seed and stream reproduce the matrix bit for bit") {
    const auto a = sample_bernoulli(200, 100, 0.05, RngStream(42, 9));
    const auto b = sample_bernoulli(200, 100, 0.05, RngStream(42, 9));
    CHECK(a == b);
    const auto c = sample_bernoulli(200, 100, 0.05, RngStream(42, 10));
    CHECK_FALSE(a == c);
}

TEST_CASE("row-weight design with s = 1 puts exactly one item per test") {
    const auto matrix = sample_row_weight(5, 3, 1, RngStream(3, 0));
    for (long long i = 0; i < 3; ++i) CHECK(matrix.row_weight(i) == 1);
}

TEST_CASE("row weights stay within [1, s]") {
    const auto matrix = sample_row_weight(30, 500, 7, RngStream(8, 2));
    for (long long i = 0; i < matrix.tests(); ++i) {
        CHECK(matrix.row_weight(i) >= 1);
        CHECK(matrix.row_weight(i) <= 7);
    }
}

TEST_CASE("two draws over two items collide half the time") {
    // P(both draws pick the same item) = 2 * (1/2)^2 = 1/2 by enumeration.
    const long long m = 10000;
    const auto matrix = sample_row_weight(2, m, 2, RngStream(5, 5));
    long long weight_one = 0;
    for (long long i = 0; i < m; ++i)
        if (matrix.row_weight(i) == 1) ++weight_one;
    const double frac = static_cast<double>(weight_one) / static_cast<double>(m);
    const double sigma = std::sqrt(0.25 / static_cast<double>(m));
    CHECK(std::fabs(frac - 0.5) < 4.0 * sigma);
}

TEST_CASE("row misses a fixed half of the items at the product rate") {
    // P(miss a fixed 50-set out of 100 with s = 5 draws) = (1/2)^5.
    const long long n = 100, m = 10000, s = 5;
    const auto matrix = sample_row_weight(n, m, s, RngStream(17, 0));
    long long misses = 0;
    for (long long i = 0; i < m; ++i) {
        bool hit = false;
        for (long long j = 0; j < 50 && !hit; ++j) hit = matrix.get(i, j);
        if (!hit) ++misses;
    }
    const double expected = std::pow(0.5, 5);
    const double frac = static_cast<double>(misses) / static_cast<double>(m);
    const double sigma = std::sqrt(expected * (1.0 - expected) / static_cast<double>(m));
    CHECK(std::fabs(frac - expected) < 4.0 * sigma);
}

TEST_CASE("optimal row weight: direct evaluation") {
    // 1/log(2500/2450) = 49.498316...; cross-checked below by maximizing the
    // expected negative-test coupon yield numerically.
    CHECK(optimal_row_weight(2500, 50) == doctest::Approx(49.4983164525091).epsilon(1e-9));
    CHECK(optimal_row_weight(2, 1) == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("optimal row weight maximizes the per-test collection yield") {
    const long long n = 2500, k = 50;
    const auto yield = [&](double s) {
        return s * std::pow(static_cast<double>(n - k) / n, s);
    };
    const double s_star = optimal_row_weight(n, k);
    for (double offset : {-2.0, -0.5, 0.5, 2.0})
        CHECK(yield(s_star) > yield(s_star + offset));
}

TEST_CASE("optimal row weight grows as the defective fraction shrinks") {
    double previous = 0.0;
    for (long long k : {400, 200, 100, 50, 25, 10, 5}) {
        const double s_star = optimal_row_weight(2500, k);
        CHECK(s_star > previous);
        previous = s_star;
    }
}

TEST_CASE("row weight rounding for sampling") {
    CHECK(row_weight_for_sampling(49.4982) == 49);
    CHECK(row_weight_for_sampling(49.62) == 50);
    CHECK(row_weight_for_sampling(0.3) == 1);
}

TEST_CASE("sampling rejects invalid parameters") {
    CHECK_THROWS_AS(sample_bernoulli(5, 3, 0.0, RngStream(0, 0)), InvalidParameter);
    CHECK_THROWS_AS(sample_bernoulli(5, 3, 1.0, RngStream(0, 0)), InvalidParameter);
    CHECK_THROWS_AS(sample_bernoulli(5, -1, 0.5, RngStream(0, 0)), InvalidParameter);
    CHECK_THROWS_AS(sample_row_weight(5, 3, 0, RngStream(0, 0)), InvalidParameter);
    CHECK_THROWS_AS(optimal_row_weight(10, 10), InvalidParameter);
}
