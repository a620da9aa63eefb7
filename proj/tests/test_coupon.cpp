#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gtpac/coupon.hpp"
#include "gtpac/errors.hpp"
#include "gtpac/numeric.hpp"
#include "oracles.hpp"

using namespace gtpac;

TEST_CASE("harmonic numbers: base cases and an exact partial sum") {
    CHECK(harmonic(0) == 0.0);
    CHECK(harmonic(1) == 1.0);
    CHECK(harmonic(10) == doctest::Approx(2.9289682539682538).epsilon(1e-14));
}

TEST_CASE("harmonic tail expansion stays close to the partial sum") {
    // Values just below the summation cutoff vs. the asymptotic form.
    const double exact = harmonic(1'000'000);
    const double asym = std::log(1e6) + kEulerGamma + 1.0 / 2e6;
    CHECK(exact == doctest::Approx(asym).epsilon(1e-12));
}

TEST_CASE("one missing coupon means a single draw") {
    for (long long w : {2, 5, 17}) {
        CHECK(sccp_expected_time({w, w - 1}, SccpForm::Exact) == doctest::Approx(1.0));
    }
}

TEST_CASE("expected stopping time for (w=10, g=3)") {
    CHECK(sccp_expected_time({10, 3}, SccpForm::Exact) ==
          doctest::Approx(10.956349206349206).epsilon(1e-12));
}

TEST_CASE("exact and approximate forms differ below 0.05% at w = 500") {
    const double exact = sccp_expected_time({500, 0}, SccpForm::Exact);
    const double approx = sccp_expected_time({500, 0}, SccpForm::Approx);
    CHECK(std::fabs(exact - approx) / exact < 5e-4);
}

TEST_CASE("g = 0 recovers the classical collection time w H_w") {
    for (long long w : {3, 10, 100}) {
        CHECK(sccp_expected_time({w, 0}, SccpForm::Exact) ==
              doctest::Approx(static_cast<double>(w) * harmonic(w)).epsilon(1e-12));
    }
}

TEST_CASE("exact expected time equals the geometric-stage sum, in exact arithmetic") {
    // E[T] = sum_{i=1}^{w-g} w/(w-i+1); both sides as rationals scaled by lcm.
    for (long long w = 1; w <= 20; ++w) {
        for (long long g = 0; g < w; ++g) {
            // Common denominator: product representation via long double is
            // unsafe; use 128-bit integer accumulation over lcm(1..20).
            const long long lcm_1_20 = 232792560;  // lcm of 1..20
            __int128 stage_sum = 0;
            for (long long i = 1; i <= w - g; ++i)
                stage_sum += static_cast<__int128>(w) * (lcm_1_20 / (w - i + 1));
            __int128 harmonic_sum = 0;
            for (long long j = g + 1; j <= w; ++j)
                harmonic_sum += static_cast<__int128>(w) * (lcm_1_20 / j);
            CHECK(stage_sum == harmonic_sum);
            // And the floating implementation agrees with the rational value.
            const double rational =
                static_cast<double>(stage_sum) / static_cast<double>(lcm_1_20);
            CHECK(sccp_expected_time({w, g}, SccpForm::Exact) ==
                  doctest::Approx(rational).epsilon(1e-12));
        }
    }
}

TEST_CASE("tail bound at g = 0 reduces to the classical form") {
    for (double chi : {1.5, 2.0, 3.0}) {
        const double bound = sccp_tail_bound({30, 0}, chi);
        const double classical = std::pow(30.0, 1.0 - chi) * std::exp(-chi * kEulerGamma);
        CHECK(bound == doctest::Approx(classical).epsilon(1e-12));
        CHECK(bound <= std::pow(30.0, -chi + 1.0));
    }
}

TEST_CASE("tail bound is nonincreasing in chi") {
    for (long long g : {0, 2, 5}) {
        double previous = 2.0;
        for (double chi = 1.1; chi < 4.0; chi += 0.3) {
            const double bound = sccp_tail_bound({40, g}, chi);
            CHECK(bound <= previous + 1e-15);
            previous = bound;
        }
    }
}

TEST_CASE("degenerate single-coupon collection stops after one draw") {
    const auto times = sccp_simulate({1, 0}, 100, RngStream(1, 0));
    for (long long t : times) CHECK(t == 1);
}

TEST_CASE("two-coupon expected time is 3") {
    const auto times = sccp_simulate({2, 0}, 200000, RngStream(2, 0));
    std::vector<double> xs(times.begin(), times.end());
    const double mu = oracle::mean(xs);
    const double sigma = oracle::sample_stddev(xs) / std::sqrt(static_cast<double>(xs.size()));
    CHECK(std::fabs(mu - 3.0) < 4.0 * sigma);
}

TEST_CASE("simulated mean matches the exact formula for (w=10, g=3)") {
    const auto times = sccp_simulate({10, 3}, 200000, RngStream(3, 0));
    std::vector<double> xs(times.begin(), times.end());
    const double mu = oracle::mean(xs);
    const double sigma = oracle::sample_stddev(xs) / std::sqrt(static_cast<double>(xs.size()));
    CHECK(std::fabs(mu - 10.956349206349206) < 4.0 * sigma);
}

TEST_CASE("tail bound dominates the simulated exceedance over the grid") {
    for (long long w : {10, 30, 50}) {
        for (long long g : {0, 2, 5}) {
            if (g >= w) continue;
            const SccpInstance inst{w, g};
            const auto times = sccp_simulate(inst, 40000, RngStream(77, w * 10 + g));
            for (double chi : {1.5, 2.0, 3.0}) {
                const double threshold = chi * sccp_expected_time(inst, SccpForm::Approx);
                long long exceed = 0;
                for (long long t : times)
                    if (static_cast<double>(t) > threshold) ++exceed;
                const double freq = static_cast<double>(exceed) / static_cast<double>(times.size());
                const double bound = sccp_tail_bound(inst, chi);
                const double slack =
                    4.0 * std::sqrt(std::max(freq, 1e-9) / static_cast<double>(times.size()));
                CHECK(freq <= bound + slack);
            }
        }
    }
}

TEST_CASE("sccp rejects bad parameters") {
    CHECK_THROWS_AS(sccp_expected_time({5, 5}, SccpForm::Exact), InvalidParameter);
    CHECK_THROWS_AS(sccp_expected_time({0, 0}, SccpForm::Exact), InvalidParameter);
    CHECK_THROWS_AS(sccp_tail_bound({5, 1}, 1.0), InvalidParameter);
    CHECK_THROWS_AS(sccp_simulate({5, 1}, 0, RngStream(0, 0)), InvalidParameter);
}
