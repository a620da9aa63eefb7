#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gtpac/budgets.hpp"
#include "gtpac/errors.hpp"
#include "oracles.hpp"

using namespace gtpac;

TEST_CASE("zero tolerance translates to a zero budget") {
    CHECK(geps_bernoulli(0.0, 50, 0.02, 2500).value == 0);
    CHECK(geps_rowweight(0.0, 2500, 50, 49.5).value == 0);
    CHECK(deps_bernoulli(0.0, 50, 0.02).value == 0);
}

TEST_CASE("bernoulli fp budget matches the direct error scan") {
    for (double eps : {1e-4, 1e-3, 0.005, 0.01, 0.05, 0.1, 0.2, 0.3}) {
        const auto budget = geps_bernoulli(eps, 50, 0.02, 2500);
        const long long scanned = oracle::scan_geps_bernoulli(eps, 50, 0.02, 2450);
        CHECK(budget.value == scanned);
    }
    CHECK(geps_bernoulli(0.01, 50, 0.02, 2500).value == 1);
}

TEST_CASE("bernoulli fp budget saturates above the error ceiling") {
    // sup over G of the prediction error is (1-p)^k ~ 0.364; eps = 0.5
    // admits every G, so the budget clamps to n-k and flags saturation.
    const auto budget = geps_bernoulli(0.5, 50, 0.02, 2500);
    CHECK(budget.saturated);
    CHECK(budget.value == 2450);
    CHECK_FALSE(geps_bernoulli(0.3, 50, 0.02, 2500).saturated);
}

TEST_CASE("row-weight fp budget matches the direct error scan") {
    const double s = 49.4983164525091;
    for (double eps : {1e-4, 1e-3, 0.01, 0.05, 0.1, 0.25}) {
        const auto budget = geps_rowweight(eps, 2500, 50, s);
        const long long scanned = oracle::scan_geps_rowweight(eps, 2500, 50, s, 2450);
        CHECK(budget.value == scanned);
    }
}

TEST_CASE("row-weight budget is monotone in the tolerance") {
    long long previous = -1;
    for (double eps = 0.0; eps <= 0.3; eps += 0.01) {
        const auto budget = geps_rowweight(eps, 2500, 50, 49.5);
        CHECK(budget.value >= previous);
        previous = budget.value;
    }
}

TEST_CASE("fn budget matches the direct error scan") {
    for (double eps : {1e-4, 1e-3, 0.01, 0.05, 0.1, 0.3}) {
        const auto budget = deps_bernoulli(eps, 50, 0.02);
        CHECK(budget.value == oracle::scan_deps_bernoulli(eps, 50, 0.02));
    }
    CHECK(deps_bernoulli(0.01, 50, 0.02).value == 1);
}

TEST_CASE("fn budget clamps to k at full tolerance") {
    const auto budget = deps_bernoulli(1.0, 50, 0.02);
    CHECK(budget.value == 50);
    CHECK(budget.saturated);
}

TEST_CASE("budget translations reject invalid inputs") {
    CHECK_THROWS_AS(geps_bernoulli(-0.1, 50, 0.02, 2500), InvalidParameter);
    CHECK_THROWS_AS(geps_bernoulli(0.1, 50, 1.0, 2500), InvalidParameter);
    CHECK_THROWS_AS(geps_bernoulli(0.1, 0, 0.02, 2500), InvalidParameter);
    CHECK_THROWS_AS(geps_rowweight(0.1, 50, 50, 10.0), InvalidParameter);
    CHECK_THROWS_AS(geps_rowweight(0.1, 100, 50, 0.5), InvalidParameter);
    CHECK_THROWS_AS(deps_bernoulli(2.0, 50, 0.02), InvalidParameter);
}

TEST_CASE("real-valued translations floor to the integer budgets") {
    for (double eps : {0.001, 0.01, 0.1}) {
        const auto g = geps_bernoulli(eps, 100, 0.01, 10000);
        if (!g.saturated) {
            CHECK(static_cast<long long>(std::floor(g.real)) == g.value);
        }
        const auto d = deps_bernoulli(eps, 100, 0.01);
        if (!d.saturated) {
            CHECK(static_cast<long long>(std::floor(d.real)) == d.value);
        }
    }
}
