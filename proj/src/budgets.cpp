#include "gtpac/budgets.hpp"

#include <cmath>
#include <limits>

#include "gtpac/errors.hpp"

namespace gtpac {

namespace {

void check_eps(double eps) {
    if (!(eps >= 0.0) || !(eps <= 1.0))
        throw InvalidParameter("epsilon", "error tolerance must lie in [0, 1]");
}

void check_p(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw InvalidParameter("p", "participation probability must lie in (0, 1)");
}

BudgetCount saturated_at(long long cap) {
    return BudgetCount{cap, std::numeric_limits<double>::infinity(), true};
}

BudgetCount from_real(double real, long long cap) {
    if (real <= 0.0) return BudgetCount{0, std::max(real, 0.0), false};
    long long value = static_cast<long long>(std::floor(real));
    bool saturated = false;
    if (value >= cap) {
        value = cap;
        saturated = true;  // floor reached the physical maximum
    }
    return BudgetCount{value, real, saturated};
}

}  // namespace

BudgetCount geps_bernoulli(double eps, long long k, double p, long long n) {
    check_eps(eps);
    check_p(p);
    if (k < 1) throw InvalidParameter("k", "defective count must be at least 1");
    if (n <= k) throw InvalidParameter("n", "requires n > k");
    const long long cap = n - k;
    const double qk = std::pow(1.0 - p, static_cast<double>(k));
    // Error ceiling over all G is (1-p)^k; at or above it any G qualifies.
    if (eps >= qk) return saturated_at(cap);
    if (eps == 0.0) return BudgetCount{0, 0.0, false};
    const double real = std::log1p(-eps / qk) / std::log1p(-p);
    return from_real(real, cap);
}

BudgetCount geps_rowweight(double eps, long long n, long long k, double s) {
    check_eps(eps);
    if (k < 1 || k >= n) throw InvalidParameter("k", "requires 0 < k < n");
    if (!(s >= 1.0)) throw InvalidParameter("s", "row weight must be at least 1");
    const long long cap = n - k;
    const double miss_k = std::pow(1.0 - static_cast<double>(k) / static_cast<double>(n), s);
    if (eps >= miss_k) return saturated_at(cap);
    if (eps == 0.0) return BudgetCount{0, 0.0, false};
    const double real =
        static_cast<double>(cap) * (1.0 - std::pow(1.0 - eps / miss_k, 1.0 / s));
    return from_real(real, cap);
}

BudgetCount deps_bernoulli(double eps, long long k, double p) {
    check_eps(eps);
    check_p(p);
    if (k < 1) throw InvalidParameter("k", "defective count must be at least 1");
    const double qk = std::pow(1.0 - p, static_cast<double>(k));
    if (eps == 0.0) return BudgetCount{0, 0.0, false};
    // The translation hits exactly k at the error ceiling 1 - (1-p)^k and
    // stays finite beyond it, so clamping at k covers saturation.
    const double real = std::log1p(eps / qk) / (-std::log1p(-p));
    return from_real(real, k);
}

}  // namespace gtpac
