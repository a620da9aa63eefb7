#include "gtpac/numeric.hpp"

#include <limits>

namespace gtpac {

double log_binomial(long long n, long long r) {
    if (r < 0 || r > n) return -std::numeric_limits<double>::infinity();
    if (r == 0 || r == n) return 0.0;
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(r) + 1.0) -
           std::lgamma(static_cast<double>(n - r) + 1.0);
}

double harmonic(long long x) {
    if (x <= 0) return 0.0;
    if (x <= 1'000'000) {
        // Summed smallest-term first to keep the accumulation tight.
        double h = 0.0;
        for (long long i = x; i >= 1; --i) h += 1.0 / static_cast<double>(i);
        return h;
    }
    const double xd = static_cast<double>(x);
    return std::log(xd) + kEulerGamma + 1.0 / (2.0 * xd);
}

long long ceil_tests(double m_real, long long floor_at) {
    if (!(m_real > 0.0)) return floor_at;
    // Guard against values that are integral up to accumulated rounding.
    const double guarded = m_real - 1e-9 * std::max(1.0, std::fabs(m_real) * 1e-3);
    const double c = std::ceil(guarded);
    // Degenerate operating points can demand astronomically many tests;
    // saturate instead of overflowing the integer cast.
    if (c >= 4.0e18) return 4'000'000'000'000'000'000LL;
    long long m = static_cast<long long>(c);
    return m < floor_at ? floor_at : m;
}

}  // namespace gtpac
