#pragma once

#include <cmath>
#include <cstdint>

namespace gtpac {

/// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// log C(n, r) via log-gamma; 0 for r in {0, n}, -inf when r is out of range.
/// Keeps binomial terms finite at n ~ 1e6 scales.
double log_binomial(long long n, long long r);

/// n-th harmonic number. Exact partial summation up to 1e6 terms, the
/// log x + gamma + 1/(2x) tail expansion beyond.
double harmonic(long long x);

/// Ceiling of a real-valued test count with a small guard against values
/// that are integral up to rounding error. Result is at least `floor_at`.
long long ceil_tests(double m_real, long long floor_at = 1);

}  // namespace gtpac
