#pragma once

#include "gtpac/types.hpp"

namespace gtpac {

/// Large-(n,k) order-wise sufficiency formulas (real-valued, constants kept
/// as derived, p = 1/k or s = s* implied):
///   CoMa: 2ke[log(n/(ke eps+1)) + 1 + log(1/delta)/(ke eps+1)]
///   CBP:  2ke[log(n/(ke eps+1)) + 1 + log(2/delta)(1/(ke eps+1) + e/(2k))]
///   DD:   ke[log(n/k) + log(1/delta)/((ke eps+1) log(n/k))
///            + log(ke/(ke eps+1))/log(n/k)]
double orderwise_ms(Algorithm algorithm, long long n, long long k, const PacTarget& target);

/// Prior-art exact-recovery sufficiency formulas used as comparison curves:
///   CoMa: ek(log n + log(1/delta'))
///   CBP:  2ek(log n + log(2/delta'))
///   DD:   ek(kappa log n + log(1/delta')),  kappa = max(gamma', 1-gamma'),
///         gamma' from k = n^{1-gamma'}.
double baseline_bound(Algorithm algorithm, long long n, long long k, double delta_prime);

/// The DD reduction's driving constant
///   D = ke [ log(1/delta)/(d+1) + log(ke/(d+1)) ].
double dd_reduction_constant(long long k, long long d_eps, double delta);

/// Closed-form root of the quadratic relaxation m^2/(ke) - m log(n/k) = D:
///   m = (ke/2) [ log(n/k) + sqrt(log^2(n/k) + 4D/(ke)) ].
/// A necessary (weaker) condition than the implicit relation below, so this
/// value never exceeds the implicit solution.
double dd_quadratic_ms(long long n, long long k, long long d_eps, double delta);

/// Left side of the reduced implicit relation m (1 - (n/k) e^{-m/(ke)});
/// its crossing of dd_reduction_constant defines the reduced test count.
double dd_transcendental_lhs(long long n, long long k, double m);

}  // namespace gtpac
