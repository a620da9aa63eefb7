#pragma once

#include "gtpac/types.hpp"

namespace gtpac {

/// Integer error budget implied by an epsilon tolerance, together with the
/// real-valued translation before flooring and a saturation flag.
///
/// Saturation: when epsilon is at or above the achievable error ceiling,
/// every budget value satisfies the tolerance; `value` clamps to the
/// physical maximum (n-k false positives, k false negatives) and sweeps can
/// continue instead of erroring.
struct BudgetCount {
    long long value = 0;
    double real = 0.0;  // +inf when saturated
    bool saturated = false;
};

/// Largest false-positive count g with (1-(1-p)^g)(1-p)^k <= eps under a
/// Bernoulli(p) design: floor(log(1 - eps/(1-p)^k) / log(1-p)).
BudgetCount geps_bernoulli(double eps, long long k, double p, long long n);

/// Row-weight design analogue, from (1-k/n)^s [1-(1-g/(n-k))^s] <= eps:
/// floor((n-k)[1 - (1 - eps/(1-k/n)^s)^{1/s}]).
BudgetCount geps_rowweight(double eps, long long n, long long k, double s);

/// Largest false-negative count d with (1-(1-p)^d)(1-p)^{k-d} <= eps:
/// floor(log(1 + eps/(1-p)^k) / log(1/(1-p))), clamped to [0, k].
BudgetCount deps_bernoulli(double eps, long long k, double p);

}  // namespace gtpac
