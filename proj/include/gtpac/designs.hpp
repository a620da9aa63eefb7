#pragma once

#include "gtpac/rng.hpp"
#include "gtpac/types.hpp"

namespace gtpac {

/// m x n matrix with i.i.d. Bernoulli(p) entries, drawn row-major from the
/// stream. Pure in (n, m, p, rng key).
PoolingMatrix sample_bernoulli(long long n, long long m, double p, RngStream rng);

/// m x n matrix where each row draws s items uniformly with replacement and
/// duplicates collapse, so row weights lie in [1, s].
PoolingMatrix sample_row_weight(long long n, long long m, long long s, RngStream rng);

/// Dispatch on the design variant.
PoolingMatrix sample_design(long long n, long long m, const DesignSpec& design, RngStream rng);

/// Rate-optimal row weight s* = 1/log(n/(n-k)), kept real. Bound formulas
/// consume this value; sampling rounds it via row_weight_for_sampling().
double optimal_row_weight(long long n, long long k);

/// Nearest positive integer to s*, the value actually used to draw tests.
long long row_weight_for_sampling(double s_star);

}  // namespace gtpac
