#include "gtpac/designs.hpp"

#include <cmath>

#include "gtpac/errors.hpp"

namespace gtpac {

PoolingMatrix sample_bernoulli(long long n, long long m, double p, RngStream rng) {
    if (n <= 0) throw InvalidParameter("n", "population size must be positive");
    if (m < 0) throw InvalidParameter("m", "test count must be nonnegative");
    if (!(p > 0.0) || !(p < 1.0))
        throw InvalidParameter("p", "participation probability must lie in (0, 1)");
    PoolingMatrix matrix(m, n);
    const double log1mp = std::log1p(-p);
    for (long long i = 0; i < m; ++i)
        for_each_bernoulli_one(rng, n, log1mp, [&](long long j) { matrix.set(i, j); });
    return matrix;
}

PoolingMatrix sample_row_weight(long long n, long long m, long long s, RngStream rng) {
    if (n <= 0) throw InvalidParameter("n", "population size must be positive");
    if (m < 0) throw InvalidParameter("m", "test count must be nonnegative");
    if (s < 1) throw InvalidParameter("s", "items per test must be at least 1");
    PoolingMatrix matrix(m, n);
    for (long long i = 0; i < m; ++i)
        for (long long draw = 0; draw < s; ++draw)
            matrix.set(i, static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(n))));
    return matrix;
}

PoolingMatrix sample_design(long long n, long long m, const DesignSpec& design, RngStream rng) {
    if (const auto* b = std::get_if<BernoulliDesign>(&design))
        return sample_bernoulli(n, m, b->p, rng);
    return sample_row_weight(n, m, std::get<RowWeightDesign>(design).s, rng);
}

double optimal_row_weight(long long n, long long k) {
    if (n <= 0) throw InvalidParameter("n", "population size must be positive");
    if (k <= 0 || k >= n) throw InvalidParameter("k", "requires 0 < k < n");
    return 1.0 / std::log(static_cast<double>(n) / static_cast<double>(n - k));
}

long long row_weight_for_sampling(double s_star) {
    const long long s = static_cast<long long>(std::llround(s_star));
    return s < 1 ? 1 : s;
}

}  // namespace gtpac
