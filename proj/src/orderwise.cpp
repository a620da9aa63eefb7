#include "gtpac/orderwise.hpp"

#include <cmath>

#include "gtpac/errors.hpp"

namespace gtpac {

double orderwise_ms(Algorithm algorithm, long long n, long long k, const PacTarget& target) {
    if (k < 1 || n <= k) throw InvalidParameter("k", "requires 0 < k < n");
    validate_pac_target(target);
    const double e = std::exp(1.0);
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double tau = kd * e * target.epsilon + 1.0;  // order-wise budget + 1
    const double log_inv_delta = std::log(1.0 / target.delta);

    switch (algorithm) {
        case Algorithm::CoMa:
            return 2.0 * kd * e * (std::log(nd / tau) + 1.0 + log_inv_delta / tau);
        case Algorithm::CBP:
            return 2.0 * kd * e *
                   (std::log(nd / tau) + 1.0 +
                    std::log(2.0 / target.delta) * (1.0 / tau + e / (2.0 * kd)));
        case Algorithm::DD: {
            const double log_nk = std::log(nd / kd);
            return kd * e *
                   (log_nk + log_inv_delta / (tau * log_nk) + std::log(kd * e / tau) / log_nk);
        }
    }
    throw InvalidParameter("algorithm", "unknown algorithm");
}

double dd_reduction_constant(long long k, long long d_eps, double delta) {
    if (k < 1 || d_eps < 0 || d_eps > k) throw InvalidParameter("d_eps", "requires 0 <= d <= k");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw InvalidParameter("delta", "failure probability must lie in (0, 1)");
    const double e = std::exp(1.0);
    const double kd = static_cast<double>(k);
    const double d1 = static_cast<double>(d_eps) + 1.0;
    return kd * e * (std::log(1.0 / delta) / d1 + std::log(kd * e / d1));
}

double dd_quadratic_ms(long long n, long long k, long long d_eps, double delta) {
    if (k < 1 || n <= k) throw InvalidParameter("k", "requires 0 < k < n");
    const double big_d = dd_reduction_constant(k, d_eps, delta);
    const double ke = static_cast<double>(k) * std::exp(1.0);
    const double log_nk = std::log(static_cast<double>(n) / static_cast<double>(k));
    return 0.5 * ke * (log_nk + std::sqrt(log_nk * log_nk + 4.0 * big_d / ke));
}

double dd_transcendental_lhs(long long n, long long k, double m) {
    if (k < 1 || n <= k) throw InvalidParameter("k", "requires 0 < k < n");
    const double ke = static_cast<double>(k) * std::exp(1.0);
    const double ratio = static_cast<double>(n) / static_cast<double>(k);
    return m * (1.0 - ratio * std::exp(-m / ke));
}

double baseline_bound(Algorithm algorithm, long long n, long long k, double delta_prime) {
    if (k < 1 || n <= k) throw InvalidParameter("k", "requires 0 < k < n");
    if (!(delta_prime > 0.0) || !(delta_prime <= 1.0))
        throw InvalidParameter("delta_prime", "must lie in (0, 1]");
    const double e = std::exp(1.0);
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    switch (algorithm) {
        case Algorithm::CoMa:
            return e * kd * (std::log(nd) + std::log(1.0 / delta_prime));
        case Algorithm::CBP:
            return 2.0 * e * kd * (std::log(nd) + std::log(2.0 / delta_prime));
        case Algorithm::DD: {
            // k = n^{1-gamma'}; the constant is max(gamma', 1-gamma').
            const double gamma_prime = 1.0 - std::log(kd) / std::log(nd);
            const double kappa = std::max(gamma_prime, 1.0 - gamma_prime);
            return e * kd * (kappa * std::log(nd) + std::log(1.0 / delta_prime));
        }
    }
    throw InvalidParameter("algorithm", "unknown algorithm");
}

}  // namespace gtpac
