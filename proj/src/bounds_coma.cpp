#include "gtpac/bounds_coma.hpp"

#include <cmath>
#include <vector>

#include "gtpac/errors.hpp"
#include "gtpac/numeric.hpp"

namespace gtpac {

namespace {

void check_nk(long long n, long long k) {
    if (k < 1) throw InvalidParameter("k", "defective count must be at least 1");
    if (n <= k) throw InvalidParameter("n", "requires n > k");
}

void check_p(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw InvalidParameter("p", "participation probability must lie in (0, 1)");
}

/// log of 1 - (1-p)^k + (1-p)^{g+k+1}, the per-test success factor.
double log_z(long long k, double p, long long g) {
    const double qk = std::pow(1.0 - p, static_cast<double>(k));
    const double qgk1 = std::pow(1.0 - p, static_cast<double>(g + k + 1));
    return std::log1p(qgk1 - qk);
}

double popt_for_budget(long long k, long long g) {
    const double kd = static_cast<double>(k);
    const double gd = static_cast<double>(g);
    return 1.0 - std::pow(kd / (kd + gd + 1.0), 1.0 / (gd + 1.0));
}

double m_real_at(long long n, long long k, double p, long long g, double delta) {
    const double numerator = log_binomial(n - k, g + 1) + std::log(1.0 / delta);
    const double denominator = -log_z(k, p, g);
    return numerator / denominator;
}

}  // namespace

double hidden_prob(long long g, long long k, double p, long long m) {
    if (g < 1) throw InvalidParameter("g", "hidden set size must be at least 1");
    if (k < 1) throw InvalidParameter("k", "defective count must be at least 1");
    check_p(p);
    if (m < 0) throw InvalidParameter("m", "test count must be nonnegative");
    const double qk = std::pow(1.0 - p, static_cast<double>(k));
    const double qgk = std::pow(1.0 - p, static_cast<double>(g + k));
    return std::pow(1.0 - qk + qgk, static_cast<double>(m));
}

BoundResult coma_sufficient_tests(long long n, long long k, double p, const PacTarget& target,
                                  std::optional<long long> budget_override) {
    check_nk(n, k);
    check_p(p);
    validate_pac_target(target);

    BudgetCount budget;
    if (budget_override) {
        if (*budget_override < 0 || *budget_override > n - k)
            throw InvalidParameter("budget", "false-positive budget must lie in [0, n-k]");
        budget = BudgetCount{*budget_override, static_cast<double>(*budget_override), false};
    } else {
        budget = geps_bernoulli(target.epsilon, k, p, n);
    }

    BoundResult result;
    result.n = n;
    result.budget = {BudgetKind::FalsePositive, budget.value};
    result.saturated = budget.saturated;
    result.intermediates["p_opt"] = p;
    result.intermediates["g_eps"] = static_cast<double>(budget.value);
    result.intermediates["saturated"] = budget.saturated ? 1.0 : 0.0;

    if (budget.value >= n - k) {
        // Every non-defective may stay hidden; any test count qualifies.
        result.m_s = 1;
        result.intermediates["m_real"] = 0.0;
        return result;
    }
    const double m_real = m_real_at(n, k, p, budget.value, target.delta);
    if (!std::isfinite(m_real) || m_real < 0.0)
        throw Unsatisfiable("bound is not finite at the requested operating point");
    result.m_s = ceil_tests(m_real);
    result.intermediates["m_real"] = m_real;
    return result;
}

double coma_implied_delta(long long n, long long k, double p, long long g, long long m) {
    check_nk(n, k);
    check_p(p);
    if (g < 0 || g > n - k) throw InvalidParameter("g", "budget must lie in [0, n-k]");
    if (m < 0) throw InvalidParameter("m", "test count must be nonnegative");
    if (g >= n - k) return 0.0;
    const double log_delta =
        log_binomial(n - k, g + 1) + static_cast<double>(m) * log_z(k, p, g);
    return std::min(1.0, std::exp(log_delta));
}

ComaOptimum coma_fixed_point_opt(long long n, long long k, double eps, double delta,
                                 int max_iterations) {
    check_nk(n, k);
    validate_pac_target({eps, delta});

    double p = 1.0 / (static_cast<double>(k) + 1.0);
    long long g = geps_bernoulli(eps, k, p, n).value;
    bool saturated = false;
    for (int it = 0; it < max_iterations; ++it) {
        p = popt_for_budget(k, g);
        const BudgetCount next = geps_bernoulli(eps, k, p, n);
        saturated = next.saturated;
        if (next.value == g) {
            ComaOptimum opt;
            opt.p_opt = p;
            opt.g_eps = g;
            opt.saturated = saturated;
            if (g >= n - k) {
                opt.m_s = 1;
                opt.m_real = 0.0;
            } else {
                opt.m_real = m_real_at(n, k, p, g, delta);
                opt.m_s = ceil_tests(opt.m_real);
            }
            return opt;
        }
        g = next.value;
    }
    throw NonConvergence("fixed-point iteration did not become stationary", p, g);
}

ComaOptimum coma_minlp_grid(long long n, long long k, double eps, double delta,
                            const ComaGridSpec& grid) {
    check_nk(n, k);
    validate_pac_target({eps, delta});
    if (!(grid.p_min > 0.0) || !(grid.p_max < 1.0) || !(grid.p_min < grid.p_max))
        throw InvalidParameter("grid", "p range must satisfy 0 < p_min < p_max < 1");
    if (grid.p_steps < 2) throw InvalidParameter("grid", "need at least two p grid points");

    const long long g_cap = grid.g_cap < 0 ? n - k : std::min(grid.g_cap, n - k);
    const double log_ratio = std::log(grid.p_max / grid.p_min);

    // lgamma(i+1) table so the inner loop stays free of special functions.
    std::vector<double> lg(static_cast<std::size_t>(n - k) + 2, 0.0);
    for (std::size_t i = 1; i < lg.size(); ++i)
        lg[i] = std::lgamma(static_cast<double>(i) + 1.0);
    const double log_inv_delta = std::log(1.0 / delta);

    ComaOptimum best;
    bool found = false;
    for (long long i = 0; i < grid.p_steps; ++i) {
        const double p = grid.p_min * std::exp(log_ratio * static_cast<double>(i) /
                                               static_cast<double>(grid.p_steps - 1));
        const BudgetCount translated = geps_bernoulli(eps, k, p, n);
        const long long g_max = std::min(translated.value, g_cap);
        const double qk = std::pow(1.0 - p, static_cast<double>(k));
        const double q = 1.0 - p;
        double qg1 = q;  // (1-p)^{g+1}
        for (long long g = 0; g <= g_max; ++g, qg1 *= q) {
            long long m;
            double m_real;
            if (g >= n - k) {
                m = 1;
                m_real = 0.0;
            } else {
                const double numerator =
                    lg[static_cast<std::size_t>(n - k)] - lg[static_cast<std::size_t>(g + 1)] -
                    lg[static_cast<std::size_t>(n - k - g - 1)] + log_inv_delta;
                const double denominator = -std::log1p(qk * (qg1 - 1.0));
                m_real = numerator / denominator;
                if (!std::isfinite(m_real)) continue;
                m = ceil_tests(m_real);
            }
            if (m > grid.m_cap) continue;
            // Lexicographic (m, p, g) so ties resolve deterministically.
            if (!found || m < best.m_s || (m == best.m_s && p < best.p_opt) ||
                (m == best.m_s && p == best.p_opt && g < best.g_eps)) {
                best.m_s = m;
                best.m_real = m_real;
                best.p_opt = p;
                best.g_eps = g;
                best.saturated = translated.saturated && g == translated.value;
                found = true;
            }
        }
    }
    if (!found) throw Unsatisfiable("no feasible grid point for the requested target");
    return best;
}

}  // namespace gtpac
