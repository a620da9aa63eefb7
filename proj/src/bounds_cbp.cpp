#include "gtpac/bounds_cbp.hpp"

#include <cmath>

#include "gtpac/designs.hpp"
#include "gtpac/errors.hpp"
#include "gtpac/numeric.hpp"

namespace gtpac {

namespace {

void check_nk(long long n, long long k) {
    if (k < 1) throw InvalidParameter("k", "defective count must be at least 1");
    if (n <= k) throw InvalidParameter("n", "requires n > k");
}

void check_c(double c) {
    if (!(c > 0.0) || !(c < 1.0))
        throw InvalidParameter("c", "failure split must lie in (0, 1)");
}

double bracket_term(long long n, long long k, long long g, double delta, double c) {
    const double gd = static_cast<double>(g);
    return std::log(1.0 / (c * delta)) / (gd + 1.0) + gd / (gd + 1.0) +
           std::log(static_cast<double>(n - k) / (gd + 1.0));
}

BudgetCount resolve_budget(long long n, long long k, const PacTarget& target, double s,
                           std::optional<long long> budget_override) {
    if (budget_override) {
        if (*budget_override < 0 || *budget_override > n - k)
            throw InvalidParameter("budget", "false-positive budget must lie in [0, n-k]");
        return BudgetCount{*budget_override, static_cast<double>(*budget_override), false};
    }
    return geps_rowweight(target.epsilon, n, k, s);
}

BoundResult assemble(long long n, long long k, const BudgetCount& budget, double s, double c,
                     double scale, const CbpParams& params) {
    BoundResult result;
    result.n = n;
    result.budget = {BudgetKind::FalsePositive, budget.value};
    result.saturated = budget.saturated;
    result.intermediates["g_eps"] = static_cast<double>(budget.value);
    result.intermediates["chi"] = params.chi;
    result.intermediates["C"] = params.big_c;
    result.intermediates["eta"] = params.eta;
    result.intermediates["c"] = c;
    result.intermediates["s"] = s;
    result.intermediates["s_star"] = optimal_row_weight(n, k);
    result.intermediates["expected_time_exact"] = params.expected_time_exact;
    result.intermediates["expected_time_approx"] = params.expected_time_approx;
    result.intermediates["saturated"] = budget.saturated ? 1.0 : 0.0;

    if (budget.value >= n - k) {
        result.m_s = 1;
        result.intermediates["m_real"] = 0.0;
        return result;
    }
    const double m_real =
        params.chi * params.expected_time_approx / ((1.0 - params.eta) * scale);
    if (!std::isfinite(m_real) || m_real < 0.0)
        throw Unsatisfiable("bound is not finite at the requested operating point");
    result.m_s = ceil_tests(m_real);
    result.intermediates["m_real"] = m_real;
    return result;
}

}  // namespace

CbpParams cbp_params(long long n, long long k, long long g_eps, double delta, double s,
                     double c) {
    check_nk(n, k);
    check_c(c);
    if (g_eps < 0 || g_eps > n - k)
        throw InvalidParameter("g_eps", "budget must lie in [0, n-k]");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw InvalidParameter("delta", "failure probability must lie in (0, 1)");
    if (!(s >= 1.0)) throw InvalidParameter("s", "row weight must be at least 1");

    const double w = static_cast<double>(n - k);
    const double hg = harmonic(g_eps);
    CbpParams params;
    params.c = c;
    params.s = s;
    params.expected_time_exact = w * (harmonic(n - k) - hg);
    params.expected_time_approx = w * (std::log(w) + kEulerGamma - hg);

    const double bracket = bracket_term(n, k, g_eps, delta, c);
    params.chi = bracket * w / params.expected_time_approx;
    params.big_c = std::log(1.0 / ((1.0 - c) * delta)) / ((w / s) * bracket);
    params.eta = (-params.big_c + std::sqrt(params.big_c * params.big_c + 4.0 * params.big_c)) / 2.0;
    return params;
}

BoundResult cbp_sufficient_tests(long long n, long long k, const PacTarget& target, double s,
                                 double c, std::optional<long long> budget_override) {
    check_nk(n, k);
    check_c(c);
    validate_pac_target(target);
    if (!(s >= 1.0)) throw InvalidParameter("s", "row weight must be at least 1");

    const BudgetCount budget = resolve_budget(n, k, target, s, budget_override);
    const long long g = std::min(budget.value, n - k - 1);
    const CbpParams params = cbp_params(n, k, g, target.delta, s, c);
    const double w_frac = static_cast<double>(n - k) / static_cast<double>(n);
    // (1-eta) s ((n-k)/n)^s scales the collected-per-test rate.
    const double scale = s * std::pow(w_frac, s);
    return assemble(n, k, budget, s, c, scale, params);
}

BoundResult cbp_sstar_bound(long long n, long long k, const PacTarget& target, double c,
                            std::optional<long long> budget_override) {
    check_nk(n, k);
    check_c(c);
    validate_pac_target(target);

    const double s_star = optimal_row_weight(n, k);
    const BudgetCount budget = resolve_budget(n, k, target, s_star, budget_override);
    const long long g = std::min(budget.value, n - k - 1);
    const CbpParams params = cbp_params(n, k, g, target.delta, s_star, c);
    // m = chi k (n/(n-k))^{s*} [log w + gamma - H_g] / (1-eta); expressed as
    // the shared scale so assemble() can stay uniform:
    //   chi * w * [..] / ((1-eta) * scale) with scale = w e^{-1} / k.
    const double ratio_pow =
        std::pow(static_cast<double>(n) / static_cast<double>(n - k), s_star);
    const double scale = static_cast<double>(n - k) /
                         (static_cast<double>(k) * ratio_pow);
    return assemble(n, k, budget, s_star, c, scale, params);
}

double cbp_eta_approx(long long n, long long k, long long g_eps, double delta,
                      CbpEtaRegime regime) {
    check_nk(n, k);
    if (g_eps < 0) throw InvalidParameter("g_eps", "budget must be nonnegative");
    if (!(delta > 0.0) || !(delta < 1.0))
        throw InvalidParameter("delta", "failure probability must lie in (0, 1)");

    const double w = static_cast<double>(n - k);
    const double s_star = optimal_row_weight(n, k);
    const double log2d = std::log(2.0 / delta);

    if (regime == CbpEtaRegime::Auto) {
        if (g_eps > 0) {
            regime = CbpEtaRegime::ApproxRecovery;
        } else {
            const double pivot = 2.0 / w;
            if (delta < 0.1 * pivot) regime = CbpEtaRegime::SmallDelta;
            else if (delta > 10.0 * pivot) regime = CbpEtaRegime::LargeDelta;
            else regime = CbpEtaRegime::SimilarDelta;
        }
    }
    switch (regime) {
        case CbpEtaRegime::SmallDelta:
            return std::sqrt(s_star / w);
        case CbpEtaRegime::LargeDelta:
            return std::sqrt(s_star * log2d / (w * std::log(w)));
        case CbpEtaRegime::SimilarDelta:
            return std::sqrt(s_star * log2d / (w * (log2d + std::log(w))));
        case CbpEtaRegime::ApproxRecovery: {
            const double gd = static_cast<double>(g_eps);
            const double denom = log2d / (gd + 1.0) + std::log(w / (gd + 1.0));
            return std::sqrt(s_star * log2d / (w * denom));
        }
        case CbpEtaRegime::Auto: break;
    }
    throw InvalidParameter("regime", "unresolved eta regime");
}

double cbp_implied_delta(long long n, long long k, long long g, long long m, double s,
                         double c) {
    check_nk(n, k);
    if (m < 1) throw InvalidParameter("m", "test count must be positive");
    // m_real(delta) is continuous and decreasing in delta; bisect.
    double lo = 1e-15, hi = 1.0 - 1e-12;
    auto m_real_of = [&](double delta) {
        const CbpParams params = cbp_params(n, k, g, delta, s, c);
        const double scale = s * std::pow(static_cast<double>(n - k) / static_cast<double>(n), s);
        return params.chi * params.expected_time_approx / ((1.0 - params.eta) * scale);
    };
    if (m_real_of(hi) > static_cast<double>(m)) return 1.0;  // even delta ~ 1 needs more tests
    if (m_real_of(lo) <= static_cast<double>(m)) return lo;
    for (int it = 0; it < 200; ++it) {
        const double mid = std::sqrt(lo * hi);  // log-scale bisection
        if (m_real_of(mid) > static_cast<double>(m)) lo = mid;
        else hi = mid;
    }
    return hi;
}

}  // namespace gtpac
