#pragma once

#include <optional>

#include "gtpac/budgets.hpp"
#include "gtpac/types.hpp"

namespace gtpac {

/// Parameters of the CBP sufficiency bound at one operating point.
struct CbpParams {
    double chi = 0.0;      // tail-exponent multiplier
    double big_c = 0.0;    // drives the Chernoff parameter
    double eta = 0.0;      // root of eta^2 + C*eta - C = 0 in (0,1)
    double c = 0.5;        // failure-probability split, design constant
    double s = 0.0;        // row weight used
    double expected_time_exact = 0.0;   // (n-k)(H_{n-k} - H_g)
    double expected_time_approx = 0.0;  // (n-k)(log(n-k) + gamma - H_g)
};

/// chi, C, eta for given (n, k, g, delta, s, c):
///   bracket = log(1/(c delta))/(g+1) + g/(g+1) + log((n-k)/(g+1))
///   chi     = bracket / (log(n-k) + gamma - H_g)
///   C       = log(1/((1-c) delta)) / (((n-k)/s) * bracket)
///   eta     = (-C + sqrt(C^2 + 4C)) / 2
CbpParams cbp_params(long long n, long long k, long long g_eps, double delta, double s,
                     double c = 0.5);

/// Sufficient tests for CBP with s items drawn per test:
///   m_S = ceil[ chi (n-k) (log(n-k)+gamma-H_g) / ((1-eta) s ((n-k)/n)^s) ],
/// g translated from target.epsilon via the row-weight rule, or overridden.
BoundResult cbp_sufficient_tests(long long n, long long k, const PacTarget& target, double s,
                                 double c = 0.5,
                                 std::optional<long long> budget_override = std::nullopt);

/// The s = s* corollary form
///   m_S = ceil[ chi k (n/(n-k))^{s*} (log(n-k)+gamma-H_g) / (1-eta) ],
/// an upper bound on the s = s* specialization of the main form.
BoundResult cbp_sstar_bound(long long n, long long k, const PacTarget& target, double c = 0.5,
                            std::optional<long long> budget_override = std::nullopt);

enum class CbpEtaRegime {
    Auto,           // pick by comparing delta against 2/(n-k), or g > 0
    SmallDelta,     // delta << 2/(n-k):  sqrt(s*/(n-k))
    LargeDelta,     // delta >> 2/(n-k):  sqrt(s* log(2/delta)/((n-k) log(n-k)))
    SimilarDelta,   // delta ~  2/(n-k):  sqrt(s* log(2/delta)/((n-k)[log(2/delta)+log(n-k)]))
    ApproxRecovery  // g > 0 closed form; reduces to SimilarDelta at g = 0
};

/// Closed-form approximations of eta at s = s*, c = 1/2.
double cbp_eta_approx(long long n, long long k, long long g_eps, double delta,
                      CbpEtaRegime regime = CbpEtaRegime::Auto);

/// delta implied by running m tests with budget g (inverts the bound by
/// bisection; the bound is monotone in delta).
double cbp_implied_delta(long long n, long long k, long long g, long long m, double s,
                         double c = 0.5);

}  // namespace gtpac
