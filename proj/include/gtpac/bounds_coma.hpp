#pragma once

#include <optional>

#include "gtpac/budgets.hpp"
#include "gtpac/types.hpp"

namespace gtpac {

/// Probability that a fixed set of g non-defectives stays hidden (appears in
/// no negative test) across m independent Bernoulli(p) tests:
///   (1 - (1-p)^k + (1-p)^{g+k})^m.
double hidden_prob(long long g, long long k, double p, long long m);

/// Sufficient tests for CoMa at a given p:
///   m_S = ceil[ (log C(n-k, g+1) + log(1/delta)) /
///               log(1/(1 - (1-p)^k + (1-p)^{g+k+1})) ]
/// with g translated from target.epsilon, or taken from budget_override.
BoundResult coma_sufficient_tests(long long n, long long k, double p, const PacTarget& target,
                                  std::optional<long long> budget_override = std::nullopt);

/// Failure probability implied by running m tests with budget g: the
/// inverted form  C(n-k, g+1) (1-(1-p)^k+(1-p)^{g+k+1})^m, clipped to [0,1].
double coma_implied_delta(long long n, long long k, double p, long long g, long long m);

/// Jointly optimal (p, g, m) for CoMa at a PAC target.
struct ComaOptimum {
    double p_opt = 0.0;
    long long g_eps = 0;
    long long m_s = 0;
    double m_real = 0.0;
    bool saturated = false;
};

/// Fixed-point heuristic: start at p = 1/(k+1), alternate the budget
/// translation and p_opt = 1 - (k/(k+g+1))^{1/(g+1)} until (p, g) is
/// stationary. Throws NonConvergence (with the last iterate) past the cap.
ComaOptimum coma_fixed_point_opt(long long n, long long k, double eps, double delta,
                                 int max_iterations = 1000);

/// Grid resolution for the direct search over the same program.
struct ComaGridSpec {
    double p_min = 1e-5;
    double p_max = 0.9;
    long long p_steps = 2000;  // log-spaced
    long long g_cap = -1;      // -1: n-k
    long long m_cap = 1LL << 40;
};

/// Grid search over (p, g): minimal feasible m per grid point, global
/// minimum by (m, p, g) lexicographic tie-break. Throws Unsatisfiable when
/// no grid point is feasible.
ComaOptimum coma_minlp_grid(long long n, long long k, double eps, double delta,
                            const ComaGridSpec& grid = {});

}  // namespace gtpac
