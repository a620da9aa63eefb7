#pragma once

#include <optional>
#include <vector>

#include "gtpac/budgets.hpp"
#include "gtpac/types.hpp"

namespace gtpac {

/// Expected number of hidden non-defectives after m Bernoulli(p) tests:
///   (n-k)(1 - p(1-p)^k)^m.
double dd_gbar(long long n, long long k, double p, long long m);

/// Probability that a given set of d defectives is never isolated across m
/// tests, conditioned on g hidden non-defectives in the PDS:
///   (1 - d p (1-p)^{k-1+g})^m.  d = 0 gives 1 (vacuous event).
double dd_miss_prob(long long d, long long g, long long k, double p, long long m);

/// Real-exponent variant used inside the bound, where g is gbar + gtilde.
double dd_miss_prob_real(long long d, double g, long long k, double p, long long m);

/// P(G = g): the binomial-mixture sum over the negative-test count b = 1..m.
/// The b = 0 term is omitted as the mixture is written; its mass,
/// (1-(1-p)^k)^m, belongs to the all-hidden event g = n-k and is exposed
/// separately below so totals can be reconciled.
double dd_hidden_count_pmf(long long g, long long n, long long k, double p, long long m);

/// The omitted b = 0 mass: probability of zero negative tests.
double dd_all_hidden_mass(long long k, double p, long long m);

enum class DdGtildePolicy { Default, Grid };

/// Smallest m with  C(k, d+1) (1 - (d+1) p (1-p)^{k-1+gbar(m)+gtilde})^m <= delta,
/// where gbar(m) = (n-k)(1-p(1-p)^k)^m re-evaluated along the scan.
///
/// Default policy: gtilde = ceil(gbar) - gbar; coarse stride max(1, ke/100)
/// then unit backtrack. The scanned left side must descend monotonically or
/// the scan aborts. Grid policy (small n): per m, take the smallest gtilde'
/// whose envelope matches the exact mixture average, i.e. solve
///   sum_g (1-(d+1)p(1-p)^{k-1+g})^m P(G=g) = (1-(d+1)p(1-p)^{k-1+gbar+gtilde'})^m
/// and apply the confidence constraint to that envelope.
BoundResult dd_sufficient_tests(long long n, long long k, double p, const PacTarget& target,
                                DdGtildePolicy policy = DdGtildePolicy::Default,
                                std::optional<long long> budget_override = std::nullopt,
                                long long m_cap = 20'000'000);

/// delta implied by running m tests with budget d (direct evaluation of the
/// bound's left side at m).
double dd_implied_delta(long long n, long long k, double p, long long d, long long m);

}  // namespace gtpac
