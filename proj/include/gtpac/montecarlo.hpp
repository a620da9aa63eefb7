#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gtpac/types.hpp"

namespace gtpac {

/// One randomized experiment: per trial, draw the defective set (fixed or a
/// fresh uniform k-subset), draw the test matrix, decode, and count errors.
/// A trial fails when its error count exceeds the budget.
struct TrialPlan {
    long long n = 0;
    long long k = 0;
    std::optional<std::vector<long long>> fixed_defectives;  // nullopt: random k-set per trial
    DesignSpec design;
    Algorithm decoder = Algorithm::CoMa;
    long long m = 0;
    ErrorBudget budget;
    long long trials = 1000;
    std::uint64_t master_seed = 0;
    /// Trial t uses stream_id = stream_offset + t; rate curves key this by m
    /// so grid points stay independent.
    std::uint64_t stream_offset = 0;
    int threads = 0;  // 0: GTPAC_THREADS or hardware
};

struct SimulationSummary {
    long long trials = 0;
    long long failures = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;   // 95% Wilson score interval
    double ci_high = 0.0;
    std::map<long long, long long> error_histogram;  // error count -> trials

    bool operator==(const SimulationSummary&) const = default;
};

/// Deterministic given (plan, master_seed) regardless of thread count.
SimulationSummary run_trials(const TrialPlan& plan);

struct RateCurvePoint {
    long long m = 0;
    SimulationSummary summary;
};

/// One summary per m; per-(m, trial) streams use stream_id = m * 2^32 + trial.
std::vector<RateCurvePoint> empirical_rate_curve(const TrialPlan& plan_template,
                                                 const std::vector<long long>& m_grid);

/// Mean count of hidden non-defectives (CBP false positives) across trials;
/// Monte Carlo counterpart of dd_gbar.
double estimate_expected_hidden(long long n, long long k, double p, long long m,
                                long long trials, std::uint64_t seed, int threads = 0);

/// 95% Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(long long successes, long long trials);

}  // namespace gtpac
