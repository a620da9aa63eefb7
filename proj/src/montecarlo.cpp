#include "gtpac/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "gtpac/errors.hpp"
#include "gtpac/parallel.hpp"
#include "gtpac/rng.hpp"

namespace gtpac {

namespace {

/// Reusable per-thread buffers so the trial loop settles into zero
/// allocations after warmup.
struct TrialWorkspace {
    std::vector<std::uint64_t> k_bits;        // defective indicator, n bits
    std::vector<std::uint64_t> row;           // current test row, n bits
    std::vector<std::uint64_t> eliminated;    // union of negative rows
    std::vector<std::uint64_t> positive_flat; // positive rows, back to back
    std::size_t positive_count = 0;
    std::vector<std::uint64_t> definite;      // DD stage-2 accumulator
    std::vector<std::uint64_t> col_words;     // column-major bits, CoMa route
    std::vector<std::uint64_t> y_words;       // outcome bits, CoMa route
};

void clear_bits(std::vector<std::uint64_t>& bits, std::size_t words) {
    bits.assign(words, 0);
}

inline void set_bit(std::vector<std::uint64_t>& bits, long long j) {
    bits[static_cast<std::size_t>(j >> 6)] |= 1ULL << (j & 63);
}

inline bool test_bit(const std::vector<std::uint64_t>& bits, long long j) {
    return (bits[static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1ULL;
}

/// Uniform k-subset of [0, n) via Floyd's algorithm; order of draws is fixed
/// so the trial stream stays reproducible.
void sample_defectives(long long n, long long k, RngStream& rng,
                       std::vector<std::uint64_t>& k_bits, std::size_t words) {
    clear_bits(k_bits, words);
    for (long long i = n - k; i < n; ++i) {
        const long long j = static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(i + 1)));
        if (test_bit(k_bits, j)) set_bit(k_bits, i);
        else set_bit(k_bits, j);
    }
}

/// Draws one test row into the row bitset, invoking on_item per distinct
/// pooled item. Bernoulli rows are gap-sampled, so the rng cost scales with
/// the row weight rather than the population size.
template <typename RowFn>
void draw_row(const DesignSpec& design, long long n, RngStream& rng,
              std::vector<std::uint64_t>& row, std::size_t words, RowFn&& on_item) {
    clear_bits(row, words);
    if (const auto* b = std::get_if<BernoulliDesign>(&design)) {
        const double log1mp = std::log1p(-b->p);
        for_each_bernoulli_one(rng, n, log1mp, [&](long long j) {
            set_bit(row, j);
            on_item(j);
        });
    } else {
        const long long s = std::get<RowWeightDesign>(design).s;
        for (long long draw = 0; draw < s; ++draw) {
            const long long j =
                static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(n)));
            if (!test_bit(row, j)) {
                set_bit(row, j);
                on_item(j);
            }
        }
    }
}

/// Column-matching failure count through the column-major route, kept
/// independent of the row-elimination path so the two can cross-check.
long long coma_trial_fp_count(const TrialPlan& plan, RngStream& rng, TrialWorkspace& ws,
                              std::size_t words) {
    const long long n = plan.n;
    const std::size_t wpc = static_cast<std::size_t>((plan.m + 63) / 64);
    ws.col_words.assign(static_cast<std::size_t>(n) * wpc, 0);
    ws.y_words.assign(wpc, 0);
    for (long long i = 0; i < plan.m; ++i) {
        bool positive = false;
        const auto place = [&](long long j) {
            ws.col_words[static_cast<std::size_t>(j) * wpc + static_cast<std::size_t>(i >> 6)] |=
                1ULL << (i & 63);
            positive = positive || test_bit(ws.k_bits, j);
        };
        if (const auto* b = std::get_if<BernoulliDesign>(&plan.design)) {
            for_each_bernoulli_one(rng, n, std::log1p(-b->p), place);
        } else {
            // Duplicate draws re-set the same column bit, collapsing as the
            // design requires.
            const long long s = std::get<RowWeightDesign>(plan.design).s;
            for (long long draw = 0; draw < s; ++draw)
                place(static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(n))));
        }
        if (positive) ws.y_words[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63);
    }
    long long declared = 0;
    for (long long j = 0; j < n; ++j) {
        const std::uint64_t* col = ws.col_words.data() + static_cast<std::size_t>(j) * wpc;
        bool contained = true;
        for (std::size_t w = 0; w < wpc; ++w)
            if (col[w] & ~ws.y_words[w]) {
                contained = false;
                break;
            }
        declared += contained ? 1 : 0;
    }
    long long k_count = 0;
    for (std::size_t w = 0; w < words; ++w) k_count += std::popcount(ws.k_bits[w]);
    return declared - k_count;  // defective columns are always contained
}

/// One full trial: returns the error count of the planned decoder.
long long run_one_trial(const TrialPlan& plan, std::uint64_t stream_id, TrialWorkspace& ws) {
    const long long n = plan.n;
    const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
    RngStream rng(plan.master_seed, stream_id);

    if (plan.fixed_defectives) {
        clear_bits(ws.k_bits, words);
        for (long long j : *plan.fixed_defectives) set_bit(ws.k_bits, j);
    } else {
        sample_defectives(n, plan.k, rng, ws.k_bits, words);
    }

    if (plan.decoder == Algorithm::CoMa) return coma_trial_fp_count(plan, rng, ws, words);

    clear_bits(ws.eliminated, words);
    ws.positive_count = 0;

    const bool need_positive_rows = plan.decoder == Algorithm::DD;
    if (need_positive_rows)
        ws.positive_flat.resize(static_cast<std::size_t>(plan.m) * words);
    for (long long i = 0; i < plan.m; ++i) {
        bool hits_defective = false;
        draw_row(plan.design, n, rng, ws.row, words, [&](long long j) {
            hits_defective = hits_defective || test_bit(ws.k_bits, j);
        });
        if (hits_defective) {
            if (need_positive_rows) {
                std::copy(ws.row.begin(), ws.row.end(),
                          ws.positive_flat.begin() +
                              static_cast<std::ptrdiff_t>(ws.positive_count * words));
                ++ws.positive_count;
            }
        } else {
            for (std::size_t w = 0; w < words; ++w) ws.eliminated[w] |= ws.row[w];
        }
    }

    // Probable defective set = complement of items seen in negative tests.
    const std::uint64_t tail_mask = (n & 63) ? ((1ULL << (n & 63)) - 1) : ~0ULL;
    long long k_count = 0;
    long long pds_count = 0;
    for (std::size_t w = 0; w < words; ++w) {
        k_count += std::popcount(ws.k_bits[w]);
        std::uint64_t pds_word = ~ws.eliminated[w];
        if (w == words - 1) pds_word &= tail_mask;
        pds_count += std::popcount(pds_word);
    }

    switch (plan.decoder) {
        case Algorithm::CoMa:
        case Algorithm::CBP:
            // Defectives are never eliminated, so |PDS| - k counts the FPs.
            return pds_count - k_count;
        case Algorithm::DD: {
            clear_bits(ws.definite, words);
            for (std::size_t r = 0; r < ws.positive_count; ++r) {
                const std::uint64_t* row = ws.positive_flat.data() + r * words;
                long long members = 0;
                std::uint64_t lone_word = 0;
                std::size_t lone_index = 0;
                for (std::size_t w = 0; w < words && members <= 1; ++w) {
                    std::uint64_t inter = row[w] & ~ws.eliminated[w];
                    if (w == words - 1) inter &= tail_mask;
                    if (inter) {
                        members += std::popcount(inter);
                        lone_word = inter;
                        lone_index = w;
                    }
                }
                if (members == 1) ws.definite[lone_index] |= lone_word;
            }
            long long identified = 0;
            for (std::size_t w = 0; w < words; ++w)
                identified += std::popcount(ws.definite[w] & ws.k_bits[w]);
            return k_count - identified;
        }
    }
    return 0;
}

void validate_plan(const TrialPlan& plan) {
    if (plan.n <= 0) throw InvalidParameter("n", "population size must be positive");
    if (plan.m < 0) throw InvalidParameter("m", "test count must be nonnegative");
    if (plan.trials < 1) throw InvalidParameter("trials", "need at least one trial");
    if (plan.fixed_defectives) {
        GroundTruth gt{plan.n, *plan.fixed_defectives};
        validate_ground_truth(gt);
    } else {
        if (plan.k <= 0 || plan.k >= plan.n) throw InvalidParameter("k", "requires 0 < k < n");
    }
    validate_design(plan.design, plan.n);
    const bool fp_decoder =
        plan.decoder == Algorithm::CoMa || plan.decoder == Algorithm::CBP;
    if (fp_decoder && plan.budget.kind != BudgetKind::FalsePositive)
        throw InvalidParameter("budget", "CoMa/CBP plans take a false-positive budget");
    if (!fp_decoder && plan.budget.kind != BudgetKind::FalseNegative)
        throw InvalidParameter("budget", "DD plans take a false-negative budget");
    if (plan.budget.count < 0) throw InvalidParameter("budget", "budget must be nonnegative");
}

}  // namespace

std::pair<double, double> wilson_interval(long long successes, long long trials) {
    if (trials <= 0) return {0.0, 1.0};
    const double z = 1.959963984540054;  // 97.5% normal quantile
    const double nn = static_cast<double>(trials);
    const double p_hat = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p_hat + z2 / (2.0 * nn)) / denom;
    const double half =
        z * std::sqrt(p_hat * (1.0 - p_hat) / nn + z2 / (4.0 * nn * nn)) / denom;
    const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

SimulationSummary run_trials(const TrialPlan& plan) {
    validate_plan(plan);

    // Each trial owns a result slot and an rng stream keyed by its index, so
    // the reduction below is independent of thread count and scheduling.
    std::vector<long long> error_counts(static_cast<std::size_t>(plan.trials), 0);
    parallel_for(0, plan.trials, plan.threads, [&](long long t) {
        thread_local TrialWorkspace ws;
        error_counts[static_cast<std::size_t>(t)] =
            run_one_trial(plan, plan.stream_offset + static_cast<std::uint64_t>(t), ws);
    });

    SimulationSummary summary;
    summary.trials = plan.trials;
    for (long long count : error_counts) {
        if (count > plan.budget.count) ++summary.failures;
        ++summary.error_histogram[count];
    }
    summary.p_hat = static_cast<double>(summary.failures) / static_cast<double>(summary.trials);
    std::tie(summary.ci_low, summary.ci_high) = wilson_interval(summary.failures, summary.trials);
    return summary;
}

std::vector<RateCurvePoint> empirical_rate_curve(const TrialPlan& plan_template,
                                                 const std::vector<long long>& m_grid) {
    if (!std::is_sorted(m_grid.begin(), m_grid.end()))
        throw InvalidParameter("m_grid", "grid must be sorted ascending");
    std::vector<RateCurvePoint> points;
    points.reserve(m_grid.size());
    for (long long m : m_grid) {
        TrialPlan plan = plan_template;
        plan.m = m;
        plan.stream_offset = static_cast<std::uint64_t>(m) << 32;
        points.push_back({m, run_trials(plan)});
    }
    return points;
}

double estimate_expected_hidden(long long n, long long k, double p, long long m,
                                long long trials, std::uint64_t seed, int threads) {
    TrialPlan plan;
    plan.n = n;
    plan.k = k;
    std::vector<long long> fixed(static_cast<std::size_t>(k));
    for (long long i = 0; i < k; ++i) fixed[static_cast<std::size_t>(i)] = i;
    plan.fixed_defectives = std::move(fixed);  // design is exchangeable over items
    plan.design = BernoulliDesign{p};
    plan.decoder = Algorithm::CBP;
    plan.m = m;
    plan.budget = {BudgetKind::FalsePositive, 0};
    plan.trials = trials;
    plan.master_seed = seed;
    plan.threads = threads;
    const SimulationSummary summary = run_trials(plan);
    double total = 0.0;
    for (const auto& [count, freq] : summary.error_histogram)
        total += static_cast<double>(count) * static_cast<double>(freq);
    return total / static_cast<double>(trials);
}

}  // namespace gtpac
