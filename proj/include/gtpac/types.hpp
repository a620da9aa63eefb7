#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gtpac {

/// Population of n items with a known defective subset. Indices are 0-based
/// and kept sorted; 0 < k < n always holds for a validated instance.
struct GroundTruth {
    long long n = 0;
    std::vector<long long> defectives;  // sorted, unique, in [0, n)

    long long k() const { return static_cast<long long>(defectives.size()); }
};

/// m x n binary test design. Bits are stored twice, row-major and
/// column-major, so both row scans (CBP/DD) and word-parallel column
/// containment checks (CoMa) are cheap. Immutable once sampled.
class PoolingMatrix {
public:
    PoolingMatrix() = default;
    PoolingMatrix(long long tests, long long items);

    long long tests() const { return m_; }
    long long items() const { return n_; }

    bool get(long long i, long long j) const {
        return (row_words_[static_cast<std::size_t>(i) * wpr_ + static_cast<std::size_t>(j >> 6)] >>
                (j & 63)) & 1ULL;
    }

    /// Same bit read through the column-major store; must agree with get().
    bool get_by_column(long long i, long long j) const {
        return (col_words_[static_cast<std::size_t>(j) * wpc_ + static_cast<std::size_t>(i >> 6)] >>
                (i & 63)) & 1ULL;
    }

    void set(long long i, long long j);

    std::span<const std::uint64_t> row_words(long long i) const {
        return {row_words_.data() + static_cast<std::size_t>(i) * wpr_, wpr_};
    }
    std::span<const std::uint64_t> col_words(long long j) const {
        return {col_words_.data() + static_cast<std::size_t>(j) * wpc_, wpc_};
    }

    std::size_t words_per_row() const { return wpr_; }
    std::size_t words_per_col() const { return wpc_; }

    long long row_weight(long long i) const;

    bool operator==(const PoolingMatrix& other) const = default;

private:
    long long m_ = 0;
    long long n_ = 0;
    std::size_t wpr_ = 0;
    std::size_t wpc_ = 0;
    std::vector<std::uint64_t> row_words_;
    std::vector<std::uint64_t> col_words_;
};

/// Boolean outcomes of the m tests, bit i set when test i is positive.
struct Outcomes {
    long long m = 0;
    std::vector<std::uint64_t> words;

    explicit Outcomes(long long tests = 0)
        : m(tests), words(static_cast<std::size_t>((tests + 63) / 64), 0) {}

    bool get(long long i) const {
        return (words[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1ULL;
    }
    void set(long long i) { words[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63); }

    long long count_positive() const;

    bool operator==(const Outcomes& other) const = default;
};

/// Each matrix entry drawn i.i.d. Bernoulli(p).
struct BernoulliDesign {
    double p = 0.0;
};

/// Each test draws s items uniformly with replacement; duplicates collapse
/// to a single 1, so realized row weights lie in [1, s].
struct RowWeightDesign {
    long long s = 0;
};

using DesignSpec = std::variant<BernoulliDesign, RowWeightDesign>;

/// PAC operating point: error tolerance epsilon in [0,1] and failure
/// probability delta in (0,1) (confidence 1 - delta).
struct PacTarget {
    double epsilon = 0.0;
    double delta = 0.0;
};

enum class BudgetKind { FalsePositive, FalseNegative };

/// Integer error budget obtained by translating epsilon (or supplied
/// directly): at most `count` errors of the given kind.
struct ErrorBudget {
    BudgetKind kind = BudgetKind::FalsePositive;
    long long count = 0;

    bool operator==(const ErrorBudget&) const = default;
};

/// A sufficiency-bound evaluation: the ceiled test count plus every real
/// intermediate the computation produced, keyed by stable names.
struct BoundResult {
    long long n = 0;
    long long m_s = 0;
    ErrorBudget budget;
    bool saturated = false;  // epsilon at or above the achievable error ceiling
    std::map<std::string, double> intermediates;

    double testing_rate() const { return static_cast<double>(m_s) / static_cast<double>(n); }
};

enum class Algorithm { CoMa, CBP, DD };

const char* to_string(Algorithm a);
const char* to_string(BudgetKind k);

/// Checks every type invariant of a (ground truth, design) pair.
/// Throws InvalidParameter naming the violated field.
void validate_instance(const GroundTruth& gt, const DesignSpec& design);

void validate_ground_truth(const GroundTruth& gt);
void validate_design(const DesignSpec& design, long long n);
void validate_pac_target(const PacTarget& target);

}  // namespace gtpac
