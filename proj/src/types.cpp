#include "gtpac/types.hpp"

#include <algorithm>
#include <bit>

#include "gtpac/errors.hpp"

namespace gtpac {

PoolingMatrix::PoolingMatrix(long long tests, long long items)
    : m_(tests),
      n_(items),
      wpr_(static_cast<std::size_t>((items + 63) / 64)),
      wpc_(static_cast<std::size_t>((tests + 63) / 64)),
      row_words_(static_cast<std::size_t>(tests) * wpr_, 0),
      col_words_(static_cast<std::size_t>(items) * wpc_, 0) {
    if (tests < 0) throw InvalidParameter("m", "test count must be nonnegative");
    if (items <= 0) throw InvalidParameter("n", "population size must be positive");
}

void PoolingMatrix::set(long long i, long long j) {
    row_words_[static_cast<std::size_t>(i) * wpr_ + static_cast<std::size_t>(j >> 6)] |=
        1ULL << (j & 63);
    col_words_[static_cast<std::size_t>(j) * wpc_ + static_cast<std::size_t>(i >> 6)] |=
        1ULL << (i & 63);
}

long long PoolingMatrix::row_weight(long long i) const {
    long long w = 0;
    for (std::uint64_t word : row_words(i)) w += std::popcount(word);
    return w;
}

long long Outcomes::count_positive() const {
    long long c = 0;
    for (std::uint64_t word : words) c += std::popcount(word);
    return c;
}

const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::CoMa: return "coma";
        case Algorithm::CBP: return "cbp";
        case Algorithm::DD: return "dd";
    }
    return "?";
}

const char* to_string(BudgetKind k) {
    return k == BudgetKind::FalsePositive ? "fp" : "fn";
}

void validate_ground_truth(const GroundTruth& gt) {
    if (gt.n <= 0) throw InvalidParameter("n", "population size must be positive");
    const long long k = gt.k();
    if (k <= 0) throw InvalidParameter("k", "defective set must be nonempty");
    if (k >= gt.n) throw InvalidParameter("k", "defective set must be a strict subset (k < n)");
    if (!std::is_sorted(gt.defectives.begin(), gt.defectives.end()))
        throw InvalidParameter("defectives", "indices must be sorted");
    if (std::adjacent_find(gt.defectives.begin(), gt.defectives.end()) != gt.defectives.end())
        throw InvalidParameter("defectives", "indices must be unique");
    if (gt.defectives.front() < 0 || gt.defectives.back() >= gt.n)
        throw InvalidParameter("defectives", "indices must lie in [0, n)");
}

void validate_design(const DesignSpec& design, long long n) {
    if (n <= 0) throw InvalidParameter("n", "population size must be positive");
    if (const auto* b = std::get_if<BernoulliDesign>(&design)) {
        if (!(b->p > 0.0) || !(b->p < 1.0))
            throw InvalidParameter("p", "participation probability must lie in (0, 1)");
    } else {
        const auto& rw = std::get<RowWeightDesign>(design);
        if (rw.s < 1) throw InvalidParameter("s", "items per test must be at least 1");
    }
}

void validate_pac_target(const PacTarget& target) {
    if (!(target.epsilon >= 0.0) || !(target.epsilon <= 1.0))
        throw InvalidParameter("epsilon", "error tolerance must lie in [0, 1]");
    if (!(target.delta > 0.0) || !(target.delta < 1.0))
        throw InvalidParameter("delta", "failure probability must lie in (0, 1)");
}

void validate_instance(const GroundTruth& gt, const DesignSpec& design) {
    validate_ground_truth(gt);
    validate_design(design, gt.n);
}

}  // namespace gtpac
