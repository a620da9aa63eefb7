#pragma once

#include <optional>
#include <vector>

#include "gtpac/types.hpp"

namespace gtpac {

/// Decoder output: the estimated defective set, plus false positive /
/// negative counts when a ground truth was supplied (-1 otherwise).
struct DecodeResult {
    std::vector<long long> estimate;  // sorted item indices
    long long fp = -1;
    long long fn = -1;
};

/// y_i = 1 iff test i pools at least one defective item.
Outcomes generate_outcomes(const PoolingMatrix& matrix, const GroundTruth& gt);

/// Column matching: item j is declared defective iff the ones of column j
/// are contained in the ones of the outcome vector. Never misses a
/// defective; may emit false positives.
DecodeResult decode_coma(const PoolingMatrix& matrix, const Outcomes& y);

/// Basis pursuit / coupon-collector decoding: clear every item that appears
/// in a negative test, declare the rest defective. Set-equivalent to
/// decode_coma by construction, computed through row scans instead.
DecodeResult decode_cbp(const PoolingMatrix& matrix, const Outcomes& y);

/// Definite defectives: stage 1 forms the probable defective set (the CBP
/// estimate); stage 2 keeps the items that appear as the sole PDS member in
/// some positive test. Never emits a false positive; may miss defectives.
DecodeResult decode_dd(const PoolingMatrix& matrix, const Outcomes& y);

/// Fills fp/fn of a decode result against the ground truth.
void score_against(DecodeResult& result, const GroundTruth& gt);

DecodeResult decode_coma(const PoolingMatrix& matrix, const Outcomes& y, const GroundTruth& gt);
DecodeResult decode_cbp(const PoolingMatrix& matrix, const Outcomes& y, const GroundTruth& gt);
DecodeResult decode_dd(const PoolingMatrix& matrix, const Outcomes& y, const GroundTruth& gt);

/// Probability over a fresh test row that the OR-prediction from `khat`
/// disagrees with the one from `k_true`, exact for both designs.
///
/// With A = K\Khat, B = Khat\K, C = K intersect Khat the Bernoulli form is
///   (1-p)^|C| [ (1-(1-p)^|A|)(1-p)^|B| + (1-(1-p)^|B|)(1-p)^|A| ]
/// and the s-draw row-weight form is the inclusion-exclusion
///   [((n-c-b)/n)^s - ((n-c-a-b)/n)^s] + [((n-c-a)/n)^s - ((n-c-a-b)/n)^s].
double exact_disagreement_prob(const std::vector<long long>& k_true,
                               const std::vector<long long>& khat,
                               const DesignSpec& design,
                               long long n);

}  // namespace gtpac
