#include "gtpac/decoders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "gtpac/errors.hpp"

namespace gtpac {

namespace {

std::vector<std::uint64_t> defective_bits(const GroundTruth& gt) {
    std::vector<std::uint64_t> bits(static_cast<std::size_t>((gt.n + 63) / 64), 0);
    for (long long j : gt.defectives) bits[static_cast<std::size_t>(j >> 6)] |= 1ULL << (j & 63);
    return bits;
}

/// Items whose bit is set, as a sorted index list (word order is ascending).
std::vector<long long> bits_to_indices(const std::vector<std::uint64_t>& bits, long long n) {
    std::vector<long long> out;
    for (long long j = 0; j < n; ++j)
        if ((bits[static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1ULL) out.push_back(j);
    return out;
}

/// CBP stage shared with DD: clear items seen in negative tests.
std::vector<std::uint64_t> probable_defective_bits(const PoolingMatrix& matrix,
                                                   const Outcomes& y) {
    const std::size_t words = matrix.words_per_row();
    std::vector<std::uint64_t> eliminated(words, 0);
    for (long long i = 0; i < matrix.tests(); ++i) {
        if (y.get(i)) continue;
        auto row = matrix.row_words(i);
        for (std::size_t w = 0; w < words; ++w) eliminated[w] |= row[w];
    }
    std::vector<std::uint64_t> pds(words, 0);
    const long long n = matrix.items();
    for (std::size_t w = 0; w < words; ++w) pds[w] = ~eliminated[w];
    // Mask tail bits beyond n.
    if (n & 63) pds[words - 1] &= (1ULL << (n & 63)) - 1;
    return pds;
}

void check_dims(const PoolingMatrix& matrix, const Outcomes& y) {
    if (matrix.tests() != y.m)
        throw DimensionMismatch("outcome length does not match matrix test count");
}

}  // namespace

Outcomes generate_outcomes(const PoolingMatrix& matrix, const GroundTruth& gt) {
    if (matrix.items() != gt.n)
        throw DimensionMismatch("matrix item count does not match population size");
    const auto k_bits = defective_bits(gt);
    Outcomes y(matrix.tests());
    for (long long i = 0; i < matrix.tests(); ++i) {
        auto row = matrix.row_words(i);
        for (std::size_t w = 0; w < row.size(); ++w) {
            if (row[w] & k_bits[w]) {
                y.set(i);
                break;
            }
        }
    }
    return y;
}

DecodeResult decode_coma(const PoolingMatrix& matrix, const Outcomes& y) {
    check_dims(matrix, y);
    DecodeResult result;
    const std::size_t words = matrix.words_per_col();
    for (long long j = 0; j < matrix.items(); ++j) {
        auto col = matrix.col_words(j);
        bool contained = true;
        for (std::size_t w = 0; w < words; ++w) {
            if (col[w] & ~y.words[w]) {
                contained = false;
                break;
            }
        }
        if (contained) result.estimate.push_back(j);
    }
    return result;
}

DecodeResult decode_cbp(const PoolingMatrix& matrix, const Outcomes& y) {
    check_dims(matrix, y);
    DecodeResult result;
    result.estimate = bits_to_indices(probable_defective_bits(matrix, y), matrix.items());
    return result;
}

DecodeResult decode_dd(const PoolingMatrix& matrix, const Outcomes& y) {
    check_dims(matrix, y);
    const auto pds = probable_defective_bits(matrix, y);
    const std::size_t words = matrix.words_per_row();
    std::vector<std::uint64_t> definite(words, 0);
    for (long long i = 0; i < matrix.tests(); ++i) {
        if (!y.get(i)) continue;
        auto row = matrix.row_words(i);
        long long members = 0;
        std::uint64_t lone_word = 0;
        std::size_t lone_index = 0;
        for (std::size_t w = 0; w < words && members <= 1; ++w) {
            const std::uint64_t inter = row[w] & pds[w];
            if (inter) {
                members += std::popcount(inter);
                lone_word = inter;
                lone_index = w;
            }
        }
        if (members == 1) definite[lone_index] |= lone_word;
    }
    DecodeResult result;
    result.estimate = bits_to_indices(definite, matrix.items());
    return result;
}

void score_against(DecodeResult& result, const GroundTruth& gt) {
    long long hits = 0;
    for (long long j : result.estimate)
        hits += std::binary_search(gt.defectives.begin(), gt.defectives.end(), j) ? 1 : 0;
    result.fp = static_cast<long long>(result.estimate.size()) - hits;
    result.fn = gt.k() - hits;
}

DecodeResult decode_coma(const PoolingMatrix& matrix, const Outcomes& y, const GroundTruth& gt) {
    auto result = decode_coma(matrix, y);
    score_against(result, gt);
    return result;
}

DecodeResult decode_cbp(const PoolingMatrix& matrix, const Outcomes& y, const GroundTruth& gt) {
    auto result = decode_cbp(matrix, y);
    score_against(result, gt);
    return result;
}

DecodeResult decode_dd(const PoolingMatrix& matrix, const Outcomes& y, const GroundTruth& gt) {
    auto result = decode_dd(matrix, y);
    score_against(result, gt);
    return result;
}

double exact_disagreement_prob(const std::vector<long long>& k_true,
                               const std::vector<long long>& khat,
                               const DesignSpec& design,
                               long long n) {
    if (n <= 0) throw InvalidParameter("n", "population size must be positive");
    auto in_range = [n](long long j) { return j >= 0 && j < n; };
    if (!std::all_of(k_true.begin(), k_true.end(), in_range))
        throw InvalidParameter("k_true", "item index out of range");
    if (!std::all_of(khat.begin(), khat.end(), in_range))
        throw InvalidParameter("khat", "item index out of range");

    std::vector<long long> kt(k_true), kh(khat);
    std::sort(kt.begin(), kt.end());
    std::sort(kh.begin(), kh.end());
    std::vector<long long> common;
    std::set_intersection(kt.begin(), kt.end(), kh.begin(), kh.end(),
                          std::back_inserter(common));
    const long long c = static_cast<long long>(common.size());
    const long long a = static_cast<long long>(kt.size()) - c;  // missed defectives
    const long long b = static_cast<long long>(kh.size()) - c;  // false positives

    if (const auto* bern = std::get_if<BernoulliDesign>(&design)) {
        const double q = 1.0 - bern->p;
        const double qa = std::pow(q, static_cast<double>(a));
        const double qb = std::pow(q, static_cast<double>(b));
        const double qc = std::pow(q, static_cast<double>(c));
        return qc * ((1.0 - qa) * qb + (1.0 - qb) * qa);
    }
    const double s = static_cast<double>(std::get<RowWeightDesign>(design).s);
    const double nd = static_cast<double>(n);
    auto miss = [&](long long size) {
        return std::pow(static_cast<double>(n - size) / nd, s);
    };
    const double miss_all = miss(c + a + b);
    return (miss(c + b) - miss_all) + (miss(c + a) - miss_all);
}

}  // namespace gtpac
