// Test-only reference implementations: brute-force enumerations and naive
// set-based decoders kept deliberately independent of the library's
// word-parallel code paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "gtpac/types.hpp"

namespace oracle {

/// OR-prediction of a defective set on one explicit test row.
inline bool or_predict(const std::vector<int>& row, const std::set<long long>& items) {
    for (long long j : items)
        if (row[static_cast<std::size_t>(j)]) return true;
    return false;
}

/// Exhaustive disagreement probability under Bernoulli(p): enumerate all 2^n
/// rows, weight each by p^ones (1-p)^zeros.
inline double disagreement_bernoulli(const std::set<long long>& k_true,
                                     const std::set<long long>& khat, long long n, double p) {
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<int> row(static_cast<std::size_t>(n), 0);
        int ones = 0;
        for (long long j = 0; j < n; ++j)
            if ((mask >> j) & 1ULL) {
                row[static_cast<std::size_t>(j)] = 1;
                ++ones;
            }
        if (or_predict(row, k_true) != or_predict(row, khat))
            total += std::pow(p, ones) * std::pow(1.0 - p, static_cast<double>(n - ones));
    }
    return total;
}

/// Exhaustive disagreement probability under the s-draw row-weight design:
/// enumerate all n^s ordered draw tuples, each with probability n^{-s}.
inline double disagreement_rowweight(const std::set<long long>& k_true,
                                     const std::set<long long>& khat, long long n, long long s) {
    long long tuples = 1;
    for (long long i = 0; i < s; ++i) tuples *= n;
    long long disagreements = 0;
    for (long long code = 0; code < tuples; ++code) {
        std::vector<int> row(static_cast<std::size_t>(n), 0);
        long long rest = code;
        for (long long draw = 0; draw < s; ++draw) {
            row[static_cast<std::size_t>(rest % n)] = 1;
            rest /= n;
        }
        if (or_predict(row, k_true) != or_predict(row, khat)) ++disagreements;
    }
    return static_cast<double>(disagreements) / static_cast<double>(tuples);
}

/// Naive decoders on explicit 0/1 matrices.
struct DenseInstance {
    long long m = 0, n = 0;
    std::vector<std::vector<int>> a;  // m x n
    std::vector<int> y;               // m
};

inline DenseInstance densify(const gtpac::PoolingMatrix& matrix, const gtpac::Outcomes& y) {
    DenseInstance inst;
    inst.m = matrix.tests();
    inst.n = matrix.items();
    inst.a.assign(static_cast<std::size_t>(inst.m),
                  std::vector<int>(static_cast<std::size_t>(inst.n), 0));
    inst.y.assign(static_cast<std::size_t>(inst.m), 0);
    for (long long i = 0; i < inst.m; ++i) {
        inst.y[static_cast<std::size_t>(i)] = y.get(i) ? 1 : 0;
        for (long long j = 0; j < inst.n; ++j)
            inst.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                matrix.get(i, j) ? 1 : 0;
    }
    return inst;
}

inline std::vector<int> outcomes_naive(const DenseInstance& inst,
                                       const std::set<long long>& defectives) {
    std::vector<int> y(static_cast<std::size_t>(inst.m), 0);
    for (long long i = 0; i < inst.m; ++i)
        for (long long j : defectives)
            if (inst.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                y[static_cast<std::size_t>(i)] = 1;
                break;
            }
    return y;
}

inline std::set<long long> coma_naive(const DenseInstance& inst) {
    std::set<long long> estimate;
    for (long long j = 0; j < inst.n; ++j) {
        bool contained = true;
        for (long long i = 0; i < inst.m && contained; ++i)
            if (inst.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                !inst.y[static_cast<std::size_t>(i)])
                contained = false;
        if (contained) estimate.insert(j);
    }
    return estimate;
}

inline std::set<long long> cbp_naive(const DenseInstance& inst) {
    std::set<long long> estimate;
    for (long long j = 0; j < inst.n; ++j) estimate.insert(j);
    for (long long i = 0; i < inst.m; ++i) {
        if (inst.y[static_cast<std::size_t>(i)]) continue;
        for (long long j = 0; j < inst.n; ++j)
            if (inst.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                estimate.erase(j);
    }
    return estimate;
}

inline std::set<long long> dd_naive(const DenseInstance& inst) {
    const std::set<long long> pds = cbp_naive(inst);
    std::set<long long> definite;
    for (long long i = 0; i < inst.m; ++i) {
        if (!inst.y[static_cast<std::size_t>(i)]) continue;
        long long sole = -1;
        int members = 0;
        for (long long j : pds)
            if (inst.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                ++members;
                sole = j;
            }
        if (members == 1) definite.insert(sole);
    }
    return definite;
}

/// Largest budget whose exact prediction-error stays within eps, by direct
/// scan of the error expression (independent of the log-form translations).
inline long long scan_geps_bernoulli(double eps, long long k, double p, long long cap) {
    const double qk = std::pow(1.0 - p, static_cast<double>(k));
    long long best = -1;
    for (long long g = 0; g <= cap; ++g) {
        const double err = (1.0 - std::pow(1.0 - p, static_cast<double>(g))) * qk;
        if (err <= eps) best = g;
        else break;
    }
    return best;
}

inline long long scan_geps_rowweight(double eps, long long n, long long k, double s,
                                     long long cap) {
    const double miss_k = std::pow(1.0 - static_cast<double>(k) / static_cast<double>(n), s);
    long long best = -1;
    for (long long g = 0; g <= cap; ++g) {
        const double err =
            miss_k * (1.0 - std::pow(1.0 - static_cast<double>(g) / static_cast<double>(n - k), s));
        if (err <= eps) best = g;
        else break;
    }
    return best;
}

inline long long scan_deps_bernoulli(double eps, long long k, double p) {
    long long best = -1;
    for (long long d = 0; d <= k; ++d) {
        const double err = (1.0 - std::pow(1.0 - p, static_cast<double>(d))) *
                           std::pow(1.0 - p, static_cast<double>(k - d));
        if (err <= eps) best = d;
        else break;
    }
    return best;
}

inline double mean(const std::vector<double>& xs) {
    double total = 0.0;
    for (double x : xs) total += x;
    return total / static_cast<double>(xs.size());
}

inline double sample_stddev(const std::vector<double>& xs) {
    const double mu = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace oracle
