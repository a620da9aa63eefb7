#pragma once

#include <cmath>
#include <cstdint>

namespace gtpac {

/// Counter-free splitmix64 stream keyed by (master_seed, stream_id).
///
/// Streams with distinct ids are statistically independent, and a stream's
/// output is a pure function of the key, so parallel trials can each own a
/// stream and produce results independent of scheduling. All arithmetic is
/// unsigned 64-bit, giving identical sequences on every platform.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : state_(mix(mix(master_seed + 0x9E3779B97F4A7C15ULL) ^ stream_id)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix_out(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bernoulli(double p) { return next_double() < p; }

    /// Uniform integer in [0, bound). Multiply-high mapping; the bias is
    /// below bound/2^64 which is immaterial at the population sizes used here.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// Threshold form of next_bernoulli(p) for hot loops: compare
    /// next_u64() >> 11 against this once-precomputed value.
    static std::uint64_t bernoulli_threshold(double p) {
        if (p <= 0.0) return 0;
        if (p >= 1.0) return 1ULL << 53;
        return static_cast<std::uint64_t>(std::ceil(p * 0x1.0p53));
    }

    bool next_bernoulli_thr(std::uint64_t threshold) {
        return (next_u64() >> 11) < threshold;
    }

    /// Zeros preceding the next one in an i.i.d. Bernoulli(p) bit stream,
    /// by inversion of the geometric gap law; log1mp = log1p(-p).
    long long next_geometric_gap(double log1mp) {
        const double u = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
        const double gap = std::log(u) / log1mp;
        return gap >= 9e18 ? (1LL << 62) : static_cast<long long>(gap);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 33;
        z *= 0xFF51AFD7ED558CCDULL;
        z ^= z >> 33;
        z *= 0xC4CEB9FE1A85EC53ULL;
        z ^= z >> 33;
        return z;
    }

    static std::uint64_t mix_out(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Visits the positions of the ones in an n-long i.i.d. Bernoulli(p) row,
/// consuming one uniform draw per one (gap sampling). The visited positions
/// are strictly increasing.
template <typename Fn>
inline void for_each_bernoulli_one(RngStream& rng, long long n, double log1mp, Fn&& on_item) {
    long long j = rng.next_geometric_gap(log1mp);
    while (j < n) {
        on_item(j);
        j += 1 + rng.next_geometric_gap(log1mp);
    }
}

}  // namespace gtpac
