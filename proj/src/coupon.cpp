#include "gtpac/coupon.hpp"

#include <cmath>

#include "gtpac/errors.hpp"
#include "gtpac/numeric.hpp"

namespace gtpac {

namespace {

void validate(const SccpInstance& inst) {
    if (inst.w <= 0) throw InvalidParameter("w", "coupon count must be positive");
    if (inst.g < 0 || inst.g >= inst.w)
        throw InvalidParameter("g", "uncollected allowance must satisfy 0 <= g < w");
}

}  // namespace

double sccp_expected_time(const SccpInstance& inst, SccpForm form) {
    validate(inst);
    const double w = static_cast<double>(inst.w);
    if (form == SccpForm::Exact) return w * (harmonic(inst.w) - harmonic(inst.g));
    return w * (std::log(w) + kEulerGamma - harmonic(inst.g));
}

double sccp_tail_bound(const SccpInstance& inst, double chi) {
    validate(inst);
    if (!(chi > 1.0)) throw InvalidParameter("chi", "tail multiplier must exceed 1");
    const double w = static_cast<double>(inst.w);
    const double g = static_cast<double>(inst.g);
    const double log_bound = (g + 1.0) * (1.0 - chi) * std::log(w) +
                             (g + 1.0) * chi * (harmonic(inst.g) - kEulerGamma) + g -
                             (g + 1.0) * std::log(g + 1.0);
    return std::min(1.0, std::exp(log_bound));
}

std::vector<long long> sccp_simulate(const SccpInstance& inst, long long runs, RngStream rng) {
    validate(inst);
    if (runs < 1) throw InvalidParameter("runs", "need at least one run");
    std::vector<long long> times;
    times.reserve(static_cast<std::size_t>(runs));
    const long long needed = inst.w - inst.g;
    std::vector<std::uint32_t> seen(static_cast<std::size_t>(inst.w), 0);
    std::uint32_t epoch = 0;
    for (long long r = 0; r < runs; ++r) {
        ++epoch;
        long long distinct = 0;
        long long draws = 0;
        while (distinct < needed) {
            ++draws;
            const auto coupon = rng.next_below(static_cast<std::uint64_t>(inst.w));
            if (seen[static_cast<std::size_t>(coupon)] != epoch) {
                seen[static_cast<std::size_t>(coupon)] = epoch;
                ++distinct;
            }
        }
        times.push_back(draws);
    }
    return times;
}

}  // namespace gtpac
