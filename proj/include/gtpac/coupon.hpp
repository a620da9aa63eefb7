#pragma once

#include <vector>

#include "gtpac/rng.hpp"

namespace gtpac {

/// Subset coupon collection: w distinct coupons, stop once w - g of them
/// have been seen (g coupons may stay uncollected).
struct SccpInstance {
    long long w = 0;
    long long g = 0;  // 0 <= g < w
};

enum class SccpForm { Exact, Approx };

/// Expected stopping time. Exact: w(H_w - H_g). Approx: w(log w + gamma - H_g),
/// the form the CBP bound consumes so its constants match.
double sccp_expected_time(const SccpInstance& inst, SccpForm form);

/// Upper bound on P(T > chi * w[log w + gamma - H_g]) for chi > 1:
///   min(1, w^{(g+1)(1-chi)} e^{(g+1)chi(H_g - gamma) + g} / (g+1)^{g+1}).
double sccp_tail_bound(const SccpInstance& inst, double chi);

/// i.i.d. stopping times of the draw-until-(w-g)-distinct process.
std::vector<long long> sccp_simulate(const SccpInstance& inst, long long runs, RngStream rng);

}  // namespace gtpac
