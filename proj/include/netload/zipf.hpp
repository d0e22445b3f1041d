#pragma once

#include <vector>

#include "netload/order.hpp"
#include "netload/rng.hpp"

namespace netload {

// Zipf pmf over {1..support_max}: Pr(k) = k^-exponent / sum_j j^-exponent.
// Cumulative weights are precomputed once; sampling is inverse-CDF by binary
// search. A prefix draw conditions the law on {1..q} without rebuilding, so
// one table serves every conditional support. Immutable after construction.
class ZipfPmf {
public:
    ZipfPmf(double exponent, int support_max);

    double prob(int k) const;                       // throws outside support
    double prob_conditional(int k, int q) const;    // Pr(k | value <= q)
    int sample(RngStream& rng) const;
    int sample_prefix(int q, RngStream& rng) const; // law proportional to k^-exponent on {1..q}

    double exponent() const { return exponent_; }
    int support_max() const { return support_max_; }
    double total_weight() const { return cum_.back(); }

private:
    int locate(double target, int hi) const;

    double exponent_;
    int support_max_;
    std::vector<double> cum_; // cum_[k] = sum_{j<=k} j^-exponent, cum_[0] = 0
};

// n-dependence of the Zipf normalizing prefactor at fixed k as n grows:
// exponent > 1 keeps it constant, exponent = 1 decays like 1/log n, and
// exponent < 1 decays like n^(exponent-1).
AsymptoticOrder zipf_tail_class(double exponent);

} // namespace netload
