#pragma once

#include <memory>
#include <span>
#include <vector>

#include "netload/rng.hpp"
#include "netload/torus.hpp"

namespace netload {

// Inverse-CDF table for the relationship-separation radial law
//
//   w(rho) = 2*pi*rho * (min(pi*rho^2, n) + 1)^(-s),   rho in [0, side/2],
//
// the expected-count form of the population-distance density under uniform
// intensity 1. Truncation at side/2 with renormalization keeps level sets
// circular and changes only the constant, not the order. The law is
// translation invariant on the torus, so one table serves every source.
// Built once, then frozen; safe to share across threads.
class RadialTable {
public:
    RadialTable(double separation, const TorusDomain& domain, int grid_points = 4096);

    double inverse_cdf(double u) const; // u in [0, 1)
    double cdf(double rho) const;
    double r_max() const { return r_max_; }
    double separation() const { return separation_; }
    double normalizer() const { return normalizer_; } // 1 / integral of w over [0, r_max]
    const TorusDomain& domain() const { return domain_; }
    std::span<const double> knots() const { return knots_; }
    std::span<const double> cdf_values() const { return cdf_; }

private:
    double separation_;
    TorusDomain domain_;
    double r_max_;
    double normalizer_;
    std::vector<double> knots_; // ascending, knots_[0] = 0, back() = r_max
    std::vector<double> cdf_;   // cdf_[0] = 0, back() = 1
};

// Binds a shared radial table to a source point. sample() draws a radius by
// inverse CDF (linear interpolation between knots) and a uniform angle, then
// wraps onto the torus.
class RadialSampler {
public:
    RadialSampler(Point source, std::shared_ptr<const RadialTable> table);

    Point sample(RngStream& rng) const;

    const Point& source() const { return source_; }
    const RadialTable& table() const { return *table_; }
    RadialSampler for_source(Point source) const { return RadialSampler(source, table_); }

private:
    Point source_;
    std::shared_ptr<const RadialTable> table_;
};

RadialSampler radial_sampler_build(Point source, double separation, const TorusDomain& domain,
                                   int grid_points = 4096);

} // namespace netload
