#include "netload/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace netload {

namespace {

constexpr double kPi = std::numbers::pi;

double radial_weight(double rho, double separation, double n) {
    const double count = std::min(kPi * rho * rho, n);
    return 2.0 * kPi * rho * std::pow(count + 1.0, -separation);
}

// composite Simpson over [a, b] with 8 panels; w is smooth inside a knot gap
double integrate_panel(double a, double b, double separation, double n) {
    constexpr int kPanels = 8;
    const double h = (b - a) / (2 * kPanels);
    double sum = radial_weight(a, separation, n) + radial_weight(b, separation, n);
    for (int j = 1; j < 2 * kPanels; ++j)
        sum += radial_weight(a + h * j, separation, n) * ((j % 2) ? 4.0 : 2.0);
    return sum * h / 3.0;
}

} // namespace

RadialTable::RadialTable(double separation, const TorusDomain& domain, int grid_points)
    : separation_(separation), domain_(domain), r_max_(domain.side / 2.0) {
    if (!(separation >= 0.0) || !std::isfinite(separation))
        throw std::invalid_argument("separation exponent must be finite and >= 0");
    if (grid_points < 256) throw std::invalid_argument("radial table needs >= 256 grid points");

    // Mass concentrates near 0 for s > 1, so the first half of the knots is
    // log-spaced up to r_max/8 and the rest linear up to r_max.
    const int half = grid_points / 2;
    knots_.reserve(static_cast<std::size_t>(grid_points) + 2);
    knots_.push_back(0.0);
    const double lo = r_max_ * 1e-7;
    const double mid = r_max_ / 8.0;
    for (int j = 0; j < half; ++j)
        knots_.push_back(lo * std::pow(mid / lo, static_cast<double>(j) / (half - 1)));
    for (int j = 1; j <= grid_points - half; ++j)
        knots_.push_back(mid + (r_max_ - mid) * static_cast<double>(j) / (grid_points - half));
    knots_.back() = r_max_;

    const double n = static_cast<double>(domain.n_hint);
    cdf_.resize(knots_.size());
    cdf_[0] = 0.0;
    long double acc = 0.0L;
    for (std::size_t j = 1; j < knots_.size(); ++j) {
        acc += integrate_panel(knots_[j - 1], knots_[j], separation, n);
        cdf_[j] = static_cast<double>(acc);
    }
    const double total = cdf_.back();
    if (!(total > 0.0)) throw std::logic_error("radial weight integrated to zero");
    normalizer_ = 1.0 / total;
    for (double& c : cdf_) c /= total;
    cdf_.back() = 1.0;
}

double RadialTable::inverse_cdf(double u) const {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return r_max_;
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const std::size_t j = static_cast<std::size_t>(it - cdf_.begin());
    const double c0 = cdf_[j - 1];
    const double c1 = cdf_[j];
    const double t = (c1 > c0) ? (u - c0) / (c1 - c0) : 0.0;
    return knots_[j - 1] + t * (knots_[j] - knots_[j - 1]);
}

double RadialTable::cdf(double rho) const {
    if (rho <= 0.0) return 0.0;
    if (rho >= r_max_) return 1.0;
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), rho);
    const std::size_t j = static_cast<std::size_t>(it - knots_.begin());
    const double r0 = knots_[j - 1];
    const double r1 = knots_[j];
    const double t = (r1 > r0) ? (rho - r0) / (r1 - r0) : 0.0;
    return cdf_[j - 1] + t * (cdf_[j] - cdf_[j - 1]);
}

RadialSampler::RadialSampler(Point source, std::shared_ptr<const RadialTable> table)
    : source_(source), table_(std::move(table)) {
    if (!table_) throw std::invalid_argument("radial sampler needs a table");
}

Point RadialSampler::sample(RngStream& rng) const {
    const double rho = table_->inverse_cdf(rng.next_unit());
    const double theta = 2.0 * kPi * rng.next_unit();
    return table_->domain().wrap(source_.x + rho * std::cos(theta),
                                 source_.y + rho * std::sin(theta));
}

RadialSampler radial_sampler_build(Point source, double separation, const TorusDomain& domain,
                                   int grid_points) {
    return RadialSampler(source, std::make_shared<RadialTable>(separation, domain, grid_points));
}

} // namespace netload
