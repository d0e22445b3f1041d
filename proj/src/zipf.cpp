#include "netload/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netload {

ZipfPmf::ZipfPmf(double exponent, int support_max)
    : exponent_(exponent), support_max_(support_max) {
    if (!(exponent >= 0.0) || !std::isfinite(exponent))
        throw std::invalid_argument("Zipf exponent must be finite and >= 0");
    if (support_max < 1) throw std::invalid_argument("Zipf support must be >= 1");
    cum_.resize(static_cast<std::size_t>(support_max) + 1);
    cum_[0] = 0.0;
    long double acc = 0.0L;
    for (int k = 1; k <= support_max; ++k) {
        acc += std::pow(static_cast<long double>(k), static_cast<long double>(-exponent));
        cum_[static_cast<std::size_t>(k)] = static_cast<double>(acc);
    }
}

double ZipfPmf::prob(int k) const {
    if (k < 1 || k > support_max_) throw std::invalid_argument("outside Zipf support");
    return std::pow(static_cast<double>(k), -exponent_) / cum_.back();
}

double ZipfPmf::prob_conditional(int k, int q) const {
    if (q < 1 || q > support_max_) throw std::invalid_argument("outside Zipf support");
    if (k < 1 || k > q) throw std::invalid_argument("outside Zipf support");
    return std::pow(static_cast<double>(k), -exponent_) / cum_[static_cast<std::size_t>(q)];
}

int ZipfPmf::locate(double target, int hi) const {
    // smallest k in [1, hi] with cum_[k] > target
    int lo = 1;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        if (cum_[static_cast<std::size_t>(mid)] > target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

int ZipfPmf::sample(RngStream& rng) const {
    return locate(rng.next_unit() * cum_.back(), support_max_);
}

int ZipfPmf::sample_prefix(int q, RngStream& rng) const {
    if (q < 1 || q > support_max_) throw std::invalid_argument("outside Zipf support");
    return locate(rng.next_unit() * cum_[static_cast<std::size_t>(q)], q);
}

AsymptoticOrder zipf_tail_class(double exponent) {
    if (!(exponent >= 0.0)) throw std::invalid_argument("Zipf exponent must be >= 0");
    const Rational a = rational_from_double(exponent);
    if (a > Rational(1)) return AsymptoticOrder{Rational(0), Rational(0), BoundKind::Theta};
    if (a == Rational(1)) return AsymptoticOrder{Rational(0), Rational(-1), BoundKind::Theta};
    return AsymptoticOrder{a - Rational(1), Rational(0), BoundKind::Theta};
}

} // namespace netload
