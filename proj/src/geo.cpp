#include "netload/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace netload {

GeoSummary summarize_geo(std::span<const std::pair<double, double>> points, int grid, bool lat_lon,
                         double cv_threshold) {
    if (grid < 1) throw std::invalid_argument("grid must be >= 1");
    if (points.empty()) throw std::invalid_argument("no points to summarize");

    std::vector<std::pair<double, double>> mapped(points.begin(), points.end());
    if (lat_lon) {
        double mean_lat = 0.0;
        for (const auto& [lat, lon] : points) mean_lat += lat;
        mean_lat /= static_cast<double>(points.size());
        const double squeeze = std::cos(mean_lat * std::numbers::pi / 180.0);
        for (auto& [lat, lon] : mapped) {
            const double x = lon * squeeze;
            const double y = lat;
            lat = x;
            lon = y;
        }
    }

    double min_x = mapped[0].first, max_x = mapped[0].first;
    double min_y = mapped[0].second, max_y = mapped[0].second;
    for (const auto& [x, y] : mapped) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    const double w = max_x - min_x;
    const double h = max_y - min_y;

    GeoSummary out;
    out.grid = grid;
    out.threshold = cv_threshold;
    out.counts.assign(static_cast<std::size_t>(grid) * grid, 0);
    auto bin = [grid](double v, double lo, double extent) {
        if (extent <= 0.0) return 0;
        const int c = static_cast<int>((v - lo) / extent * grid);
        return std::clamp(c, 0, grid - 1);
    };
    for (const auto& [x, y] : mapped) {
        const int cx = bin(x, min_x, w);
        const int cy = bin(y, min_y, h);
        ++out.counts[static_cast<std::size_t>(cy) * grid + cx];
        ++out.total;
    }

    const double mean = static_cast<double>(out.total) / static_cast<double>(grid * grid);
    double var = 0.0;
    for (long long c : out.counts) {
        const double d = static_cast<double>(c) - mean;
        var += d * d;
    }
    var /= static_cast<double>(grid * grid);
    out.cv = mean > 0.0 ? std::sqrt(var) / mean : 0.0;
    out.uniform_verdict = out.cv <= cv_threshold;
    return out;
}

} // namespace netload
