#pragma once

#include <span>
#include <utility>
#include <vector>

namespace netload {

// Grid-density summary of a point cloud. CV is the population std/mean of the
// G x G cell counts; a Poisson-uniform cloud gives CV ~ 1/sqrt(points per
// cell), so a small CV is consistent with uniform placement (g = 0).
struct GeoSummary {
    int grid = 0;
    std::vector<long long> counts; // G*G, row-major
    long long total = 0;
    double cv = 0.0;
    double threshold = 0.5;
    bool uniform_verdict = false;
};

// lat_lon applies the equirectangular heuristic x = lon * cos(mean lat),
// y = lat before binning; a declared approximation, fine for city-scale
// extracts.
GeoSummary summarize_geo(std::span<const std::pair<double, double>> points, int grid, bool lat_lon,
                         double cv_threshold = 0.5);

} // namespace netload
