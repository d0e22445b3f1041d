#include "netload/torus.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace netload {

TorusDomain TorusDomain::from_node_count(int n) {
    if (n < 1) throw std::invalid_argument("torus domain needs n >= 1");
    return TorusDomain{std::sqrt(static_cast<double>(n)), n};
}

Point TorusDomain::wrap(double x, double y) const {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("non-finite coordinate");
    x -= side * std::floor(x / side);
    y -= side * std::floor(y / side);
    // floor rounding can land exactly on side
    if (x >= side) x -= side;
    if (y >= side) y -= side;
    return Point{x, y};
}

double torus_distance_sq(const Point& a, const Point& b, const TorusDomain& domain) {
    double dx = std::fabs(a.x - b.x);
    double dy = std::fabs(a.y - b.y);
    dx = std::min(dx, domain.side - dx);
    dy = std::min(dy, domain.side - dy);
    return dx * dx + dy * dy;
}

double torus_distance(const Point& a, const Point& b, const TorusDomain& domain) {
    return std::sqrt(torus_distance_sq(a, b, domain));
}

GridIndex::GridIndex(std::span<const Point> nodes, const TorusDomain& domain) {
    const int n = static_cast<int>(nodes.size());
    cells_per_axis_ = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(std::max(n, 1))))));
    cell_size_ = domain.side / cells_per_axis_;
    cells_.assign(static_cast<std::size_t>(cells_per_axis_) * cells_per_axis_, {});
    for (int idx = 0; idx < n; ++idx) {
        const int cx = cell_of(nodes[idx].x);
        const int cy = cell_of(nodes[idx].y);
        cells_[static_cast<std::size_t>(cy) * cells_per_axis_ + cx].push_back(idx);
    }
}

int GridIndex::cell_of(double coord) const {
    int c = static_cast<int>(coord / cell_size_);
    if (c >= cells_per_axis_) c = cells_per_axis_ - 1;
    if (c < 0) c = 0;
    return c;
}

int GridIndex::nearest(const Point& p, std::span<const Point> nodes,
                       const TorusDomain& domain) const {
    if (nodes.empty()) throw std::invalid_argument("empty network");
    const int g = cells_per_axis_;
    const int cx = cell_of(p.x);
    const int cy = cell_of(p.y);

    double best_sq = std::numeric_limits<double>::infinity();
    int best_idx = -1;
    auto scan_cell = [&](int x, int y) {
        x %= g;
        if (x < 0) x += g;
        y %= g;
        if (y < 0) y += g;
        for (int idx : cells_[static_cast<std::size_t>(y) * g + x]) {
            const double d = torus_distance_sq(p, nodes[idx], domain);
            if (d < best_sq || (d == best_sq && idx < best_idx)) {
                best_sq = d;
                best_idx = idx;
            }
        }
    };

    // Expanding Chebyshev rings. Any point in ring m+1 or beyond lies at
    // least m*cell_size away, so the current best is final once it beats
    // that bound. Rings up to g/2 cover the whole torus (duplicate visits
    // past the wraparound midpoint are harmless).
    const int max_ring = g / 2 + 1;
    for (int m = 0; m <= max_ring; ++m) {
        if (m == 0) {
            scan_cell(cx, cy);
        } else {
            for (int dx = -m; dx <= m; ++dx) {
                scan_cell(cx + dx, cy - m);
                scan_cell(cx + dx, cy + m);
            }
            for (int dy = -m + 1; dy <= m - 1; ++dy) {
                scan_cell(cx - m, cy + dy);
                scan_cell(cx + m, cy + dy);
            }
        }
        if (best_idx >= 0) {
            const double reach = static_cast<double>(m) * cell_size_;
            if (best_sq <= reach * reach) break;
        }
    }
    return best_idx;
}

int nearest_node(const Point& p, const GridIndex& index, std::span<const Point> nodes,
                 const TorusDomain& domain) {
    return index.nearest(p, nodes, domain);
}

} // namespace netload
