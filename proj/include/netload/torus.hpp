#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace netload {

// Position on the torus. Coordinates are reduced to [0, side) on construction
// (see TorusDomain::wrap); plain aggregate otherwise.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Square deployment region of area n with wraparound edges. side = sqrt(n),
// so the node density is 1 when the region holds n nodes.
struct TorusDomain {
    double side = 1.0;
    int n_hint = 1; // the n that produced side

    static TorusDomain from_node_count(int n);
    static TorusDomain unit() { return TorusDomain{1.0, 1}; }

    Point wrap(double x, double y) const;
};

double torus_distance(const Point& a, const Point& b, const TorusDomain& domain);

// Squared distance; same minimization as torus_distance without the sqrt.
double torus_distance_sq(const Point& a, const Point& b, const TorusDomain& domain);

// Uniform grid over the torus for nearest-node queries. ceil(sqrt(n)) cells
// per axis, so cells hold O(1) nodes under uniform placement. Immutable after
// construction; queries are read-only and may run concurrently.
class GridIndex {
public:
    GridIndex() = default;
    GridIndex(std::span<const Point> nodes, const TorusDomain& domain);

    // Index of the node minimizing torus_distance to p; ties go to the
    // smallest index. Exact: agrees with a linear scan on every query.
    int nearest(const Point& p, std::span<const Point> nodes, const TorusDomain& domain) const;

    double cell_size() const { return cell_size_; }
    int cells_per_axis() const { return cells_per_axis_; }
    const std::vector<std::vector<std::int32_t>>& cells() const { return cells_; }

private:
    int cell_of(double coord) const;

    double cell_size_ = 0.0;
    int cells_per_axis_ = 0;
    std::vector<std::vector<std::int32_t>> cells_;
};

int nearest_node(const Point& p, const GridIndex& index, std::span<const Point> nodes,
                 const TorusDomain& domain);

} // namespace netload
