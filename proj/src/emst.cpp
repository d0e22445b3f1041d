#include "netload/emst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "netload/rng.hpp"

namespace netload {

namespace {

// Neumaier compensated sum
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

struct UnionFind {
    std::vector<std::int32_t> parent;
    std::vector<std::int32_t> size;

    explicit UnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]]; // path halving
            v = parent[v];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

} // namespace

EmstResult emst_prim(std::span<const Point> points, const TorusDomain& domain) {
    const int m = static_cast<int>(points.size());
    if (m == 0) throw std::invalid_argument("empty point set");
    if (m > kEmstMaxPoints)
        throw std::invalid_argument("point set exceeds the EMST cap of 50000; split the session");

    EmstResult result;
    if (m == 1) return result;
    result.edges.reserve(static_cast<std::size_t>(m) - 1);

    // Squared keys: the minimizer is the same and the sqrt happens once per
    // accepted edge. Ties go to the smallest candidate vertex, and parents
    // only change on strict improvement.
    std::vector<double> key_sq(static_cast<std::size_t>(m),
                               std::numeric_limits<double>::infinity());
    std::vector<std::int32_t> parent(static_cast<std::size_t>(m), 0);
    std::vector<char> in_tree(static_cast<std::size_t>(m), 0);
    in_tree[0] = 1;
    for (int v = 1; v < m; ++v) key_sq[v] = torus_distance_sq(points[0], points[v], domain);

    KahanSum total;
    for (int step = 1; step < m; ++step) {
        int pick = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int v = 1; v < m; ++v) {
            if (!in_tree[v] && key_sq[v] < best) {
                best = key_sq[v];
                pick = v;
            }
        }
        in_tree[pick] = 1;
        total.add(std::sqrt(best));
        result.edges.emplace_back(std::min<std::int32_t>(parent[pick], pick),
                                  std::max<std::int32_t>(parent[pick], pick));
        const Point& p = points[pick];
        for (int v = 1; v < m; ++v) {
            if (in_tree[v]) continue;
            const double d = torus_distance_sq(p, points[v], domain);
            if (d < key_sq[v]) {
                key_sq[v] = d;
                parent[v] = pick;
            }
        }
    }
    result.total_length = total.value();
    return result;
}

double emst_length(std::span<const Point> points, const TorusDomain& domain) {
    const int m = static_cast<int>(points.size());
    if (m == 0) throw std::invalid_argument("empty point set");
    if (m > kEmstMaxPoints)
        throw std::invalid_argument("point set exceeds the EMST cap of 50000; split the session");
    if (m == 1) return 0.0;
    if (m == 2) return torus_distance(points[0], points[1], domain);

    // Compacted frontier: slots [0, live) hold the candidates still outside
    // the tree, so every scan touches only what is left. Ties resolve by the
    // original point index, keeping the accumulation order deterministic.
    const double side = domain.side;
    std::vector<double> xs(static_cast<std::size_t>(m - 1));
    std::vector<double> ys(static_cast<std::size_t>(m - 1));
    std::vector<double> key_sq(static_cast<std::size_t>(m - 1));
    std::vector<std::int32_t> idx(static_cast<std::size_t>(m - 1));
    for (int v = 1; v < m; ++v) {
        xs[v - 1] = points[v].x;
        ys[v - 1] = points[v].y;
        key_sq[v - 1] = torus_distance_sq(points[0], points[v], domain);
        idx[v - 1] = v;
    }

    KahanSum total;
    int live = m - 1;
    while (live > 0) {
        int pick = 0;
        double best = key_sq[0];
        std::int32_t best_idx = idx[0];
        for (int slot = 1; slot < live; ++slot) {
            const double k = key_sq[slot];
            if (k < best || (k == best && idx[slot] < best_idx)) {
                best = k;
                pick = slot;
                best_idx = idx[slot];
            }
        }
        total.add(std::sqrt(best));
        const double px = xs[pick];
        const double py = ys[pick];
        --live;
        xs[pick] = xs[live];
        ys[pick] = ys[live];
        key_sq[pick] = key_sq[live];
        idx[pick] = idx[live];
        for (int slot = 0; slot < live; ++slot) {
            double dx = std::fabs(px - xs[slot]);
            double dy = std::fabs(py - ys[slot]);
            dx = std::min(dx, side - dx);
            dy = std::min(dy, side - dy);
            const double d = dx * dx + dy * dy;
            if (d < key_sq[slot]) key_sq[slot] = d;
        }
    }
    return total.value();
}

EmstResult emst_kruskal(std::span<const Point> points, const TorusDomain& domain) {
    const int m = static_cast<int>(points.size());
    if (m == 0) throw std::invalid_argument("empty point set");
    if (m > kKruskalMaxPoints)
        throw std::invalid_argument("point set exceeds the Kruskal cap of 5000; use emst_prim");

    EmstResult result;
    if (m == 1) return result;

    struct Edge {
        double w;
        std::int32_t a;
        std::int32_t b;
    };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            edges.push_back({torus_distance(points[a], points[b], domain), a, b});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        if (x.w != y.w) return x.w < y.w;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });

    UnionFind uf(m);
    KahanSum total;
    result.edges.reserve(static_cast<std::size_t>(m) - 1);
    for (const Edge& e : edges) {
        if (uf.unite(e.a, e.b)) {
            total.add(e.w);
            result.edges.emplace_back(e.a, e.b);
            if (static_cast<int>(result.edges.size()) == m - 1) break;
        }
    }
    result.total_length = total.value();
    return result;
}

std::vector<std::pair<int, double>> steele_ratio_check(std::span<const int> n_values,
                                                       std::uint64_t seed, int replicates) {
    if (replicates < 1) throw std::invalid_argument("steele check needs >= 1 replicate");
    for (std::size_t j = 1; j < n_values.size(); ++j)
        if (n_values[j] <= n_values[j - 1])
            throw std::invalid_argument("steele check needs increasing n values");

    const TorusDomain unit = TorusDomain::unit();
    std::vector<std::pair<int, double>> out;
    out.reserve(n_values.size());
    std::uint64_t stream_id = 0;
    for (int n : n_values) {
        if (n < 64) throw std::invalid_argument("steele check needs n >= 64");
        double acc = 0.0;
        for (int rep = 0; rep < replicates; ++rep) {
            RngStream rng(mix64(seed + stream_id++));
            std::vector<Point> pts(static_cast<std::size_t>(n));
            for (auto& p : pts) p = Point{rng.next_unit(), rng.next_unit()};
            acc += emst_length(pts, unit) / std::sqrt(static_cast<double>(n));
        }
        out.emplace_back(n, acc / replicates);
    }
    return out;
}

} // namespace netload
