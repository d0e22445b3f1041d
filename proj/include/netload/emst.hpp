#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "netload/torus.hpp"

namespace netload {

// Session point sets stay small at desk scale; the dense O(m^2) Prim is the
// default and a hard cap guards runtime.
inline constexpr int kEmstMaxPoints = 50000;
// Kruskal materializes all m(m-1)/2 edges, so its cap is tighter.
inline constexpr int kKruskalMaxPoints = 5000;

struct EmstResult {
    double total_length = 0.0;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges; // m-1 pairs, (min,max) per edge
};

// Exact MST of the complete graph under the torus metric. Ties broken by
// smallest vertex index, so edge lists are deterministic; total length is
// unique regardless. Lengths accumulate with compensated summation.
EmstResult emst_prim(std::span<const Point> points, const TorusDomain& domain);

// Independent oracle: sort all pairs, union-find. Same total length as
// emst_prim on any input (the tree may differ under ties, the length may not).
EmstResult emst_kruskal(std::span<const Point> points, const TorusDomain& domain);

// Total length only; the hot path for the simulator.
double emst_length(std::span<const Point> points, const TorusDomain& domain);

// Mean M_n / sqrt(n) over `replicates` uniform draws on the unit torus, one
// entry per n. Under the sqrt-growth law for uniform points the ratios are
// flat in n up to Monte Carlo noise.
std::vector<std::pair<int, double>> steele_ratio_check(std::span<const int> n_values,
                                                       std::uint64_t seed, int replicates = 8);

} // namespace netload
