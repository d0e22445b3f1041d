#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <json.hpp>

#include "netload/params.hpp"
#include "netload/radial.hpp"
#include "netload/rng.hpp"
#include "netload/torus.hpp"
#include "netload/zipf.hpp"

namespace netload {

// Exactly n uniform nodes on the torus of side sqrt(n), plus the grid index
// over them. Immutable after generation.
struct Network {
    TorusDomain domain;
    std::vector<Point> nodes;
    GridIndex index;
    std::uint64_t seed = 0;
};

// One dissemination session: the source picks q friends by snapping q anchor
// points to their nearest nodes, then sends to the first r of them. Anchors
// are kept because the traffic statistic is measured over anchor geometry.
struct Session {
    std::int32_t source = 0;
    int q = 0;
    int r = 0;
    std::vector<Point> anchors;              // length q
    std::vector<std::int32_t> friends;       // length q, friends[j] nearest to anchors[j]
    std::vector<std::int32_t> destinations;  // the first r friends

    // {source position} ∪ all q anchors
    std::vector<Point> session_points(const Network& net) const;
    // {source position} ∪ anchors of the r chosen destinations
    std::vector<Point> traffic_points(const Network& net) const;
};

Network generate_network(int n, std::uint64_t seed);

// Per-session draw order is fixed: q, then r, then anchors. The simulator
// consumes the same stream prefix when it samples only the r traffic anchors.
Session generate_session(const Network& net, std::int32_t source, const ExponentParams& params,
                         std::uint64_t session_seed);

// Variant with the stochastic pieces injected; the q/r pmfs and the radial
// table are shared across sessions by generate_sessions.
Session generate_session(const Network& net, std::int32_t source, const ZipfPmf& q_pmf,
                         const ZipfPmf& r_pmf,
                         const std::function<Point(RngStream&)>& anchor_fn,
                         std::uint64_t session_seed);

// One session per node, session k (1-based) on stream master_seed ^ k.
std::vector<Session> generate_sessions(const Network& net, const ExponentParams& params,
                                       std::uint64_t master_seed);

// Mean torus distance between each anchor and its snapped friend node.
double mean_anchor_snap_distance(const Network& net, std::span<const Session> sessions);

nlohmann::json network_to_json(const Network& net, std::span<const Session> sessions);
std::pair<Network, std::vector<Session>> network_from_json(const nlohmann::json& doc);

} // namespace netload
