#include "netload/network.hpp"

#include <stdexcept>

namespace netload {

std::vector<Point> Session::session_points(const Network& net) const {
    std::vector<Point> pts;
    pts.reserve(anchors.size() + 1);
    pts.push_back(net.nodes[static_cast<std::size_t>(source)]);
    pts.insert(pts.end(), anchors.begin(), anchors.end());
    return pts;
}

std::vector<Point> Session::traffic_points(const Network& net) const {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(r) + 1);
    pts.push_back(net.nodes[static_cast<std::size_t>(source)]);
    pts.insert(pts.end(), anchors.begin(), anchors.begin() + r);
    return pts;
}

Network generate_network(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("degenerate network");
    Network net;
    net.domain = TorusDomain::from_node_count(n);
    net.seed = seed;
    net.nodes.resize(static_cast<std::size_t>(n));
    RngStream rng(seed);
    for (auto& p : net.nodes)
        p = Point{rng.next_unit() * net.domain.side, rng.next_unit() * net.domain.side};
    net.index = GridIndex(net.nodes, net.domain);
    return net;
}

Session generate_session(const Network& net, std::int32_t source, const ZipfPmf& q_pmf,
                         const ZipfPmf& r_pmf,
                         const std::function<Point(RngStream&)>& anchor_fn,
                         std::uint64_t session_seed) {
    if (source < 0 || source >= static_cast<std::int32_t>(net.nodes.size()))
        throw std::invalid_argument("session source outside network");

    RngStream rng(session_seed);
    Session s;
    s.source = source;
    s.q = q_pmf.sample(rng);
    s.r = r_pmf.sample_prefix(s.q, rng);
    s.anchors.reserve(static_cast<std::size_t>(s.q));
    s.friends.reserve(static_cast<std::size_t>(s.q));
    for (int j = 0; j < s.q; ++j) {
        const Point a = anchor_fn(rng);
        s.anchors.push_back(a);
        s.friends.push_back(net.index.nearest(a, net.nodes, net.domain));
    }
    s.destinations.assign(s.friends.begin(), s.friends.begin() + s.r);
    return s;
}

Session generate_session(const Network& net, std::int32_t source, const ExponentParams& params,
                         std::uint64_t session_seed) {
    validate_params(params);
    if (params.geography != 0.0)
        throw std::invalid_argument("only uniform geography (g = 0) is supported");
    const int n = static_cast<int>(net.nodes.size());
    const ZipfPmf q_pmf(params.influence, n - 1);
    const ZipfPmf r_pmf(params.destination, n - 1);
    const auto table = std::make_shared<RadialTable>(params.separation, net.domain);
    const RadialSampler sampler(net.nodes[static_cast<std::size_t>(source)], table);
    return generate_session(net, source, q_pmf, r_pmf,
                            [&sampler](RngStream& r) { return sampler.sample(r); },
                            session_seed);
}

std::vector<Session> generate_sessions(const Network& net, const ExponentParams& params,
                                       std::uint64_t master_seed) {
    validate_params(params);
    if (params.geography != 0.0)
        throw std::invalid_argument("only uniform geography (g = 0) is supported");
    const int n = static_cast<int>(net.nodes.size());
    const ZipfPmf q_pmf(params.influence, n - 1);
    const ZipfPmf r_pmf(params.destination, n - 1);
    const auto table = std::make_shared<RadialTable>(params.separation, net.domain);

    std::vector<Session> sessions;
    sessions.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const RadialSampler sampler(net.nodes[static_cast<std::size_t>(k)], table);
        sessions.push_back(generate_session(
            net, k, q_pmf, r_pmf, [&sampler](RngStream& r) { return sampler.sample(r); },
            master_seed ^ static_cast<std::uint64_t>(k + 1)));
    }
    return sessions;
}

double mean_anchor_snap_distance(const Network& net, std::span<const Session> sessions) {
    long long count = 0;
    double sum = 0.0;
    for (const Session& s : sessions) {
        for (std::size_t j = 0; j < s.anchors.size(); ++j) {
            sum += torus_distance(s.anchors[j],
                                  net.nodes[static_cast<std::size_t>(s.friends[j])], net.domain);
            ++count;
        }
    }
    if (count == 0) throw std::invalid_argument("no sessions");
    return sum / static_cast<double>(count);
}

nlohmann::json network_to_json(const Network& net, std::span<const Session> sessions) {
    nlohmann::json doc;
    doc["n"] = net.nodes.size();
    doc["side"] = net.domain.side;
    doc["seed"] = net.seed;
    auto& nodes = doc["nodes"] = nlohmann::json::array();
    for (const Point& p : net.nodes) nodes.push_back({p.x, p.y});
    auto& sess = doc["sessions"] = nlohmann::json::array();
    for (const Session& s : sessions) {
        nlohmann::json js;
        js["source"] = s.source;
        js["q"] = s.q;
        js["r"] = s.r;
        auto& anchors = js["anchors"] = nlohmann::json::array();
        for (const Point& a : s.anchors) anchors.push_back({a.x, a.y});
        js["friends"] = s.friends;
        js["destinations"] = s.destinations;
        sess.push_back(std::move(js));
    }
    return doc;
}

std::pair<Network, std::vector<Session>> network_from_json(const nlohmann::json& doc) {
    Network net;
    const int n = doc.at("n").get<int>();
    if (n < 2) throw std::invalid_argument("degenerate network");
    net.domain = TorusDomain{doc.at("side").get<double>(), n};
    if (!(net.domain.side > 0.0)) throw std::runtime_error("non-positive torus side");
    net.seed = doc.at("seed").get<std::uint64_t>();
    net.nodes.reserve(static_cast<std::size_t>(n));
    for (const auto& p : doc.at("nodes"))
        net.nodes.push_back(net.domain.wrap(p.at(0).get<double>(), p.at(1).get<double>()));
    if (static_cast<int>(net.nodes.size()) != n)
        throw std::runtime_error("node count does not match n");
    net.index = GridIndex(net.nodes, net.domain);

    std::vector<Session> sessions;
    for (const auto& js : doc.at("sessions")) {
        Session s;
        s.source = js.at("source").get<std::int32_t>();
        s.q = js.at("q").get<int>();
        s.r = js.at("r").get<int>();
        for (const auto& a : js.at("anchors"))
            s.anchors.push_back(net.domain.wrap(a.at(0).get<double>(), a.at(1).get<double>()));
        s.friends = js.at("friends").get<std::vector<std::int32_t>>();
        s.destinations = js.at("destinations").get<std::vector<std::int32_t>>();
        if (static_cast<int>(s.anchors.size()) != s.q ||
            static_cast<int>(s.friends.size()) != s.q ||
            static_cast<int>(s.destinations.size()) != s.r || s.r > s.q)
            throw std::runtime_error("inconsistent session record");
        sessions.push_back(std::move(s));
    }
    return {std::move(net), std::move(sessions)};
}

} // namespace netload
