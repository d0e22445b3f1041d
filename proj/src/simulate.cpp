#include "netload/simulate.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "netload/emst.hpp"
#include "netload/parallel.hpp"

namespace netload {

namespace {

void validate_config(const SimConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("degenerate network");
    if (cfg.replicates < 1) throw std::invalid_argument("simulate needs >= 1 replicate");
    if (cfg.q_const_threshold < 1) throw std::invalid_argument("q threshold must be >= 1");
    validate_params(cfg.params);
    if (cfg.params.geography != 0.0)
        throw std::invalid_argument("only uniform geography (g = 0) is supported");
}

// Ordered Neumaier reduction; bit-stable regardless of how the per-session
// values were produced.
double ordered_sum(const std::vector<double>& values) {
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

} // namespace

std::vector<TrafficSample> simulate(const SimConfig& cfg) {
    validate_config(cfg);
    const int n = cfg.n;
    const ZipfPmf q_pmf(cfg.params.influence, n - 1);
    const ZipfPmf r_pmf(cfg.params.destination, n - 1);
    const double lambda = lambda_eval(cfg.lambda, n);

    // the radial law depends only on (s, n); one table serves all replicates
    const auto table =
        std::make_shared<const RadialTable>(cfg.params.separation, TorusDomain::from_node_count(n));

    std::vector<TrafficSample> out;
    out.reserve(static_cast<std::size_t>(cfg.replicates));
    for (int rep = 0; rep < cfg.replicates; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::uint64_t rep_seed = mix64(cfg.seed + static_cast<std::uint64_t>(rep));
        const Network net = generate_network(n, rep_seed);

        std::vector<double> lengths(static_cast<std::size_t>(n));
        std::vector<int> qs(static_cast<std::size_t>(n));
        std::vector<int> rs(static_cast<std::size_t>(n));
        parallel_for(0, n, cfg.threads, [&](int k) {
            RngStream rng(rep_seed ^ static_cast<std::uint64_t>(k + 1));
            const int q = q_pmf.sample(rng);
            const int r = r_pmf.sample_prefix(q, rng);
            const RadialSampler sampler(net.nodes[static_cast<std::size_t>(k)], table);
            std::vector<Point> pts;
            pts.reserve(static_cast<std::size_t>(r) + 1);
            pts.push_back(net.nodes[static_cast<std::size_t>(k)]);
            for (int j = 0; j < r; ++j) pts.push_back(sampler.sample(rng));
            lengths[static_cast<std::size_t>(k)] = emst_length(pts, net.domain);
            qs[static_cast<std::size_t>(k)] = q;
            rs[static_cast<std::size_t>(k)] = r;
        });

        TrafficSample sample;
        sample.n = n;
        sample.seed = rep_seed;
        std::vector<double> small, large;
        small.reserve(lengths.size());
        for (int k = 0; k < n; ++k) {
            (qs[static_cast<std::size_t>(k)] <= cfg.q_const_threshold ? small : large)
                .push_back(lengths[static_cast<std::size_t>(k)]);
            sample.sum_r += rs[static_cast<std::size_t>(k)];
        }
        sample.psi_const = ordered_sum(small);
        sample.psi_large = ordered_sum(large);
        sample.emst_sum = ordered_sum(lengths);
        sample.total_load = lambda * sample.emst_sum;
        sample.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(sample);
    }
    return out;
}

std::vector<CountSample> simulate_counts(const SimConfig& cfg) {
    validate_config(cfg);
    const int n = cfg.n;
    const ZipfPmf q_pmf(cfg.params.influence, n - 1);
    const ZipfPmf r_pmf(cfg.params.destination, n - 1);

    std::vector<CountSample> out;
    out.reserve(static_cast<std::size_t>(cfg.replicates));
    for (int rep = 0; rep < cfg.replicates; ++rep) {
        const std::uint64_t rep_seed = mix64(cfg.seed + static_cast<std::uint64_t>(rep));
        CountSample sample;
        sample.n = n;
        sample.seed = rep_seed;
        for (int k = 0; k < n; ++k) {
            RngStream rng(rep_seed ^ static_cast<std::uint64_t>(k + 1));
            const int q = q_pmf.sample(rng);
            const int r = r_pmf.sample_prefix(q, rng);
            sample.sum_q += q;
            sample.sum_r += r;
        }
        out.push_back(sample);
    }
    return out;
}

double session_load(const Session& session, const Network& net, double lambda_value) {
    const std::vector<Point> pts = session.traffic_points(net);
    return lambda_value * emst_length(pts, net.domain);
}

std::string traffic_csv_row(const TrafficSample& s) {
    char buf[320];
    std::snprintf(buf, sizeof(buf), "%d,%llu,%.17g,%.17g,%.17g,%.17g,%lld,%.17g", s.n,
                  static_cast<unsigned long long>(s.seed), s.total_load, s.emst_sum, s.psi_const,
                  s.psi_large, s.sum_r, s.wall_time);
    return std::string(buf);
}

} // namespace netload
