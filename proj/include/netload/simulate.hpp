#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netload/network.hpp"
#include "netload/params.hpp"

namespace netload {

struct SimConfig {
    int n = 0;
    ExponentParams params;
    LambdaClass lambda = LambdaClass::Const;
    int replicates = 1;
    std::uint64_t seed = 0;
    int q_const_threshold = 8; // sessions with q <= threshold count as constant influence
    int threads = 0;           // 0 = all hardware threads
};

// One Monte Carlo replicate. emst_sum splits into the constant-influence and
// heavy-influence slices; total_load is lambda(n) times emst_sum.
struct TrafficSample {
    int n = 0;
    std::uint64_t seed = 0; // replicate stream seed
    double total_load = 0.0;
    double emst_sum = 0.0;
    double psi_const = 0.0;
    double psi_large = 0.0;
    long long sum_r = 0;
    double wall_time = 0.0; // seconds, excluded from determinism guarantees
};

// Seed-splitting contract: replicate rep runs on rep_seed = mix64(seed + rep);
// within a replicate the network placement uses stream rep_seed and session k
// (1-based) uses stream rep_seed ^ k. Each session draws q, then r, then its
// anchor coordinates, so a run is bit-identical for any thread count.
//
// Per session the measured tree is over {source position} ∪ {anchors of the
// r chosen destinations}; anchors beyond the first r never affect the
// statistic and are not materialized here.
std::vector<TrafficSample> simulate(const SimConfig& cfg);

// (q, r) draws only, on exactly the streams simulate would use; sum_r here
// equals simulate's sum_r. For destination-count scaling checks.
struct CountSample {
    int n = 0;
    std::uint64_t seed = 0;
    long long sum_q = 0;
    long long sum_r = 0;
};
std::vector<CountSample> simulate_counts(const SimConfig& cfg);

// lambda_value times the tree length of the session's traffic geometry.
double session_load(const Session& session, const Network& net, double lambda_value);

inline constexpr const char* kTrafficCsvHeader =
    "n,seed,total_load,emst_sum,psi_const,psi_large,sum_r,wall_time";

std::string traffic_csv_row(const TrafficSample& sample);

} // namespace netload
