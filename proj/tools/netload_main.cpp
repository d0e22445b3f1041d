// netload: spatial-network traffic-load scaling toolkit.
//
// Subcommands: gen, simulate, theory, scaling, fit, geo. Every run is fully
// determined by its flags and --seed; commands that write files also write a
// <out>.manifest with the exact configuration.

#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netload/csv.hpp"
#include "netload/emst.hpp"
#include "netload/fit.hpp"
#include "netload/geo.hpp"
#include "netload/manifest.hpp"
#include "netload/network.hpp"
#include "netload/order.hpp"
#include "netload/simulate.hpp"
#include "netload/theory.hpp"

namespace {

using namespace netload;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitInvariant = 4;

struct CommonOpts {
    double i = 0.0, s = 0.0, d = 0.0;
    std::string lambda = "const";
    std::uint64_t seed = 0;
    bool json = false;
};

ExponentParams make_params(const CommonOpts& o) {
    return ExponentParams{0.0, o.i, o.s, o.d};
}

void add_exponent_flags(CLI::App* cmd, CommonOpts& o, bool with_lambda) {
    // flat key=value config mirroring the flags; explicit flags override it
    cmd->set_config("--config", "", "config file with flat key=value lines");
    cmd->add_option("--i", o.i, "influence exponent")->check(CLI::NonNegativeNumber);
    cmd->add_option("--s", o.s, "separation exponent")->check(CLI::NonNegativeNumber);
    cmd->add_option("--d", o.d, "destination exponent")->check(CLI::NonNegativeNumber);
    if (with_lambda)
        cmd->add_option("--lambda", o.lambda, "data arrival rate class")
            ->check(CLI::IsMember({"const", "sqrt", "linear"}));
}

std::vector<std::pair<std::string, std::string>> snapshot(
    std::initializer_list<std::pair<std::string, std::string>> kv) {
    return {kv.begin(), kv.end()};
}

void emit_manifest(const std::string& command, std::uint64_t seed,
                   std::vector<std::pair<std::string, std::string>> config,
                   const std::string& out_path, const std::string& started) {
    RunManifest m;
    m.command = command;
    m.seed = seed;
    m.config = std::move(config);
    m.outputs = {out_path};
    m.started = started;
    m.ended = iso8601_now();
    write_manifest(m, out_path + ".manifest");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int cmd_gen(int n, const CommonOpts& o, const std::string& out_path) {
    const std::string started = iso8601_now();
    const Network net = generate_network(n, o.seed);
    const std::vector<Session> sessions = generate_sessions(net, make_params(o), o.seed);
    const nlohmann::json doc = network_to_json(net, sessions);
    write_text_file(out_path, doc.dump());
    emit_manifest("gen", o.seed,
                  snapshot({{"config.n", std::to_string(n)},
                            {"config.i", format_double(o.i)},
                            {"config.s", format_double(o.s)},
                            {"config.d", format_double(o.d)}}),
                  out_path, started);
    if (o.json) {
        nlohmann::json summary{{"command", "gen"}, {"n", n}, {"sessions", sessions.size()},
                               {"out", out_path}};
        std::cout << summary.dump() << "\n";
    } else {
        std::cout << "wrote " << out_path << " (" << n << " nodes, " << sessions.size()
                  << " sessions)\n";
    }
    return 0;
}

int cmd_simulate(const std::vector<int>& n_grid, const CommonOpts& o, int replicates, int threads,
                 int q_threshold, const std::string& out_path) {
    const std::string started = iso8601_now();
    std::string csv = std::string(kTrafficCsvHeader) + "\n";
    for (int n : n_grid) {
        SimConfig cfg;
        cfg.n = n;
        cfg.params = make_params(o);
        cfg.lambda = lambda_from_name(o.lambda);
        cfg.replicates = replicates;
        cfg.seed = o.seed;
        cfg.q_const_threshold = q_threshold;
        cfg.threads = threads;
        for (const TrafficSample& s : simulate(cfg)) csv += traffic_csv_row(s) + "\n";
    }
    write_text_file(out_path, csv);
    std::ostringstream grid;
    for (std::size_t j = 0; j < n_grid.size(); ++j) grid << (j ? "," : "") << n_grid[j];
    emit_manifest("simulate", o.seed,
                  snapshot({{"config.n_grid", grid.str()},
                            {"config.i", format_double(o.i)},
                            {"config.s", format_double(o.s)},
                            {"config.d", format_double(o.d)},
                            {"config.lambda", o.lambda},
                            {"config.replicates", std::to_string(replicates)},
                            {"config.q_threshold", std::to_string(q_threshold)}}),
                  out_path, started);
    if (o.json) {
        nlohmann::json summary{{"command", "simulate"},
                               {"rows", n_grid.size() * static_cast<std::size_t>(replicates)},
                               {"out", out_path}};
        std::cout << summary.dump() << "\n";
    } else {
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_theory(const CommonOpts& o) {
    const LawClass law = classify_law(lambda_from_name(o.lambda), make_params(o));
    if (o.json) {
        nlohmann::json j{{"command", "theory"},
                         {"order", to_string(law.order)},
                         {"law", law_name(law.kind)},
                         {"n_exp", law.order.n_exp.str()},
                         {"log_exp", law.order.log_exp.str()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_string(law.order) << " law=" << law_name(law.kind) << "\n";
    }
    return 0;
}

int cmd_scaling(const std::vector<int>& n_grid, const CommonOpts& o, int replicates, int threads,
                double tolerance, bool counts_only, const std::string& override_order,
                const std::string& out_path) {
    const std::string started = iso8601_now();
    AsymptoticOrder theory;
    bool law_labeled = true;
    if (override_order.empty()) {
        if (counts_only) {
            theory = w_order(o.i, o.d);
        } else {
            const LawClass law = classify_law(lambda_from_name(o.lambda), make_params(o));
            theory = law.order;
            law_labeled = law.kind != LawKind::Other;
        }
    } else {
        // "a[,b]" -> n^a * log(n)^b, for injecting a mismatched theory
        const std::size_t comma = override_order.find(',');
        theory.n_exp = rational_from_double(std::stod(override_order.substr(0, comma)));
        theory.log_exp = comma == std::string::npos
                             ? Rational(0)
                             : rational_from_double(std::stod(override_order.substr(comma + 1)));
        theory.bound = BoundKind::Omega;
    }

    std::vector<std::pair<int, double>> series;
    for (int n : n_grid) {
        SimConfig cfg;
        cfg.n = n;
        cfg.params = make_params(o);
        cfg.lambda = lambda_from_name(o.lambda);
        cfg.replicates = replicates;
        cfg.seed = o.seed;
        cfg.threads = threads;
        double mean = 0.0;
        if (counts_only) {
            for (const CountSample& s : simulate_counts(cfg))
                mean += static_cast<double>(s.sum_r);
        } else {
            for (const TrafficSample& s : simulate(cfg)) mean += s.total_load;
        }
        series.emplace_back(n, mean / replicates);
    }
    const double slope = ratio_slope(series, theory);
    // Law-labeled cells are treated as tight (both sides); otherwise only the
    // lower-bound side is enforced.
    const bool pass = law_labeled ? (slope >= -tolerance && slope <= tolerance)
                                  : (slope >= -tolerance);
    if (o.json) {
        nlohmann::json j{{"command", "scaling"},    {"slope", slope},
                         {"theory", to_string(theory)}, {"tolerance", tolerance},
                         {"two_sided", law_labeled}, {"verdict", pass ? "PASS" : "FAIL"}};
        std::cout << j.dump() << "\n";
    } else {
        std::printf("%s slope=%.4f theory=%s tolerance=%.2f %s\n", pass ? "PASS" : "FAIL", slope,
                    to_string(theory).c_str(), tolerance, law_labeled ? "(two-sided)" : "(lower)");
    }
    if (!out_path.empty()) {
        std::string text = "slope = " + format_double(slope) + "\ntheory = " + to_string(theory) +
                           "\nverdict = " + (pass ? "PASS" : "FAIL") + "\n";
        write_text_file(out_path, text);
        std::ostringstream grid;
        for (std::size_t j = 0; j < n_grid.size(); ++j) grid << (j ? "," : "") << n_grid[j];
        emit_manifest("scaling", o.seed,
                      snapshot({{"config.n_grid", grid.str()},
                                {"config.i", format_double(o.i)},
                                {"config.s", format_double(o.s)},
                                {"config.d", format_double(o.d)},
                                {"config.lambda", o.lambda},
                                {"config.replicates", std::to_string(replicates)},
                                {"config.tolerance", format_double(tolerance)}}),
                      out_path, started);
    }
    return pass ? 0 : 1;
}

int cmd_steele(const std::vector<int>& n_grid, std::uint64_t seed, int replicates, bool json) {
    const auto ratios = steele_ratio_check(n_grid, seed, replicates);
    double lo = ratios.front().second, hi = ratios.front().second;
    for (const auto& [n, ratio] : ratios) {
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    if (json) {
        nlohmann::json j{{"command", "steele"}, {"max_min_ratio", hi / lo},
                         {"ratios", nlohmann::json::array()}};
        for (const auto& [n, ratio] : ratios) j["ratios"].push_back({{"n", n}, {"ratio", ratio}});
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [n, ratio] : ratios) std::printf("n=%d M_n/sqrt(n)=%.6f\n", n, ratio);
        std::printf("max/min=%.4f\n", hi / lo);
    }
    return 0;
}

int cmd_fit(const std::string& in_path, const CommonOpts& o, const std::string& out_path) {
    const std::string started = iso8601_now();
    const auto rows = read_pair_csv(in_path);
    const auto models = rank_models(rows);
    std::string csv = "law,a,b,c,d,r2,adj_r2\n";
    for (const FitModel& m : models) csv += fit_csv_row(m) + "\n";
    if (o.json) {
        nlohmann::json j{{"command", "fit"}, {"models", nlohmann::json::array()}};
        for (const FitModel& m : models) {
            j["models"].push_back({{"law", law_name(m.law)},
                                   {"coefficients", m.coefficients},
                                   {"r2", m.r_squared},
                                   {"adj_r2", m.adj_r_squared},
                                   {"rmse", m.rmse}});
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << csv;
    }
    if (!out_path.empty()) {
        write_text_file(out_path, csv);
        emit_manifest("fit", o.seed, snapshot({{"config.in", in_path}}), out_path, started);
    }
    return 0;
}

int cmd_geo(const std::string& in_path, int grid, bool lat_lon, double threshold,
            const CommonOpts& o) {
    const auto rows = read_pair_csv(in_path);
    if (static_cast<long long>(rows.size()) < static_cast<long long>(grid) * grid)
        std::cerr << "warning: fewer than grid^2 points; cell counts will be sparse\n";
    const GeoSummary summary = summarize_geo(rows, grid, lat_lon, threshold);
    const char* verdict =
        summary.uniform_verdict ? "consistent with uniform (g=0)" : "non-uniform";
    if (o.json) {
        nlohmann::json j{{"command", "geo"},       {"grid", summary.grid},
                         {"total", summary.total}, {"cv", summary.cv},
                         {"threshold", summary.threshold}, {"verdict", verdict}};
        std::cout << j.dump() << "\n";
    } else {
        std::printf("points=%lld grid=%d cv=%.6f verdict=%s\n", summary.total, summary.grid,
                    summary.cv, verdict);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spatial-network traffic-load scaling toolkit"};
    app.require_subcommand(1);

    CommonOpts opt;
    int n = 16;
    std::vector<int> n_grid;
    int replicates = 8;
    int threads = 0;
    int q_threshold = 8;
    double tolerance = 0.15;
    bool counts_only = false;
    std::string out_path;
    std::string in_path;
    std::string override_order;
    int grid = 10;
    bool lat_lon = false;
    double cv_threshold = 0.5;

    auto* gen = app.add_subcommand("gen", "generate a network plus its sessions as JSON");
    gen->add_option("--n", n, "node count")->check(CLI::Range(2, 1000000));
    add_exponent_flags(gen, opt, false);
    gen->add_option("--seed", opt.seed, "PRNG seed");
    gen->add_option("--out", out_path, "output JSON path")->required();
    gen->add_flag("--json", opt.json, "print a JSON summary");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo traffic-load measurement to CSV");
    sim->add_option("--n-grid", n_grid, "node counts, e.g. 256 512 1024")
        ->required()
        ->check(CLI::Range(2, 1000000));
    add_exponent_flags(sim, opt, true);
    sim->add_option("--replicates", replicates, "replicates per n")->check(CLI::PositiveNumber);
    sim->add_option("--seed", opt.seed, "PRNG seed");
    sim->add_option("--threads", threads, "worker threads (0 = all cores)");
    sim->add_option("--q-threshold", q_threshold, "influence split for the psi columns")
        ->check(CLI::PositiveNumber);
    sim->add_option("--out", out_path, "output CSV path")->required();
    sim->add_flag("--json", opt.json, "print a JSON summary");

    auto* theo = app.add_subcommand("theory", "closed-form traffic-load order and law");
    add_exponent_flags(theo, opt, true);
    theo->add_flag("--json", opt.json, "print as JSON");

    auto* scal = app.add_subcommand("scaling", "simulate across n and slope-check against theory");
    scal->add_option("--n-grid", n_grid, "node counts (>= 3 distinct)")
        ->required()
        ->check(CLI::Range(3, 1000000));
    add_exponent_flags(scal, opt, true);
    scal->add_option("--replicates", replicates, "replicates per n")->check(CLI::PositiveNumber);
    scal->add_option("--seed", opt.seed, "PRNG seed");
    scal->add_option("--threads", threads, "worker threads (0 = all cores)");
    scal->add_option("--tolerance", tolerance, "slope tolerance band")
        ->check(CLI::PositiveNumber);
    scal->add_flag("--counts-only", counts_only,
                   "check sum of destinations against the W table instead of traffic");
    scal->add_option("--override-order", override_order,
                     "force the theory order as 'n_exp[,log_exp]'");
    scal->add_option("--out", out_path, "optional report path");
    scal->add_flag("--json", opt.json, "print as JSON");

    auto* steele = app.add_subcommand("steele", "sqrt-growth diagnostic of the EMST engine");
    steele->add_option("--n-grid", n_grid, "increasing node counts, each >= 64")
        ->required()
        ->check(CLI::Range(64, 1000000));
    steele->add_option("--replicates", replicates, "replicates per n")->check(CLI::PositiveNumber);
    steele->add_option("--seed", opt.seed, "PRNG seed");
    steele->add_flag("--json", opt.json, "print as JSON");

    auto* fitc = app.add_subcommand("fit", "fit the four law forms to an n,value CSV");
    fitc->add_option("--in", in_path, "input CSV of n,value rows")->required();
    fitc->add_option("--out", out_path, "optional output CSV path");
    fitc->add_flag("--json", opt.json, "print as JSON");

    auto* geo = app.add_subcommand("geo", "grid-density uniformity check of a point CSV");
    geo->add_option("--in", in_path, "input CSV of x,y or lat,lon rows")->required();
    geo->add_option("--grid", grid, "cells per axis")->check(CLI::PositiveNumber);
    geo->add_flag("--latlon", lat_lon, "treat columns as lat,lon (equirectangular heuristic)");
    geo->add_option("--threshold", cv_threshold, "CV verdict threshold")
        ->check(CLI::PositiveNumber);
    geo->add_flag("--json", opt.json, "print as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(n, opt, out_path);
        if (sim->parsed()) {
            if (n_grid.empty()) throw CLI::ValidationError("--n-grid must not be empty");
            return cmd_simulate(n_grid, opt, replicates, threads, q_threshold, out_path);
        }
        if (theo->parsed()) return cmd_theory(opt);
        if (steele->parsed()) return cmd_steele(n_grid, opt.seed, replicates, opt.json);
        if (scal->parsed())
            return cmd_scaling(n_grid, opt, replicates, threads, tolerance, counts_only,
                               override_order, out_path);
        if (fitc->parsed()) return cmd_fit(in_path, opt, out_path);
        if (geo->parsed()) return cmd_geo(in_path, grid, lat_lon, cv_threshold, opt);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}
