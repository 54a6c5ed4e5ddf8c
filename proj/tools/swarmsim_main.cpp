#include "swarmsim/election.hpp"
#include "swarmsim/engine.hpp"
#include "swarmsim/io.hpp"
#include "swarmsim/metrics.hpp"
#include "swarmsim/topology.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace swarmsim;

Vec3 parse_triple(const std::string& s, const std::string& flag) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        const std::string cell =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            parts.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw ConfigError(flag + ": expected x,y,z, got '" + s + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) throw ConfigError(flag + ": expected x,y,z, got '" + s + "'");
    return Vec3(parts[0], parts[1], parts[2]);
}

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        const std::string cell =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            out.push_back(std::stoi(cell));
        } catch (const std::exception&) {
            throw ConfigError(flag + ": expected a comma-separated integer list, got '" + s + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int cmd_run(const SwarmConfig& cfg, const std::optional<std::string>& trace_path,
            long trace_stride) {
    RunOptions opts;
    opts.trace_stride = trace_stride;
    const SimResult result = run(cfg, opts);

    const double theo = theoretical_time(cfg.deploy_point, cfg.dest_point, cfg.leader_speed);
    std::printf("uavs                 %d\n", cfg.uav_count);
    std::printf("seed                 %llu\n", static_cast<unsigned long long>(cfg.seed));
    std::printf("theoretical_ticks    %.2f\n", theo);
    if (result.arrival_tick) {
        std::printf("arrival_tick         %ld\n", *result.arrival_tick);
        std::printf("overhead_pct         %.2f\n",
                    overhead_percent(static_cast<double>(*result.arrival_tick), theo));
    } else {
        std::printf("arrival_tick         none (budget %ld exhausted)\n", cfg.max_ticks);
    }
    if (result.all_arrival_tick)
        std::printf("all_within_range_tick %ld\n", *result.all_arrival_tick);
    if (result.converged_tick)
        std::printf("election_converged   %ld\n", *result.converged_tick);
    else
        std::printf("election_converged   never\n");
    const auto conn = connectivity_stats(result);
    std::printf("connectivity         %.4f%s\n", conn.fraction,
                conn.from_convergence ? "" : " (whole run; election never settled)");
    if (!result.min_pairwise_timeline.empty())
        std::printf("min_pairwise         %.4f\n",
                    *std::min_element(result.min_pairwise_timeline.begin(),
                                      result.min_pairwise_timeline.end()));
    std::printf("max_speed            %.4f\n", result.max_speed);
    std::printf("ticks_run            %ld\n", result.ticks_run);
    if (result.any_out_of_bounds) std::printf("note: trajectory left the deployment region\n");

    if (trace_path) emit_trace(result, *trace_path);
    return result.arrival_tick ? 0 : 2;
}

int cmd_experiment(const SwarmConfig& base, const std::vector<int>& n_values, int replicates,
                   std::uint64_t seed_base, const std::optional<std::string>& summary_path) {
    const ExperimentSummary summary = run_experiment(base, n_values, replicates, seed_base);
    const double theo = theoretical_time(base.deploy_point, base.dest_point, base.leader_speed);

    std::printf("theoretical ticks: %.2f\n\n", theo);
    std::printf("%4s %9s %6s %12s %12s %12s\n", "n", "replicate", "seed", "arrival",
                "connectivity", "min_pairwise");
    for (const auto& row : summary.rows) {
        std::printf("%4d %9d %6llu %12s %12.4f %12s\n", row.n, row.replicate,
                    static_cast<unsigned long long>(row.seed),
                    row.arrival_tick ? std::to_string(*row.arrival_tick).c_str() : "censored",
                    row.connectivity_fraction,
                    row.min_pairwise ? std::to_string(*row.min_pairwise).c_str() : "-");
    }
    std::printf("\n%4s %14s %14s %10s\n", "n", "mean_arrival", "overhead_pct", "censored");
    for (const auto& agg : summary.aggregates) {
        std::printf("%4d %14s %14s %10d\n", agg.n,
                    agg.mean_arrival ? std::to_string(*agg.mean_arrival).c_str() : "-",
                    agg.overhead_pct ? std::to_string(*agg.overhead_pct).c_str() : "-",
                    censored_count(summary, agg.n));
    }
    if (summary_path) emit_summary(summary, *summary_path);
    return 0;
}

bool check_line(const char* name, bool ok) {
    std::printf("%s %s\n", ok ? "PASS" : "FAIL", name);
    return ok;
}

// Self-contained sanity suite over the default configuration.
int cmd_check() {
    bool all = true;
    const SwarmConfig cfg;

    {
        std::mt19937_64 eng(7);
        auto u01 = [&] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
        bool ok = true;
        for (int instance = 0; instance < 50 && ok; ++instance) {
            const int n = 2 + static_cast<int>(u01() * 30);
            const double range = 1.0 + u01() * 199.0;
            std::vector<Vec3> pts;
            for (int i = 0; i < n; ++i)
                pts.emplace_back(u01() * 200.0, u01() * 200.0, u01() * 200.0);
            const ProximityGraph g = build_graph(pts, range);
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) {
                    if (i == j) continue;
                    const bool expect = distance(pts[i], pts[j]) <= range;
                    const auto& adj = neighbors(g, i);
                    const bool got = std::find(adj.begin(), adj.end(), j) != adj.end();
                    if (expect != got) ok = false;
                }
        }
        all &= check_line("proximity graph matches pairwise distances", ok);
    }
    {
        bool ok = update_weight(3, 0, std::vector<std::pair<UavId, int>>{{1, 1}, {2, 4}}, cfg) == 2;
        ok &= update_weight(5, 0, std::vector<std::pair<UavId, int>>{{1, 8}, {2, 8}}, cfg) == 9;
        ok &= update_weight(9, 5, std::vector<std::pair<UavId, int>>{{2, 9}}, cfg) == 10;
        all &= check_line("election weight rules", ok);
    }
    {
        SwarmConfig solo = cfg;
        solo.uav_count = 1;
        solo.deploy_jitter = 0.0;
        const SimResult res = run(solo);
        const bool ok = res.arrival_tick && *res.arrival_tick >= 179 && *res.arrival_tick <= 186;
        all &= check_line("solo flight matches the straight-line oracle", ok);
    }
    {
        const SimResult a = run(cfg);
        const SimResult b = run(cfg);
        all &= check_line("identical seeds give identical traces",
                          trace_to_jsonl(a) == trace_to_jsonl(b));
    }
    {
        const SimResult res = run(cfg);
        bool ok = res.converged_tick && *res.converged_tick <= 50;
        ok &= connectivity_fraction(res) >= 0.99;
        ok &= res.arrival_tick.has_value();
        for (double d : res.min_pairwise_timeline)
            if (!(d > 0.0)) ok = false;
        for (const auto& rec : res.trace)
            for (const auto& p : rec.positions)
                if (!all_finite(p)) ok = false;
        all &= check_line("default swarm run: election, connectivity, spacing", ok);
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Networked UAV swarm simulator: weight-based leader election plus "
                 "leader-follower flocking over a range-limited communication graph"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Simulate one mission and report arrival metrics");
    std::string config_path, deploy_s, dest_s, trace_path_s;
    std::optional<int> uavs;
    std::optional<double> range, travel_range, side, leader_vel, arrive_eps;
    std::optional<std::uint64_t> seed;
    std::optional<long> max_ticks;
    long trace_stride = 1;
    run_cmd->add_option("--config", config_path, "Config file (key = value lines)");
    run_cmd->add_option("--uavs", uavs, "Number of UAVs");
    run_cmd->add_option("--range", range, "Transmission range, m");
    run_cmd->add_option("--travel-range", travel_range, "Reduced range used en route, m");
    run_cmd->add_option("--side", side, "Region side length, m");
    run_cmd->add_option("--deploy", deploy_s, "Deployment point x,y,z");
    run_cmd->add_option("--dest", dest_s, "Destination point x,y,z");
    run_cmd->add_option("--leader-vel", leader_vel, "Leader speed, m per tick");
    run_cmd->add_option("--arrive-eps", arrive_eps, "Arrival threshold, m");
    run_cmd->add_option("--seed", seed, "Deployment seed");
    run_cmd->add_option("--max-ticks", max_ticks, "Tick budget");
    run_cmd->add_option("--trace", trace_path_s, "Write a JSON Lines trace here");
    run_cmd->add_option("--trace-stride", trace_stride, "Record every k-th tick")
        ->check(CLI::PositiveNumber);

    // experiment
    auto* exp_cmd =
        app.add_subcommand("experiment", "Replicated arrival-time experiment across swarm sizes");
    std::string exp_config_path, uavs_list = "4,8,12", summary_path_s;
    int replicates = 5;
    std::uint64_t seed_base = 1;
    exp_cmd->add_option("--config", exp_config_path, "Base config file");
    exp_cmd->add_option("--uavs", uavs_list, "Swarm sizes, e.g. 4,8,12");
    exp_cmd->add_option("--replicates", replicates, "Replicates per size")
        ->check(CLI::PositiveNumber);
    exp_cmd->add_option("--seed-base", seed_base, "Replicate k runs with seed seed_base + k");
    exp_cmd->add_option("--summary", summary_path_s, "Write the summary CSV here");

    // check
    app.add_subcommand("check", "Run the built-in invariant suite on the default config");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            SwarmConfig cfg =
                config_path.empty() ? SwarmConfig{} : parse_config(config_path);
            if (uavs) cfg.uav_count = *uavs;
            if (range) cfg.comm_range = *range;
            if (travel_range) cfg.travel_range = *travel_range;
            if (side) cfg.side_length = *side;
            if (!deploy_s.empty()) cfg.deploy_point = parse_triple(deploy_s, "--deploy");
            if (!dest_s.empty()) cfg.dest_point = parse_triple(dest_s, "--dest");
            if (leader_vel) cfg.leader_speed = *leader_vel;
            if (arrive_eps) cfg.arrive_radius = *arrive_eps;
            if (seed) cfg.seed = *seed;
            if (max_ticks) cfg.max_ticks = *max_ticks;
            cfg.validate();
            std::optional<std::string> trace_path;
            if (!trace_path_s.empty()) trace_path = trace_path_s;
            return cmd_run(cfg, trace_path, trace_stride);
        }
        if (exp_cmd->parsed()) {
            SwarmConfig base =
                exp_config_path.empty() ? SwarmConfig{} : parse_config(exp_config_path);
            base.validate();
            const std::vector<int> n_values = parse_int_list(uavs_list, "--uavs");
            std::optional<std::string> summary_path;
            if (!summary_path_s.empty()) summary_path = summary_path_s;
            return cmd_experiment(base, n_values, replicates, seed_base, summary_path);
        }
        return cmd_check();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
