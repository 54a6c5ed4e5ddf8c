#include "swarmsim/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace swarmsim {

double theoretical_time(const Vec3& d1, const Vec3& d2, double leader_speed) {
    if (!(leader_speed > 0.0))
        throw ConfigError("theoretical_time: leader_speed must be positive");
    return distance(d1, d2) / leader_speed;
}

double overhead_percent(double actual, double theoretical) {
    if (!(theoretical > 0.0))
        throw std::invalid_argument("overhead_percent: theoretical must be positive");
    return 100.0 * (actual - theoretical) / theoretical;
}

double min_pairwise_distance(std::span<const Vec3> positions) {
    if (positions.size() < 2)
        throw std::invalid_argument("min_pairwise_distance: need at least two positions");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < positions.size(); ++i)
        for (std::size_t j = i + 1; j < positions.size(); ++j)
            best = std::min(best, distance(positions[i], positions[j]));
    return best;
}

ConnectivityStats connectivity_stats(const SimResult& result) {
    if (result.connected_timeline.empty())
        throw std::invalid_argument("connectivity_stats: empty trace");
    ConnectivityStats stats;
    std::size_t from = 0;
    if (result.converged_tick) {
        from = static_cast<std::size_t>(*result.converged_tick);
        stats.from_convergence = true;
    }
    std::size_t connected = 0, total = 0;
    for (std::size_t t = from; t < result.connected_timeline.size(); ++t) {
        ++total;
        connected += result.connected_timeline[t];
    }
    stats.fraction = static_cast<double>(connected) / static_cast<double>(total);
    return stats;
}

double connectivity_fraction(const SimResult& result) {
    return connectivity_stats(result).fraction;
}

int censored_count(const ExperimentSummary& summary, int n) {
    int count = 0;
    for (const auto& row : summary.rows)
        if (row.n == n && !row.arrival_tick) ++count;
    return count;
}

ExperimentSummary run_experiment(const SwarmConfig& base, std::span<const int> n_values,
                                 int replicates, std::uint64_t seed_base) {
    if (replicates < 1)
        throw std::invalid_argument("run_experiment: replicates must be >= 1");

    ExperimentSummary summary;
    for (int n : n_values) {
        SwarmConfig cfg = base;
        cfg.uav_count = n;
        // weight_limit / leader_id track n unless the base pinned them.
        double arrived_sum = 0.0;
        int arrived = 0;
        for (int k = 0; k < replicates; ++k) {
            cfg.seed = seed_base + static_cast<std::uint64_t>(k);
            const SimResult res = run(cfg);

            ExperimentRow row;
            row.n = n;
            row.replicate = k;
            row.seed = cfg.seed;
            row.arrival_tick = res.arrival_tick;
            row.connectivity_fraction = connectivity_fraction(res);
            if (!res.min_pairwise_timeline.empty())
                row.min_pairwise = *std::min_element(res.min_pairwise_timeline.begin(),
                                                     res.min_pairwise_timeline.end());
            summary.rows.push_back(row);

            if (res.arrival_tick) {
                arrived_sum += static_cast<double>(*res.arrival_tick);
                ++arrived;
            }
        }
        ExperimentAggregate agg;
        agg.n = n;
        if (arrived > 0) {
            agg.mean_arrival = arrived_sum / arrived;
            const double theo =
                theoretical_time(cfg.deploy_point, cfg.dest_point, cfg.leader_speed);
            agg.overhead_pct = overhead_percent(*agg.mean_arrival, theo);
        }
        summary.aggregates.push_back(agg);
    }
    return summary;
}

}  // namespace swarmsim
