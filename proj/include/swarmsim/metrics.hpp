#pragma once

#include "swarmsim/core.hpp"
#include "swarmsim/engine.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace swarmsim {

/// Straight-line flight time from d1 to d2 at leader_speed, in ticks.
double theoretical_time(const Vec3& d1, const Vec3& d2, double leader_speed);

/// 100 * (actual - theoretical) / theoretical.
double overhead_percent(double actual, double theoretical);

/// Minimum distance over all unordered pairs; needs at least two points.
double min_pairwise_distance(std::span<const Vec3> positions);

struct ConnectivityStats {
    double fraction = 0.0;
    bool from_convergence = false;  // false: election never settled, fraction is over all ticks
};

/// Fraction of ticks with a connected graph, measured from the election's
/// convergence tick. Falls back to the whole run (flagged) when the
/// election never settled.
ConnectivityStats connectivity_stats(const SimResult& result);
double connectivity_fraction(const SimResult& result);

struct ExperimentRow {
    int n = 0;
    int replicate = 0;
    std::uint64_t seed = 0;
    std::optional<long> arrival_tick;  // absent: censored (budget exhausted)
    double connectivity_fraction = 0.0;
    std::optional<double> min_pairwise;  // absent for a single UAV
};

struct ExperimentAggregate {
    int n = 0;
    std::optional<double> mean_arrival;  // over arrived replicates; absent if none arrived
    std::optional<double> overhead_pct;
};

struct ExperimentSummary {
    std::vector<ExperimentRow> rows;            // ordered by (n, replicate)
    std::vector<ExperimentAggregate> aggregates;
};

/// Censored replicates (no arrival) for one swarm size.
int censored_count(const ExperimentSummary& summary, int n);

/// Replicated arrival-time experiment: for each n and replicate k, one run
/// with seed = seed_base + k; means exclude censored replicates.
ExperimentSummary run_experiment(const SwarmConfig& base, std::span<const int> n_values,
                                 int replicates, std::uint64_t seed_base);

}  // namespace swarmsim
