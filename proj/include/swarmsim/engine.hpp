#pragma once

#include "swarmsim/core.hpp"
#include "swarmsim/topology.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace swarmsim {

enum class Phase { Travel, Arrived };

struct SimState {
    long tick = 0;
    std::vector<UavState> uavs;
    ProximityGraph graph;  // in effect for the tick just computed
    Phase phase = Phase::Travel;
};

/// Snapshot of one recorded tick.
struct TickRecord {
    long tick = 0;
    std::vector<Vec3> positions;
    std::vector<Vec3> velocities;
    std::vector<int> weights;
    std::vector<char> leader_flags;  // weight == leader sentinel
    std::vector<std::pair<UavId, UavId>> edges;
    bool connected = false;
    std::optional<double> min_pairwise;  // absent for a single UAV
    bool out_of_bounds = false;          // any UAV outside [0, side_length]^3
    std::optional<UavId> leader;
};

struct RunOptions {
    long trace_stride = 1;
    bool reverse_iteration = false;    // iterate UAVs high-to-low inside a tick; must not matter
    int convergence_window = 5;        // identical weight vectors to call the election settled
    double swarm_arrive_radius = 0.0;  // all-UAV arrival metric radius; comm_range when <= 0
};

struct SimResult {
    std::optional<long> arrival_tick;      // leader first strictly inside arrive_radius of dest
    std::optional<long> all_arrival_tick;  // all UAVs first within swarm_arrive_radius of dest
    long ticks_run = 0;
    long trace_stride = 1;
    std::vector<TickRecord> trace;  // every trace_stride ticks from 0, plus the final tick

    // Per-tick observables, index == tick, covering 0..ticks_run.
    std::vector<std::optional<UavId>> leader_timeline;
    std::vector<std::uint8_t> connected_timeline;
    std::vector<double> min_pairwise_timeline;  // empty for a single UAV

    std::optional<long> converged_tick;  // election settled (stable window, one leader)
    double max_speed = 0.0;
    bool any_out_of_bounds = false;
};

/// Seeded deployment around deploy_point: uniform in the jitter cube,
/// clipped to the region, zero velocities, weights = ids. A 1-UAV swarm
/// deploys holding the leader sentinel (nothing to elect against).
SimState deploy(const SwarmConfig& cfg);

/// One synchronous step. All reads are from the pre-tick snapshot; new
/// weights, terms and positions are written double-buffered, so UAV
/// iteration order cannot matter.
SimState tick(const SimState& state, const SwarmConfig& cfg);
SimState tick(const SimState& state, const SwarmConfig& cfg, bool reverse_iteration);

/// Ticks until arrival or max_ticks, capturing the trace.
SimResult run(const SwarmConfig& cfg, const RunOptions& opts = {});

}  // namespace swarmsim
