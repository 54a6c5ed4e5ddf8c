#include "swarmsim/engine.hpp"

#include "swarmsim/election.hpp"
#include "swarmsim/flocking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace swarmsim {

namespace {

std::vector<Vec3> positions_of(const std::vector<UavState>& uavs) {
    std::vector<Vec3> p;
    p.reserve(uavs.size());
    for (const auto& u : uavs) p.push_back(u.pos);
    return p;
}

// Uniform double in [0,1) from the top 53 bits; keeps deployment
// reproducible independent of the standard library's distributions.
double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double min_pairwise(const std::vector<Vec3>& p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            best = std::min(best, distance(p[i], p[j]));
    return best;
}

bool inside_region(const Vec3& p, double side) {
    return p.x() >= 0.0 && p.x() <= side && p.y() >= 0.0 && p.y() <= side &&
           p.z() >= 0.0 && p.z() <= side;
}

TickRecord make_record(const SimState& s, const SwarmConfig& cfg) {
    TickRecord rec;
    rec.tick = s.tick;
    const int lid = cfg.leader_id_value();
    rec.positions.reserve(s.uavs.size());
    for (const auto& u : s.uavs) {
        rec.positions.push_back(u.pos);
        rec.velocities.push_back(u.vel);
        rec.weights.push_back(u.weight);
        rec.leader_flags.push_back(u.weight == lid ? 1 : 0);
    }
    rec.edges = edge_list(s.graph);
    rec.connected = is_connected(s.graph);
    if (s.uavs.size() >= 2) rec.min_pairwise = min_pairwise(rec.positions);
    for (const auto& p : rec.positions)
        if (!inside_region(p, cfg.side_length)) rec.out_of_bounds = true;
    rec.leader = leader_of(rec.weights, cfg);
    return rec;
}

}  // namespace

SimState deploy(const SwarmConfig& cfg) {
    cfg.validate();

    std::mt19937_64 eng(cfg.seed);
    SimState s;
    s.tick = 0;
    s.phase = Phase::Travel;
    s.uavs.resize(cfg.uav_count);
    for (int i = 0; i < cfg.uav_count; ++i) {
        UavState& u = s.uavs[i];
        u.id = i;
        for (int axis = 0; axis < 3; ++axis) {
            const double offset = cfg.deploy_jitter * (2.0 * uniform01(eng) - 1.0);
            u.pos[axis] = std::clamp(cfg.deploy_point[axis] + offset, 0.0, cfg.side_length);
        }
        u.vel = Vec3::Zero();
        u.weight = i;
    }
    if (cfg.uav_count == 1) s.uavs[0].weight = cfg.leader_id_value();

    s.graph = build_graph(positions_of(s.uavs), cfg.travel_range_value());
    return s;
}

SimState tick(const SimState& state, const SwarmConfig& cfg) {
    return tick(state, cfg, false);
}

SimState tick(const SimState& state, const SwarmConfig& cfg, bool reverse_iteration) {
    const int n = static_cast<int>(state.uavs.size());
    const int lid = cfg.leader_id_value();
    const long next_tick = state.tick + 1;

    SimState next;
    next.tick = next_tick;
    next.phase = state.phase;
    next.uavs.resize(n);

    // Neighbor lists for this tick come from the pre-move positions.
    const std::vector<Vec3> pos_now = positions_of(state.uavs);
    next.graph = refresh(state.graph, pos_now, next_tick, cfg);

    const auto order = [&](int k) { return reverse_iteration ? n - 1 - k : k; };

    // Weight updates read only the tick-t snapshot.
    std::vector<int> next_weights(n);
    std::vector<std::pair<UavId, int>> nbr_weights;
    for (int k = 0; k < n; ++k) {
        const int i = order(k);
        const auto& nbrs = next.graph.adjacency[i];
        nbr_weights.clear();
        for (UavId j : nbrs) nbr_weights.emplace_back(j, state.uavs[j].weight);
        next_weights[i] = update_weight(state.uavs[i].weight, i, nbr_weights, cfg);
    }

    // Movement also reads the tick-t snapshot; leadership is judged on the
    // tick-t weights. The goal-engaged leader is renormalized to cruise at
    // leader_speed, so the goal pull steers rather than accumulates.
    std::vector<UavState> nbr_states;
    for (int k = 0; k < n; ++k) {
        const int i = order(k);
        const UavState& u = state.uavs[i];
        const auto& nbrs = next.graph.adjacency[i];
        nbr_states.clear();
        for (UavId j : nbrs) nbr_states.push_back(state.uavs[j]);

        const bool is_leader = u.weight == lid;
        const FlockTerms terms = flock_terms(u, nbr_states, is_leader, cfg);
        UavState moved = step_uav(u, terms);
        if (is_leader && !terms.goal.isZero() && moved.vel.norm() > 0.0)
            moved.vel = norm_scale(moved.vel, cfg.leader_speed);
        moved.pos = u.pos + moved.vel;
        moved.weight = next_weights[i];
        next.uavs[i] = moved;
    }

    if (next.phase == Phase::Travel) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = next.uavs[i].weight;
        if (const auto leader = leader_of(w, cfg)) {
            if (distance(next.uavs[*leader].pos, cfg.dest_point) < cfg.arrive_radius) {
                next.phase = Phase::Arrived;
                // Arrival extends transmission to the full range.
                next.graph = build_graph(positions_of(next.uavs), cfg.comm_range);
            }
        }
    }
    return next;
}

SimResult run(const SwarmConfig& cfg, const RunOptions& opts) {
    if (opts.trace_stride < 1)
        throw std::invalid_argument("run: trace_stride must be >= 1");
    if (opts.convergence_window < 1)
        throw std::invalid_argument("run: convergence_window must be >= 1");

    SimState state = deploy(cfg);
    const double all_radius =
        opts.swarm_arrive_radius > 0.0 ? opts.swarm_arrive_radius : cfg.comm_range;

    SimResult result;
    result.trace_stride = opts.trace_stride;

    std::vector<std::vector<int>> weight_history;
    const auto observe = [&](const SimState& s) {
        const TickRecord rec = make_record(s, cfg);
        result.leader_timeline.push_back(rec.leader);
        result.connected_timeline.push_back(rec.connected ? 1 : 0);
        if (rec.min_pairwise) result.min_pairwise_timeline.push_back(*rec.min_pairwise);
        for (const auto& v : rec.velocities)
            result.max_speed = std::max(result.max_speed, v.norm());
        if (rec.out_of_bounds) result.any_out_of_bounds = true;

        weight_history.push_back(rec.weights);
        if (!result.converged_tick &&
            election_converged(weight_history, opts.convergence_window, cfg))
            result.converged_tick = s.tick;

        if (!result.all_arrival_tick) {
            bool all_in = true;
            for (const auto& p : rec.positions)
                if (!(distance(p, cfg.dest_point) <= all_radius)) all_in = false;
            if (all_in) result.all_arrival_tick = s.tick;
        }

        if (s.tick % opts.trace_stride == 0) result.trace.push_back(rec);
    };

    observe(state);
    while (state.tick < cfg.max_ticks) {
        state = tick(state, cfg, opts.reverse_iteration);
        observe(state);
        if (state.phase == Phase::Arrived) {
            result.arrival_tick = state.tick;
            break;
        }
    }
    result.ticks_run = state.tick;
    if (result.trace.back().tick != state.tick)
        result.trace.push_back(make_record(state, cfg));
    return result;
}

}  // namespace swarmsim
