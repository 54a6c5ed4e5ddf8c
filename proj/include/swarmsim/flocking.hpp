#pragma once

#include "swarmsim/core.hpp"

#include <span>

namespace swarmsim {

/// The four velocity contributions of one tick, kept separate so traces
/// and tests can attribute movement to individual rules.
struct FlockTerms {
    Vec3 cohesion = Vec3::Zero();    // toward the neighbor centroid
    Vec3 separation = Vec3::Zero();  // away from close neighbors
    Vec3 alignment = Vec3::Zero();   // toward the neighbor mean velocity
    Vec3 goal = Vec3::Zero();        // leader-only pull toward the destination

    Vec3 sum() const { return cohesion + separation + alignment + goal; }
};

/// (mean neighbor position - pos) * cohesion_gain; zero without neighbors.
Vec3 cohesion_vel(const UavState& u, std::span<const UavState> neighbor_states,
                  const SwarmConfig& cfg);

/// Sum of -(pos_n - pos_u) over neighbors strictly closer than
/// separation_radius; zero when none qualify.
Vec3 separation_vel(const UavState& u, std::span<const UavState> neighbor_states,
                    const SwarmConfig& cfg);

/// (mean neighbor velocity - vel) * alignment_gain; zero without neighbors.
Vec3 alignment_vel(const UavState& u, std::span<const UavState> neighbor_states,
                   const SwarmConfig& cfg);

/// Zero for non-leaders and inside the arrival radius; otherwise the
/// vector of length leader_speed toward dest_point.
Vec3 leader_goal_vel(const UavState& u, bool is_leader, const SwarmConfig& cfg);

FlockTerms flock_terms(const UavState& u, std::span<const UavState> neighbor_states,
                       bool is_leader, const SwarmConfig& cfg);

/// vel' = vel + sum of terms; pos' = pos + vel'. Id and weight unchanged.
UavState step_uav(const UavState& u, const FlockTerms& terms);

}  // namespace swarmsim
