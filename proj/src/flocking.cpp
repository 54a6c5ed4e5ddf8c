#include "swarmsim/flocking.hpp"

namespace swarmsim {

Vec3 cohesion_vel(const UavState& u, std::span<const UavState> neighbor_states,
                  const SwarmConfig& cfg) {
    if (neighbor_states.empty()) return Vec3::Zero();
    Vec3 centre = Vec3::Zero();
    for (const auto& n : neighbor_states) centre += n.pos;
    centre /= static_cast<double>(neighbor_states.size());
    return (centre - u.pos) * cfg.cohesion_gain;
}

Vec3 separation_vel(const UavState& u, std::span<const UavState> neighbor_states,
                    const SwarmConfig& cfg) {
    Vec3 push = Vec3::Zero();
    for (const auto& n : neighbor_states)
        if (distance(n.pos, u.pos) < cfg.separation_radius)
            push -= n.pos - u.pos;
    return push;
}

Vec3 alignment_vel(const UavState& u, std::span<const UavState> neighbor_states,
                   const SwarmConfig& cfg) {
    if (neighbor_states.empty()) return Vec3::Zero();
    Vec3 mean_vel = Vec3::Zero();
    for (const auto& n : neighbor_states) mean_vel += n.vel;
    mean_vel /= static_cast<double>(neighbor_states.size());
    return (mean_vel - u.vel) * cfg.alignment_gain;
}

Vec3 leader_goal_vel(const UavState& u, bool is_leader, const SwarmConfig& cfg) {
    if (!is_leader) return Vec3::Zero();
    const Vec3 diff = cfg.dest_point - u.pos;
    if (diff.norm() < cfg.arrive_radius) return Vec3::Zero();
    return norm_scale(diff, cfg.leader_speed);
}

FlockTerms flock_terms(const UavState& u, std::span<const UavState> neighbor_states,
                       bool is_leader, const SwarmConfig& cfg) {
    FlockTerms t;
    t.cohesion = cohesion_vel(u, neighbor_states, cfg);
    t.separation = separation_vel(u, neighbor_states, cfg);
    t.alignment = alignment_vel(u, neighbor_states, cfg);
    t.goal = leader_goal_vel(u, is_leader, cfg);
    return t;
}

UavState step_uav(const UavState& u, const FlockTerms& terms) {
    UavState next = u;
    next.vel = u.vel + terms.sum();
    next.pos = u.pos + next.vel;
    return next;
}

}  // namespace swarmsim
