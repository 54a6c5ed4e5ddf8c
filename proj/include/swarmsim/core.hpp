#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace swarmsim {

/// Positions, velocities and displacements, in meters (per tick for velocities).
using Vec3 = Eigen::Vector3d;

/// UAV ids are dense 0..n-1 and stable for a run.
using UavId = int;

/// Raised for invalid configurations and malformed config files.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename Derived>
inline bool all_finite(const Eigen::MatrixBase<Derived>& v) {
    return v.allFinite();
}

/// Euclidean distance between two points.
template <typename A, typename B>
inline double distance(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    return (a - b).norm();
}

/// Vector parallel to v with length target_len. The zero vector has no
/// direction, so it is rejected; callers decide the degenerate case.
template <typename Derived>
inline Vec3 norm_scale(const Eigen::MatrixBase<Derived>& v, double target_len) {
    const double len = v.norm();
    if (len == 0.0)
        throw std::invalid_argument("norm_scale: zero vector has no direction");
    return v * (target_len / len);
}

struct UavState {
    UavId id = 0;
    Vec3 pos = Vec3::Zero();
    Vec3 vel = Vec3::Zero();
    int weight = 0;  // election weight u_w
};

/// Every constant of one simulation run. Optional fields derive their
/// defaults from the fields they depend on (see the *_value accessors).
struct SwarmConfig {
    int uav_count = 8;
    double side_length = 200.0;            // bounded region edge, meters
    double comm_range = 55.0;              // transmission range, meters
    std::optional<double> travel_range;    // reduced range used en route; comm_range if unset
    long refresh_ticks = 1;                // neighbor-list refresh interval, ticks
    Vec3 deploy_point{25.0, 25.0, 25.0};   // d1
    Vec3 dest_point{100.0, 100.0, 100.0};  // d2
    double leader_speed = 0.7;             // meters per tick
    double arrive_radius = 5.0;            // arrival threshold, meters
    std::optional<int> weight_limit;       // max ordinary election weight; uav_count if unset
    std::optional<int> leader_id;          // sentinel weight of the leader; weight_limit+1 if unset
    double cohesion_gain = 0.2;
    double separation_radius = 0.8;        // collision-avoidance trigger distance, meters
    double alignment_gain = 0.2;
    double deploy_jitter = 5.0;            // half-width of the deployment cube, meters
    std::uint64_t seed = 1;
    long max_ticks = 5000;

    double travel_range_value() const { return travel_range.value_or(comm_range); }
    int weight_limit_value() const { return weight_limit.value_or(uav_count); }
    int leader_id_value() const { return leader_id.value_or(weight_limit_value() + 1); }

    void validate() const;
};

inline void SwarmConfig::validate() const {
    const auto fail = [](const std::string& field, const std::string& why) {
        throw ConfigError("config field '" + field + "': " + why);
    };
    if (uav_count < 1) fail("uavs", "must be >= 1");
    if (!(side_length > 0.0) || !std::isfinite(side_length)) fail("side_length", "must be positive");
    if (!(comm_range > 0.0) || !std::isfinite(comm_range)) fail("comm_range", "must be positive");
    if (travel_range && (!(*travel_range > 0.0) || !std::isfinite(*travel_range)))
        fail("travel_range", "must be positive");
    if (refresh_ticks < 1) fail("refresh_ticks", "must be >= 1");
    if (!all_finite(deploy_point)) fail("deploy", "components must be finite");
    if (!all_finite(dest_point)) fail("dest", "components must be finite");
    if (!(leader_speed > 0.0) || !std::isfinite(leader_speed)) fail("leader_speed", "must be positive");
    if (!(arrive_radius > 0.0) || !std::isfinite(arrive_radius)) fail("arrive_radius", "must be positive");
    if (weight_limit_value() < 0) fail("weight_limit", "must be >= 0");
    if (leader_id_value() <= weight_limit_value())
        fail("leader_id", "must exceed weight_limit");
    if (!std::isfinite(cohesion_gain)) fail("cohesion_gain", "must be finite");
    if (!(separation_radius >= 0.0) || !std::isfinite(separation_radius))
        fail("separation_radius", "must be >= 0");
    if (!std::isfinite(alignment_gain)) fail("alignment_gain", "must be finite");
    if (!(deploy_jitter >= 0.0) || !std::isfinite(deploy_jitter)) fail("deploy_jitter", "must be >= 0");
    if (max_ticks < 1) fail("max_ticks", "must be >= 1");
}

}  // namespace swarmsim
