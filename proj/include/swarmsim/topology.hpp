#pragma once

#include "swarmsim/core.hpp"

#include <span>
#include <utility>
#include <vector>

namespace swarmsim {

/// Symmetric Euclidean communication graph over a snapshot of positions.
/// Neighbor lists are sorted by id; there are no self-loops, and
/// {u,v} is an edge exactly when dist(u,v) <= range_used.
struct ProximityGraph {
    int n = 0;
    double range_used = 0.0;
    std::vector<std::vector<UavId>> adjacency;
};

/// O(n^2) pairwise construction; n stays small in every scenario here.
ProximityGraph build_graph(std::span<const Vec3> positions, double range);

/// Sorted 1-hop neighbor list of u.
const std::vector<UavId>& neighbors(const ProximityGraph& g, UavId u);

/// True when a traversal from node 0 reaches every node.
bool is_connected(const ProximityGraph& g);

/// Rebuild from the given positions when tick falls on the refresh cadence,
/// otherwise return the graph unchanged.
ProximityGraph refresh(const ProximityGraph& g, std::span<const Vec3> positions,
                       long tick, const SwarmConfig& cfg);

/// All edges as (u,v) pairs with u < v, ordered lexicographically.
std::vector<std::pair<UavId, UavId>> edge_list(const ProximityGraph& g);

}  // namespace swarmsim
