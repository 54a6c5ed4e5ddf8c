#include "swarmsim/topology.hpp"

#include <stdexcept>
#include <vector>

namespace swarmsim {

ProximityGraph build_graph(std::span<const Vec3> positions, double range) {
    if (!(range > 0.0))
        throw std::invalid_argument("build_graph: range must be positive");
    for (const auto& p : positions)
        if (!all_finite(p))
            throw std::invalid_argument("build_graph: non-finite position");

    const int n = static_cast<int>(positions.size());
    ProximityGraph g;
    g.n = n;
    g.range_used = range;
    g.adjacency.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (distance(positions[i], positions[j]) <= range) {
                g.adjacency[i].push_back(j);
                g.adjacency[j].push_back(i);
            }
        }
    }
    // Built in ascending id order, so each list is already sorted.
    return g;
}

const std::vector<UavId>& neighbors(const ProximityGraph& g, UavId u) {
    if (u < 0 || u >= g.n)
        throw std::out_of_range("neighbors: id out of range");
    return g.adjacency[u];
}

bool is_connected(const ProximityGraph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<UavId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const UavId u = stack.back();
        stack.pop_back();
        for (UavId v : g.adjacency[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == g.n;
}

ProximityGraph refresh(const ProximityGraph& g, std::span<const Vec3> positions,
                       long tick, const SwarmConfig& cfg) {
    if (static_cast<int>(positions.size()) != g.n)
        throw std::invalid_argument("refresh: position count does not match graph");
    if (tick % cfg.refresh_ticks == 0)
        return build_graph(positions, g.range_used);
    return g;
}

std::vector<std::pair<UavId, UavId>> edge_list(const ProximityGraph& g) {
    std::vector<std::pair<UavId, UavId>> edges;
    for (int u = 0; u < g.n; ++u)
        for (UavId v : g.adjacency[u])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

}  // namespace swarmsim
