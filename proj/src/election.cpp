#include "swarmsim/election.hpp"

#include <algorithm>
#include <stdexcept>

namespace swarmsim {

ElectionScratch gather_scratch(std::span<const std::pair<UavId, int>> neighbor_weights,
                               const SwarmConfig& cfg) {
    ElectionScratch s;
    const int lid = cfg.leader_id_value();
    for (const auto& [id, w] : neighbor_weights) {
        if (!s.max_weight || w > *s.max_weight) s.max_weight = w;
        if (!s.min_weight || w < *s.min_weight) s.min_weight = w;
        if (w == lid && (!s.leader_neighbor || id < *s.leader_neighbor))
            s.leader_neighbor = id;
    }
    return s;
}

int update_weight(int self_weight, UavId self_id,
                  std::span<const std::pair<UavId, int>> neighbor_weights,
                  const SwarmConfig& cfg) {
    if (neighbor_weights.empty()) return self_weight;

    const ElectionScratch s = gather_scratch(neighbor_weights, cfg);
    const int limit = cfg.weight_limit_value();
    const int lid = cfg.leader_id_value();
    const int r1 = *s.max_weight;
    const int r2 = *s.min_weight;

    int w = self_weight;
    if (r2 < w)
        w = std::min(r2 + 1, limit);
    if (r1 == limit)
        w = lid;
    if (r2 >= w && w != lid)
        w = std::min(r2 + 1, limit);
    if (w == lid && s.leader_neighbor && self_id > *s.leader_neighbor)
        w = w + 1;  // demoted past the sentinel; rule 1 pulls it back next tick
    return w;
}

std::optional<UavId> leader_of(std::span<const int> weights, const SwarmConfig& cfg) {
    const int lid = cfg.leader_id_value();
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] == lid) return static_cast<UavId>(i);
    return std::nullopt;
}

bool election_converged(std::span<const std::vector<int>> history, int window,
                        const SwarmConfig& cfg) {
    if (window < 1)
        throw std::invalid_argument("election_converged: window must be >= 1");
    if (static_cast<int>(history.size()) < window) return false;

    const auto& latest = history.back();
    for (std::size_t k = history.size() - window; k < history.size(); ++k)
        if (history[k] != latest) return false;

    const int lid = cfg.leader_id_value();
    const auto leaders = std::count(latest.begin(), latest.end(), lid);
    return leaders == 1;
}

}  // namespace swarmsim
