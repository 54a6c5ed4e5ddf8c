#pragma once

#include "swarmsim/core.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace swarmsim {

/// Neighborhood aggregates feeding one weight update. All three are absent
/// when the neighbor set is empty.
struct ElectionScratch {
    std::optional<int> max_weight;         // R1
    std::optional<int> min_weight;         // R2
    std::optional<UavId> leader_neighbor;  // R3: lowest id holding the leader sentinel
};

ElectionScratch gather_scratch(std::span<const std::pair<UavId, int>> neighbor_weights,
                               const SwarmConfig& cfg);

/// One synchronous weight update. neighbor_weights must be the current
/// tick's published weights; the rules run once, in order, on a working
/// copy. An empty neighborhood is a no-op.
///
/// Ordinary assignments clamp at weight_limit, so only the dedicated rule
/// can mint the leader sentinel and a demoted leader re-enters the ordinary
/// range on the following tick. Of two adjacent leaders, the one with the
/// larger id steps aside.
int update_weight(int self_weight, UavId self_id,
                  std::span<const std::pair<UavId, int>> neighbor_weights,
                  const SwarmConfig& cfg);

/// Lowest id currently holding the leader sentinel, if any.
std::optional<UavId> leader_of(std::span<const int> weights, const SwarmConfig& cfg);

/// True when the weight vector has been identical for the last `window`
/// entries of history and exactly one UAV holds the leader sentinel.
bool election_converged(std::span<const std::vector<int>> history, int window,
                        const SwarmConfig& cfg);

}  // namespace swarmsim
