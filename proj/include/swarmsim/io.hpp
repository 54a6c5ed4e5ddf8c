#pragma once

#include "swarmsim/core.hpp"
#include "swarmsim/engine.hpp"
#include "swarmsim/metrics.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace swarmsim {

/// Flat `key = value` config text: one pair per line, `#` comments,
/// vectors as comma-separated triples. Unknown keys and bad values raise
/// ConfigError with file, line and field.
SwarmConfig parse_config_text(std::string_view text, std::string_view origin = "<string>");
SwarmConfig parse_config(const std::filesystem::path& path);

std::string config_to_text(const SwarmConfig& cfg);
void emit_config(const SwarmConfig& cfg, const std::filesystem::path& path);

/// JSON Lines trace: one record per recorded tick, in tick order.
std::string trace_to_jsonl(const SimResult& result);
void emit_trace(const SimResult& result, const std::filesystem::path& path);

/// Summary CSV: per-replicate block
///   n,replicate,seed,arrival_tick,connectivity_fraction,min_pairwise_distance
/// then a blank line and the aggregate block n,mean_arrival,overhead_pct.
/// Censored replicates keep an empty arrival_tick cell.
std::string summary_to_csv(const ExperimentSummary& summary);
void emit_summary(const ExperimentSummary& summary, const std::filesystem::path& path);

ExperimentSummary parse_summary_csv(std::string_view text);
ExperimentSummary parse_summary(const std::filesystem::path& path);

}  // namespace swarmsim
