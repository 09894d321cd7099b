#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfrs/config.hpp"
#include "cfrs/resilience.hpp"

namespace cfrs {

struct EventScore {
  int tick = 0;
  double r_abs = 0.0;
  double r_ada = 0.0;
  double r_rec = 0.0;
  double r = 0.0;
};

struct RunSummary {
  std::string config_hash;
  std::uint64_t seed = 0;
  Mode mode = Mode::kRsDynamic;
  std::vector<EventScore> event_scores;
  double final_performance = 0.0;
  int total_ticks = 0;
  double wall_time_s = 0.0;
};

struct RunResult {
  ScenarioConfig config;
  ResilienceTrace trace;
  RunSummary summary;
};

/// One full scenario run: build the seeded scenario, start from the
/// no-group matched-filter state, then per tick fire the recovery pipeline
/// when a blockage is scheduled and advance the SCA by one iteration. On
/// event ticks the recorded rates are the post-pipeline achievable clamp;
/// elsewhere they come from the subproblem solution. Deterministic given
/// the config.
RunResult run_scenario(const ScenarioConfig& config);

struct ModeComparison {
  RunResult rs;
  RunResult tin;
};

/// Runs RS_DYNAMIC and TIN on the identical seed, channels, and schedule.
ModeComparison compare_modes(const ScenarioConfig& config);

}  // namespace cfrs
