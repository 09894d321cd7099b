#pragma once

#include <array>
#include <vector>

#include "cfrs/regroup.hpp"
#include "cfrs/rsmodel.hpp"
#include "cfrs/types.hpp"

namespace cfrs {

/// Recovery detection: the trace counts as settled after this many
/// consecutive ticks whose performance moves less than the delta.
inline constexpr double kRecoveryDelta = 1e-4;
inline constexpr int kRecoveryWindow = 3;

struct TickRecord {
  int tick = 0;
  double time_s = 0.0;
  Vec r_private;  // bit/s per user
  Vec r_common;
  double xi = 0.0;    // QoS deviation of the recorded allocation
  double perf = 0.0;  // mean normalized rate
  double common_rate_sum_bps = 0.0;
  bool event = false;
};

struct EventRecord {
  int tick = 0;
  double time_s = 0.0;
  RecoveryReport report;
  double pre_event_perf = 0.0;  // performance at the tick before the hit
  int recovery_tick = 0;        // t_n
  double r_abs = 0.0;
  double r_ada = 0.0;
  double r_rec = 0.0;
  double r_combined = 0.0;
  bool antifragile = false;  // performance at t_n exceeds pre-event level
};

struct ResilienceTrace {
  std::vector<TickRecord> ticks;
  std::vector<EventRecord> events;
};

/// Mean normalized allocation (1/K) sum_k (r_k^p + r_k^c)/r_k^des.
/// Uncapped; the optimizer drives it toward 1 from below.
double instantaneous_performance(const RateAllocation& rates, const Vec& qos_bps);

struct ResilienceScore {
  double r_abs = 0.0;
  double r_ada = 0.0;
  double r_rec = 0.0;
  double r = 0.0;
};

/// Absorption = performance at the event tick, adaptation = performance at
/// the recovery tick, recovery score = 1 if the gap fits inside the
/// desired recovery time, else T0 over the gap; combined linearly with the
/// lambda weights. Throws std::invalid_argument if tn_tick < t0_tick.
ResilienceScore resilience_score(const ResilienceTrace& trace, int t0_tick, int tn_tick,
                                 const std::array<double, 3>& lambda, double t0_desired_s);

/// First tick after t0 at which performance has moved by less than
/// kRecoveryDelta for kRecoveryWindow consecutive ticks, truncated at the
/// next event tick or the end of the trace, whichever comes first.
int detect_recovery_tick(const ResilienceTrace& trace, int t0_tick);

}  // namespace cfrs
