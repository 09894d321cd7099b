#pragma once

#include <stdexcept>
#include <string>

#include "cfrs/runner.hpp"

namespace cfrs {

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kTraceSchemaVersion = 1;

/// CSV trace: comment header with schema version and config hash, then one
/// row per tick with columns
///   tick,time_s,r_p_<k>...,r_c_<k>...,xi,perf,common_rate_sum_bps,event
std::string trace_to_csv(const RunResult& result);
void write_trace_csv(const RunResult& result, const std::string& path);

/// JSON trace: full per-tick records plus recovery reports and resilience
/// tuples; round-trips structurally through trace_from_json.
std::string trace_to_json(const RunResult& result);
RunResult trace_from_json(const std::string& json_text);
void write_trace_json(const RunResult& result, const std::string& path);
RunResult load_trace_json(const std::string& path);

/// Two-mode comparison table: per tick the RS and TIN performance plus the
/// RS common-rate sum.
std::string comparison_to_csv(const ModeComparison& cmp);
void write_comparison_csv(const ModeComparison& cmp, const std::string& path);

}  // namespace cfrs
