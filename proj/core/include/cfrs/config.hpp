#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfrs/types.hpp"

namespace cfrs {

enum class Mode { kRsDynamic, kTin };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);

struct LinkRef {
  int ap = 0;
  int user = 0;
};

/// One scheduled blockage: a time plus either an explicit AP-user link or
/// nothing, in which case the link is drawn from the seeded scenario
/// generator when the scenario is built.
struct BlockageSpec {
  double time_s = 0.0;
  std::optional<LinkRef> link;
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every experiment knob. Defaults reproduce the reference evaluation
/// setup: 2 APs x 4 antennas, 12 users on a 500 m square, 10 MHz, -100 dBm
/// noise, 32 dBm per AP, 12 Mbps QoS, blockages at 2/4/6/8 s over 10 s.
struct ScenarioConfig {
  int schema_version = 1;

  // geometry
  int n_aps = 2;
  int antennas_per_ap = 4;
  int n_users = 12;
  double area_half_width_m = 250.0;

  // radio
  double bandwidth_hz = 10e6;
  double noise_power_dbm = -100.0;
  double max_tx_power_dbm = 32.0;
  double pathloss_ref_db = 30.5;
  double pathloss_exp = 3.67;
  double shadowing_std_db = 8.0;

  // QoS and resilience weighting
  std::vector<double> qos_rate_bps = {12e6};  // scalar broadcast or per user
  std::array<double, 3> lambda_weights = {0.0, 1.0, 0.0};
  double desired_recovery_time_s = 0.0;

  // RS grouping thresholds
  double eps_pot = -0.4;
  double eps_val = -0.5;
  int decode_layer_cap = 3;

  // schedule
  std::vector<BlockageSpec> blockages = {
      {2.0, std::nullopt}, {4.0, std::nullopt}, {6.0, std::nullopt}, {8.0, std::nullopt}};
  double observation_length_s = 10.0;
  double tick_seconds = 0.05;

  std::uint64_t seed = 1;
  Mode mode = Mode::kRsDynamic;

  double noise_power_w() const { return dbm_to_watt(noise_power_dbm); }
  double max_tx_power_w() const { return dbm_to_watt(max_tx_power_dbm); }

  /// Per-user QoS targets, broadcasting a scalar entry to n_users.
  Vec qos_bps() const;

  int tick_count() const;
  /// Tick index of each blockage, in schedule order.
  std::vector<int> blockage_ticks() const;

  /// Throws ConfigError naming the violated invariant.
  void validate() const;
};

/// Parses a JSON config. Missing optional keys take the defaults above;
/// schema_version is required. Unknown keys are rejected.
ScenarioConfig parse_config(const std::string& json_text, const std::string& origin = "<string>");
ScenarioConfig load_config(const std::string& path);

/// Canonical (sorted-key) JSON for hashing and reproducibility records.
std::string canonical_json(const ScenarioConfig& config);
/// FNV-1a 64-bit hash of the canonical form, as a hex string.
std::string config_hash(const ScenarioConfig& config);

}  // namespace cfrs
