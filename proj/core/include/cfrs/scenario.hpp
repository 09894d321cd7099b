#pragma once

#include <cstdint>
#include <vector>

#include "cfrs/config.hpp"
#include "cfrs/rng.hpp"
#include "cfrs/types.hpp"

namespace cfrs {

struct Topology {
  std::vector<Eigen::Vector2d> ap_positions;
  std::vector<Eigen::Vector2d> user_positions;
};

struct BlockageEvent {
  double time_s = 0.0;
  int ap = 0;
  int user = 0;
};

/// Aggregate downlink channels: one length-L block per (AP, user) link,
/// stacked over APs into the aggregate vector h_k of length N*L, plus the
/// blockage mask. A blocked link always reads as the all-zero block.
class ChannelState {
 public:
  ChannelState(int n_aps, int antennas_per_ap, int n_users)
      : n_aps_(n_aps),
        l_(antennas_per_ap),
        h_(CMat::Zero(n_aps * antennas_per_ap, n_users)),
        blocked_(static_cast<std::size_t>(n_aps) * n_users, 0) {}

  int n_aps() const { return n_aps_; }
  int antennas_per_ap() const { return l_; }
  int n_users() const { return static_cast<int>(h_.cols()); }
  int aggregate_dim() const { return static_cast<int>(h_.rows()); }

  const CMat& matrix() const { return h_; }
  CMat& matrix() { return h_; }

  /// Aggregate channel h_k (length N*L).
  auto aggregate(int user) const { return h_.col(user); }
  /// Per-AP block h_{n,k} (length L).
  auto block(int ap, int user) const { return h_.col(user).segment(ap * l_, l_); }
  auto block(int ap, int user) { return h_.col(user).segment(ap * l_, l_); }

  bool is_blocked(int ap, int user) const { return blocked_[index(ap, user)] != 0; }
  void set_blocked(int ap, int user) {
    blocked_[index(ap, user)] = 1;
    block(ap, user).setZero();
  }

 private:
  std::size_t index(int ap, int user) const {
    return static_cast<std::size_t>(ap) * h_.cols() + user;
  }

  int n_aps_ = 0;
  int l_ = 0;
  CMat h_;
  std::vector<std::uint8_t> blocked_;
};

struct Scenario {
  Topology topology;
  ChannelState channels;
  std::vector<BlockageEvent> events;
};

/// Uniform AP and user placement over the configured square; AP draws
/// precede user draws so either count can change without reshuffling the
/// other.
Topology generate_topology(const ScenarioConfig& config, Rng& rng);

/// Linear-scale large-scale gain of a link: log-distance path loss at
/// distance d (floored at 1 m) plus the given shadowing realization in dB.
double large_scale_gain(double distance_m, const ScenarioConfig& config, double shadowing_db);

/// Rayleigh fading with log-normal shadowing:
/// h_{n,k} = sqrt(beta_{n,k}) * g, g ~ CN(0, I_L). Links are drawn AP-major
/// (n outer, k inner; per link one shadowing draw then L fading draws).
ChannelState draw_channels(const Topology& topology, const ScenarioConfig& config, Rng& rng);

/// Complete blockage of one link: zeroes h at (ap, user) and marks the mask.
/// Idempotent; every other entry is untouched. Throws std::out_of_range on
/// bad indices.
ChannelState apply_blockage(const ChannelState& channels, const BlockageEvent& event);

/// Fills in the scheduled blockage links, drawing unspecified ones
/// uniformly over (AP, user) pairs from the generator. Duplicate draws are
/// allowed; a repeated link makes the later event a no-op.
std::vector<BlockageEvent> resolve_blockage_schedule(const ScenarioConfig& config, Rng& rng);

/// Seeds one generator from config.seed and draws, in order: topology,
/// channels, blockage links. Bit-identical for a fixed config.
Scenario build_scenario(const ScenarioConfig& config);

}  // namespace cfrs
