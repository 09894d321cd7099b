#include "cfrs/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace cfrs {

Topology generate_topology(const ScenarioConfig& config, Rng& rng) {
  Topology topo;
  const double a = config.area_half_width_m;
  topo.ap_positions.reserve(config.n_aps);
  for (int n = 0; n < config.n_aps; ++n) {
    const double x = rng.uniform(-a, a);
    const double y = rng.uniform(-a, a);
    topo.ap_positions.emplace_back(x, y);
  }
  topo.user_positions.reserve(config.n_users);
  for (int k = 0; k < config.n_users; ++k) {
    const double x = rng.uniform(-a, a);
    const double y = rng.uniform(-a, a);
    topo.user_positions.emplace_back(x, y);
  }
  return topo;
}

double large_scale_gain(double distance_m, const ScenarioConfig& config, double shadowing_db) {
  const double d = std::max(distance_m, 1.0);  // 1 m floor, keeps the model finite
  const double pathloss_db =
      config.pathloss_ref_db + 10.0 * config.pathloss_exp * std::log10(d);
  return std::pow(10.0, -(pathloss_db + shadowing_db) / 10.0);
}

ChannelState draw_channels(const Topology& topology, const ScenarioConfig& config, Rng& rng) {
  const int n_aps = static_cast<int>(topology.ap_positions.size());
  const int n_users = static_cast<int>(topology.user_positions.size());
  const int l = config.antennas_per_ap;
  ChannelState ch(n_aps, l, n_users);
  for (int n = 0; n < n_aps; ++n) {
    for (int k = 0; k < n_users; ++k) {
      const double d = (topology.ap_positions[n] - topology.user_positions[k]).norm();
      const double shadow_db = config.shadowing_std_db * rng.standard_normal();
      const double amplitude = std::sqrt(large_scale_gain(d, config, shadow_db));
      auto block = ch.block(n, k);
      for (int a = 0; a < l; ++a) {
        block[a] = amplitude * rng.standard_complex_normal();
      }
    }
  }
  return ch;
}

ChannelState apply_blockage(const ChannelState& channels, const BlockageEvent& event) {
  if (event.ap < 0 || event.ap >= channels.n_aps()) {
    throw std::out_of_range("apply_blockage: AP index out of range");
  }
  if (event.user < 0 || event.user >= channels.n_users()) {
    throw std::out_of_range("apply_blockage: user index out of range");
  }
  ChannelState out = channels;
  out.set_blocked(event.ap, event.user);
  return out;
}

std::vector<BlockageEvent> resolve_blockage_schedule(const ScenarioConfig& config, Rng& rng) {
  std::vector<BlockageEvent> events;
  events.reserve(config.blockages.size());
  for (const auto& spec : config.blockages) {
    BlockageEvent ev;
    ev.time_s = spec.time_s;
    if (spec.link) {
      ev.ap = spec.link->ap;
      ev.user = spec.link->user;
    } else {
      ev.ap = rng.uniform_int(config.n_aps);
      ev.user = rng.uniform_int(config.n_users);
    }
    events.push_back(ev);
  }
  return events;
}

Scenario build_scenario(const ScenarioConfig& config) {
  Rng rng(config.seed);
  Topology topo = generate_topology(config, rng);
  ChannelState channels = draw_channels(topo, config, rng);
  std::vector<BlockageEvent> events = resolve_blockage_schedule(config, rng);
  return Scenario{std::move(topo), std::move(channels), std::move(events)};
}

}  // namespace cfrs
