#include "cfrs/config.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cfrs {

using nlohmann::json;

std::string to_string(Mode mode) {
  return mode == Mode::kRsDynamic ? "rs_dynamic" : "tin";
}

Mode mode_from_string(const std::string& name) {
  if (name == "rs_dynamic") return Mode::kRsDynamic;
  if (name == "tin") return Mode::kTin;
  throw ConfigError("mode must be \"rs_dynamic\" or \"tin\", got \"" + name + "\"");
}

Vec ScenarioConfig::qos_bps() const {
  Vec out(n_users);
  if (qos_rate_bps.size() == 1) {
    out.setConstant(qos_rate_bps[0]);
  } else {
    for (int k = 0; k < n_users; ++k) out[k] = qos_rate_bps.at(k);
  }
  return out;
}

int ScenarioConfig::tick_count() const {
  return static_cast<int>(std::lround(observation_length_s / tick_seconds));
}

std::vector<int> ScenarioConfig::blockage_ticks() const {
  std::vector<int> ticks;
  ticks.reserve(blockages.size());
  for (const auto& b : blockages) {
    ticks.push_back(static_cast<int>(std::lround(b.time_s / tick_seconds)));
  }
  return ticks;
}

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };

  if (schema_version != 1) fail("schema_version must be 1");
  if (n_aps < 1) fail("n_aps must be >= 1");
  if (antennas_per_ap < 1) fail("antennas_per_ap must be >= 1");
  if (n_users < 1) fail("n_users must be >= 1");
  if (!(area_half_width_m > 0)) fail("area_half_width_m must be > 0");
  if (!(bandwidth_hz > 0)) fail("bandwidth_hz must be > 0");
  if (!std::isfinite(noise_power_dbm)) fail("noise_power_dbm must be finite");
  if (!std::isfinite(max_tx_power_dbm)) fail("max_tx_power_dbm must be finite");
  if (!(pathloss_exp > 0)) fail("pathloss_exp must be > 0");
  if (!(shadowing_std_db >= 0)) fail("shadowing_std_db must be >= 0");

  if (qos_rate_bps.empty() ||
      (qos_rate_bps.size() != 1 && qos_rate_bps.size() != static_cast<std::size_t>(n_users))) {
    fail("qos_rate_bps must be a scalar or one value per user");
  }
  for (double q : qos_rate_bps) {
    if (!(q > 0)) fail("qos_rate_bps entries must be > 0");
  }

  const double lambda_sum = lambda_weights[0] + lambda_weights[1] + lambda_weights[2];
  if (std::abs(lambda_sum - 1.0) > 1e-9) fail("lambda weights must sum to 1");
  for (double l : lambda_weights) {
    if (l < 0) fail("lambda weights must be nonnegative");
  }
  if (desired_recovery_time_s < 0) fail("desired_recovery_time_s must be >= 0");

  if (eps_pot < -1.0) fail("eps_pot must be >= -1");
  if (eps_val < -1.0) fail("eps_val must be >= -1");
  if (decode_layer_cap < 1) fail("decode_layer_cap must be >= 1");

  if (!(observation_length_s > 0)) fail("observation_length_s must be > 0");
  if (!(tick_seconds > 0)) fail("tick_seconds must be > 0");
  if (tick_count() < 1) fail("observation window shorter than one tick");

  double prev = 0.0;
  int prev_tick = 0;
  for (const auto& b : blockages) {
    if (!(b.time_s > 0.0) || !(b.time_s < observation_length_s)) {
      fail("blockage times must lie strictly inside the observation interval");
    }
    if (b.time_s <= prev) fail("blockage times must be strictly increasing");
    const int tick = static_cast<int>(std::lround(b.time_s / tick_seconds));
    if (tick <= prev_tick && prev > 0.0) fail("blockage times must map to distinct ticks");
    if (tick < 1 || tick >= tick_count()) {
      fail("blockage times must map to ticks inside the observation window");
    }
    if (b.link) {
      if (b.link->ap < 0 || b.link->ap >= n_aps) fail("blockage link AP index out of range");
      if (b.link->user < 0 || b.link->user >= n_users) {
        fail("blockage link user index out of range");
      }
    }
    prev = b.time_s;
    prev_tick = tick;
  }
}

namespace {

const char* const kKnownKeys[] = {
    "schema_version", "n_aps", "antennas_per_ap", "n_users", "area_half_width_m",
    "bandwidth_hz", "noise_power_dbm", "max_tx_power_dbm", "pathloss_ref_db",
    "pathloss_exp", "shadowing_std_db", "qos_rate_bps", "lambda_weights",
    "desired_recovery_time_s", "eps_pot", "eps_val", "decode_layer_cap",
    "blockage_times_s", "blockage_links", "observation_length_s", "tick_seconds",
    "seed", "mode"};

json to_json(const ScenarioConfig& c) {
  json j;
  j["schema_version"] = c.schema_version;
  j["n_aps"] = c.n_aps;
  j["antennas_per_ap"] = c.antennas_per_ap;
  j["n_users"] = c.n_users;
  j["area_half_width_m"] = c.area_half_width_m;
  j["bandwidth_hz"] = c.bandwidth_hz;
  j["noise_power_dbm"] = c.noise_power_dbm;
  j["max_tx_power_dbm"] = c.max_tx_power_dbm;
  j["pathloss_ref_db"] = c.pathloss_ref_db;
  j["pathloss_exp"] = c.pathloss_exp;
  j["shadowing_std_db"] = c.shadowing_std_db;
  j["qos_rate_bps"] = c.qos_rate_bps;
  j["lambda_weights"] = c.lambda_weights;
  j["desired_recovery_time_s"] = c.desired_recovery_time_s;
  j["eps_pot"] = c.eps_pot;
  j["eps_val"] = c.eps_val;
  j["decode_layer_cap"] = c.decode_layer_cap;
  json times = json::array();
  for (const auto& b : c.blockages) times.push_back(b.time_s);
  j["blockage_times_s"] = times;
  bool any_explicit = false;
  for (const auto& b : c.blockages) any_explicit = any_explicit || b.link.has_value();
  if (any_explicit) {
    json links = json::array();
    for (const auto& b : c.blockages) {
      if (b.link) {
        links.push_back(json::array({b.link->ap, b.link->user}));
      } else {
        links.push_back("random");
      }
    }
    j["blockage_links"] = links;
  } else {
    j["blockage_links"] = "random";
  }
  j["observation_length_s"] = c.observation_length_s;
  j["tick_seconds"] = c.tick_seconds;
  j["seed"] = c.seed;
  j["mode"] = to_string(c.mode);
  return j;
}

}  // namespace

ScenarioConfig parse_config(const std::string& json_text, const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError(origin + ": config root must be a JSON object");

  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : kKnownKeys) known = known || item.key() == key;
    if (!known) throw ConfigError(origin + ": unknown config key \"" + item.key() + "\"");
  }
  if (!j.contains("schema_version")) {
    throw ConfigError(origin + ": missing required key \"schema_version\"");
  }

  ScenarioConfig c;
  try {
    c.schema_version = j.at("schema_version").get<int>();
    if (j.contains("n_aps")) c.n_aps = j["n_aps"].get<int>();
    if (j.contains("antennas_per_ap")) c.antennas_per_ap = j["antennas_per_ap"].get<int>();
    if (j.contains("n_users")) c.n_users = j["n_users"].get<int>();
    if (j.contains("area_half_width_m")) c.area_half_width_m = j["area_half_width_m"].get<double>();
    if (j.contains("bandwidth_hz")) c.bandwidth_hz = j["bandwidth_hz"].get<double>();
    if (j.contains("noise_power_dbm")) c.noise_power_dbm = j["noise_power_dbm"].get<double>();
    if (j.contains("max_tx_power_dbm")) c.max_tx_power_dbm = j["max_tx_power_dbm"].get<double>();
    if (j.contains("pathloss_ref_db")) c.pathloss_ref_db = j["pathloss_ref_db"].get<double>();
    if (j.contains("pathloss_exp")) c.pathloss_exp = j["pathloss_exp"].get<double>();
    if (j.contains("shadowing_std_db")) c.shadowing_std_db = j["shadowing_std_db"].get<double>();
    if (j.contains("qos_rate_bps")) {
      if (j["qos_rate_bps"].is_array()) {
        c.qos_rate_bps = j["qos_rate_bps"].get<std::vector<double>>();
      } else {
        c.qos_rate_bps = {j["qos_rate_bps"].get<double>()};
      }
    }
    if (j.contains("lambda_weights")) {
      auto v = j["lambda_weights"].get<std::vector<double>>();
      if (v.size() != 3) throw ConfigError("lambda_weights must have exactly 3 entries");
      c.lambda_weights = {v[0], v[1], v[2]};
    }
    if (j.contains("desired_recovery_time_s")) {
      c.desired_recovery_time_s = j["desired_recovery_time_s"].get<double>();
    }
    if (j.contains("eps_pot")) c.eps_pot = j["eps_pot"].get<double>();
    if (j.contains("eps_val")) c.eps_val = j["eps_val"].get<double>();
    if (j.contains("decode_layer_cap")) c.decode_layer_cap = j["decode_layer_cap"].get<int>();
    if (j.contains("blockage_times_s")) {
      c.blockages.clear();
      for (const auto& t : j["blockage_times_s"]) {
        c.blockages.push_back({t.get<double>(), std::nullopt});
      }
    }
    if (j.contains("blockage_links") && !j["blockage_links"].is_string()) {
      const auto& links = j["blockage_links"];
      if (!links.is_array() || links.size() != c.blockages.size()) {
        throw ConfigError("blockage_links must be \"random\" or one [ap, user] per blockage time");
      }
      for (std::size_t i = 0; i < c.blockages.size(); ++i) {
        if (links[i].is_string()) continue;  // "random" per entry
        if (!links[i].is_array() || links[i].size() != 2) {
          throw ConfigError("blockage_links entries must be [ap, user] pairs");
        }
        c.blockages[i].link = LinkRef{links[i][0].get<int>(), links[i][1].get<int>()};
      }
    }
    if (j.contains("observation_length_s")) {
      c.observation_length_s = j["observation_length_s"].get<double>();
    }
    if (j.contains("tick_seconds")) c.tick_seconds = j["tick_seconds"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("mode")) c.mode = mode_from_string(j["mode"].get<std::string>());
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError(origin + ": " + e.what());
  }

  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::string canonical_json(const ScenarioConfig& config) {
  // nlohmann::json objects keep keys sorted, so dump() is canonical.
  return to_json(config).dump();
}

std::string config_hash(const ScenarioConfig& config) {
  const std::string canon = canonical_json(config);
  std::uint64_t hash = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char ch : canon) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace cfrs
