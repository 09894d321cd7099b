#pragma once

#include <vector>

#include "cfrs/config.hpp"
#include "cfrs/rsmodel.hpp"
#include "cfrs/scenario.hpp"
#include "cfrs/solver.hpp"
#include "cfrs/types.hpp"

namespace cfrs {

enum class StopReason { kOneAdmission, kNoCandidate };

struct Admission {
  int user = -1;           // admitted decoder j
  int host = -1;           // group owner k
  char kind = 'p';         // which potential matrix fired, 'p' or 'c'
  double gamma = 0.0;      // Gamma value at admission
  double validation = 0.0; // validation ratio under the temporary sets
};

struct RecoveryReport {
  BlockageEvent event;
  std::vector<int> purged_from;   // group owners that lost the blocked user
  Vec boost_per_ap;               // W added to the blocked user's beams per AP
  Vec post_boost_ap_power;        // W per AP right after the boost
  std::vector<Admission> admissions;  // barbell rule: at most one
  StopReason stopped_reason = StopReason::kNoCandidate;
};

/// Removes the blocked user from every foreign group and resets its own
/// group to itself. Optionally reports which groups lost it.
RsConfiguration purge_user(const RsConfiguration& rs, int k_tilde,
                           std::vector<int>* purged_from = nullptr);

/// Zeroes the private and common beam blocks of the blocked link; all
/// other blocks are untouched.
BeamformerSet zero_blocked_beams(const BeamformerSet& w, const BlockageEvent& event,
                                 int antennas_per_ap);

/// Spends each unaffected AP's spare power on the blocked user's private
/// beam: the block is rescaled along its own direction so the AP lands
/// exactly on its power budget. APs where that block is zero are skipped.
BeamformerSet boost_spare_power(const BeamformerSet& w, int k_tilde, int blocked_ap,
                                const ScenarioConfig& config, Vec* boost_per_ap = nullptr);

struct GroupingResult {
  RsConfiguration rs;
  BeamformerSet beams;
  std::vector<Admission> admissions;
  StopReason reason = StopReason::kNoCandidate;
};

/// Dynamic RS grouping with the barbell stop rule: walk the potential
/// matrices from the best candidate down, admit the first candidate that
/// survives validation (merging the owner's private beam into its common
/// beam when the private potential fired), then stop.
GroupingResult dynamic_grouping(const BeamformerSet& w, const ChannelState& h,
                                const RsConfiguration& rs, const ScenarioConfig& config);

struct PipelineResult {
  ChannelState channels;
  RsConfiguration rs;
  BeamformerSet beams;
  ScaState state;
  RecoveryReport report;
};

/// Full outage reaction: block the link, zero its beams, purge the user,
/// boost spare power, regroup (RS_DYNAMIC mode only), clamp allocated
/// rates to what the new beams and sets achieve, and re-anchor the SCA
/// state at the result.
PipelineResult recovery_pipeline(const BlockageEvent& event, const ChannelState& h,
                                 const RsConfiguration& rs, const BeamformerSet& w,
                                 const ScaState& state, const ScenarioConfig& config);

}  // namespace cfrs
