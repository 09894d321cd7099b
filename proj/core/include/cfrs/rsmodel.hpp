#pragma once

#include <utility>
#include <vector>

#include "cfrs/rng.hpp"
#include "cfrs/scenario.hpp"
#include "cfrs/types.hpp"

namespace cfrs {

/// Decoding-group state: M_k (the users that decode user k's common
/// message), the per-user SIC sequence over Phi_k = {j | k in M_j}, and the
/// layer cap D. Phi and M are dual views; mutations must keep them
/// consistent (checked by consistent()).
class RsConfiguration {
 public:
  RsConfiguration(int n_users, int layer_cap);

  /// The no-group initial state: M_k = {k}, Phi_k = {k} for every user.
  static RsConfiguration initial(int n_users, int layer_cap) {
    return RsConfiguration(n_users, layer_cap);
  }

  int n_users() const { return static_cast<int>(decoders_.size()); }
  int layer_cap() const { return layer_cap_; }

  /// M_k, ascending user ids.
  const std::vector<int>& decoders(int k) const { return decoders_.at(k); }
  /// Phi_k in decoding sequence: first element is decoded first (largest pi).
  const std::vector<int>& sic_order(int k) const { return sic_order_.at(k); }

  /// Phi_k as a sorted set.
  std::vector<int> phi(int k) const;
  /// Psi_k = K \ Phi_k, sorted.
  std::vector<int> psi(int k) const;
  /// i in M_k?
  bool decodes(int i, int k) const;
  /// pi_k(j) in {1..|Phi_k|}; larger means decoded earlier. Throws if j is
  /// not in Phi_k.
  int pi(int k, int j) const;
  /// Omega_{i,k}: users whose common messages user i decodes after user
  /// k's, i.e. the SIC-order suffix past k.
  std::vector<int> omega(int i, int k) const;

  /// Adds j to M_k and installs a fresh SIC sequence for user j
  /// (must enumerate exactly the new Phi_j).
  void admit(int k, int j, std::vector<int> new_sic_order_j);
  /// Removes user k_tilde from every foreign group and resets M_{k_tilde}
  /// to {k_tilde}; remaining SIC sequences keep their relative order.
  /// Returns the owners of groups that lost k_tilde.
  std::vector<int> purge(int k_tilde);

  bool consistent() const;

  bool operator==(const RsConfiguration&) const = default;

 private:
  int layer_cap_ = 1;
  std::vector<std::vector<int>> decoders_;   // M_k
  std::vector<std::vector<int>> sic_order_;  // Phi_k, decode sequence
};

/// Aggregate private/common beamformers, one N*L column per user.
struct BeamformerSet {
  CMat w_private;  // (N*L) x K
  CMat w_common;   // (N*L) x K

  static BeamformerSet zero(int n_aps, int antennas_per_ap, int n_users) {
    return {CMat::Zero(n_aps * antennas_per_ap, n_users),
            CMat::Zero(n_aps * antennas_per_ap, n_users)};
  }

  int aggregate_dim() const { return static_cast<int>(w_private.rows()); }
  int n_users() const { return static_cast<int>(w_private.cols()); }

  /// Per-AP block of a beam (length L).
  auto private_block(int ap, int user, int antennas_per_ap) {
    return w_private.col(user).segment(ap * antennas_per_ap, antennas_per_ap);
  }
  auto private_block(int ap, int user, int antennas_per_ap) const {
    return w_private.col(user).segment(ap * antennas_per_ap, antennas_per_ap);
  }
  auto common_block(int ap, int user, int antennas_per_ap) {
    return w_common.col(user).segment(ap * antennas_per_ap, antennas_per_ap);
  }
  auto common_block(int ap, int user, int antennas_per_ap) const {
    return w_common.col(user).segment(ap * antennas_per_ap, antennas_per_ap);
  }
};

struct RateAllocation {
  Vec r_private;  // bit/s per user
  Vec r_common;

  static RateAllocation zero(int n_users) {
    return {Vec::Zero(n_users), Vec::Zero(n_users)};
  }
};

/// SINR of user k decoding its own private message: desired |h_k^H w_k^p|^2
/// over all other private beams, the common beams user k does not decode,
/// and noise.
double private_sinr(int k, const BeamformerSet& w, const ChannelState& h,
                    const RsConfiguration& rs, double sigma2_w);

/// SINR of user i decoding the common message of user k (requires i in
/// M_k): all private beams plus noise (T_i), undecoded commons, and the
/// commons i decodes after k's.
double common_sinr(int i, int k, const BeamformerSet& w, const ChannelState& h,
                   const RsConfiguration& rs, double sigma2_w);

/// SINR of user i decoding the *private* message of user k; reduces to
/// private_sinr(k) at i == k.
double cross_private_sinr(int i, int k, const BeamformerSet& w, const ChannelState& h,
                          const RsConfiguration& rs, double sigma2_w);

/// Grouping-potential matrices (Gamma_p, Gamma_c), entry (i, k) comparing
/// user i against user k decoding k's private/common message:
///   Gamma_p(i,k) = cross_private_sinr(i,k)/private_sinr(k) - 1
///   Gamma_c(i,k) = common-SINR ratio against the owner's own decode.
/// Entries with i already in M_k are -inf, as are whole columns whose
/// reference SINR is not strictly positive.
std::pair<Mat, Mat> group_potentials(const BeamformerSet& w, const ChannelState& h,
                                     const RsConfiguration& rs, double sigma2_w);

/// Reliable rates: r_k^p = B log2(1+gamma_k^p); the common rate is capped
/// by the worst decoder in M_k (zero when the common beam is zero).
RateAllocation achievable_rates(const BeamformerSet& w, const ChannelState& h,
                                const RsConfiguration& rs, double sigma2_w,
                                double bandwidth_hz);

/// Transmit power of AP n: sum of squared norms of its private and common
/// beam blocks.
double per_ap_power(const BeamformerSet& w, int ap, int antennas_per_ap);

/// Squared network-wide QoS deviation: sum_k |(r_k^p + r_k^c)/r_k^des - 1|^2.
double qos_gap(const RateAllocation& rates, const Vec& qos_bps);

/// Symbol-level estimates from the transmission oracle. SINRs are ratios
/// of empirical desired power to empirical interference-plus-noise power;
/// both are exposed so a zero-interference case stays inspectable instead
/// of dividing by zero.
struct EmpiricalSinr {
  Vec private_desired;
  Vec private_interference;
  Mat common_desired;       // (i, k), meaningful for i in M_k
  Mat common_interference;  // (i, k)
  Vec ap_power;             // empirical E{x_n^H x_n}

  double private_sinr(int k) const {
    return private_desired[k] / private_interference[k];
  }
  double common_sinr(int i, int k) const {
    return common_desired(i, k) / common_interference(i, k);
  }
};

/// Draws i.i.d. unit-variance Gaussian symbols, assembles the aggregate
/// transmit vector, forms each received sample, and decodes by SIC
/// (genie-aided removal, higher pi first, private last), accumulating
/// desired and residual powers per decoded message.
EmpiricalSinr simulate_transmission(const BeamformerSet& w, const ChannelState& h,
                                    const RsConfiguration& rs, double sigma2_w,
                                    int n_samples, Rng& rng);

}  // namespace cfrs
