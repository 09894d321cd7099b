#pragma once

#include <iosfwd>

#include "cfrs/config.hpp"
#include "cfrs/rsmodel.hpp"
#include "cfrs/scenario.hpp"
#include "cfrs/types.hpp"

namespace cfrs {

/// Floor applied to the SINR slacks at the linearization point so the
/// 1/t and 1/t^2 surrogate coefficients stay finite when a link dies.
inline constexpr double kSinrFloor = 1e-8;

enum class SolverStatus { kOptimal, kMaxIter, kInfeasibleNumeric };

/// Linearization point of one SCA iteration. Invariant: the point is
/// feasible for the slack problem (per-AP power holds and each anchor
/// slack is at most the SINR the anchor beams achieve).
struct ScaState {
  BeamformerSet anchor_beams;
  Vec anchor_t_private;
  Vec anchor_t_common;
  int iteration = 0;
  double last_objective = 0.0;
  RateAllocation last_rates;  // rates consistent with the anchor slacks
};

struct SubproblemSolution {
  BeamformerSet beams;
  RateAllocation rates;
  Vec t_private;
  Vec t_common;
  double objective = 0.0;
  SolverStatus status = SolverStatus::kOptimal;
  int newton_steps = 0;
};

/// Matched-filter start: per AP the power budget is split equally across
/// the users it can reach, each private block pointing along its own
/// channel block; common beams start at zero. Anchor slacks are the SINRs
/// this point achieves (floored), which makes both surrogates tight.
ScaState initialize_sca(const ChannelState& h, const RsConfiguration& rs,
                        const ScenarioConfig& config);

/// Re-anchors at an externally produced beam set (e.g. after the recovery
/// pipeline), so the next subproblem is feasible at its linearization point.
ScaState anchor_from_beams(const BeamformerSet& w, const ChannelState& h,
                           const RsConfiguration& rs, const ScenarioConfig& config);

/// Solves the convexified subproblem at the state's linearization point:
/// minimize the QoS deviation over beams and SINR slacks subject to per-AP
/// power and the private/common surrogate constraints, with the rate
/// variables eliminated analytically (their optimum given the slacks is
/// min(achievable sum, desired)). Backend: feasible-start log-barrier
/// interior point. Never returns a point whose objective exceeds the
/// anchor's.
SubproblemSolution solve_subproblem(const ScaState& state, const ChannelState& h,
                                    const RsConfiguration& rs, const ScenarioConfig& config);

/// One SCA iteration: solve, re-anchor at the solution, bump the counter.
/// On a numeric backend failure the input state is returned unchanged.
ScaState sca_step(const ScaState& state, const ChannelState& h, const RsConfiguration& rs,
                  const ScenarioConfig& config);

/// Value of the private surrogate constraint (<= 0 feasible) for user k at
/// (w, t_kp), linearized at (anchor, t_anchor_kp).
double private_surrogate(int k, const BeamformerSet& w, double t_kp,
                         const BeamformerSet& anchor, double t_anchor_kp,
                         const ChannelState& h, const RsConfiguration& rs, double sigma2_w);

/// Value of the common surrogate constraint (<= 0 feasible) for decoding
/// pair (i in M_k, k) at (w, t_kc), linearized at (anchor, t_anchor_kc).
double common_surrogate(int i, int k, const BeamformerSet& w, double t_kc,
                        const BeamformerSet& anchor, double t_anchor_kc,
                        const ChannelState& h, const RsConfiguration& rs, double sigma2_w);

/// Plain-text dump of the assembled subproblem (dimensions, per-constraint
/// quadratic blocks, linear terms, constants) for cross-checking against an
/// external reference solver. Format documented in the implementation.
void dump_subproblem(const ScaState& state, const ChannelState& h, const RsConfiguration& rs,
                     const ScenarioConfig& config, std::ostream& out);

}  // namespace cfrs
