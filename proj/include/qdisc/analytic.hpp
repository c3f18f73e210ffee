#pragma once

#include <cstddef>
#include <numbers>
#include <string_view>
#include <vector>

#include "qdisc/bloch.hpp"
#include "qdisc/channels.hpp"
#include "qdisc/discord.hpp"
#include "qdisc/unruh.hpp"

namespace qdisc {

/// Whether local noise acts on the inertial state before the mode
/// transformation (the default) or on the reduced pair afterwards.
enum class NoiseOrder { kBeforeUnruh, kAfterUnruh };

std::string_view to_string(NoiseOrder order);
NoiseOrder parse_noise_order(std::string_view name);

struct ScenarioParams {
  WernerParam p{1.0};
  AccelerationParam ra = AccelerationParam::from_radians(0.0);
  AccelerationParam rb = AccelerationParam::from_radians(0.0);
  ChannelKind channel = ChannelKind::kNone;
  DecayProbability k{0.0};  // ignored when channel is kNone
  RegionPair pair{};
  NoiseOrder order = NoiseOrder::kBeforeUnruh;
};

/// Werner state -> local channel on both qubits -> region-pair reduction
/// (or reduction first, for kAfterUnruh).
TwoQubitBloch reduced_state(const ScenarioParams& params);

struct ScenarioResult {
  TwoQubitBloch reduced;
  DiscordBreakdown breakdown;
  BranchReport branch;
  double d_closed = 0.0;
};

ScenarioResult evaluate_scenario(const ScenarioParams& params);

/// d_numeric: geometric discord of reduced_state(params).
double numeric_discord(const ScenarioParams& params);

/// r-independent prefactor of the closed forms:
///   none           (2p-1)^2 / 18
///   phase damping  [(1-k)(2p-1)]^2 / 18
///   phase flip     (2p-1)^2 (1-2k)^4 / 18
///   bit flip       (2p-1)^2 (1 + (1-2k)^4) / 36
double base_factor(WernerParam p, ChannelKind channel, DecayProbability k);

/// base_factor times cos^2 or sin^2 of each side's acceleration parameter,
/// cos^2 for region I and sin^2 for region II.
double closed_form_discord(const ScenarioParams& params);

/// Constant the four region-pair closed forms sum to.
double tradeoff_sum(WernerParam p, ChannelKind channel, DecayProbability k);

struct DiscrepancyRecord {
  ScenarioParams params;
  double d_closed = 0.0;
  double d_numeric = 0.0;
  double abs_diff = 0.0;
  bool branch_ok = false;
};

struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 1;  // steps == 1 yields {lo}

  std::vector<double> values() const;
};

struct GridSpec {
  ChannelKind channel = ChannelKind::kNone;
  GridRange p{0.5, 1.0, 101};
  GridRange r{0.0, std::numbers::pi / 4.0, 101};  // r_a = r_b = r
  GridRange k{0.0, 1.0, 101};                     // collapsed to {0} for kNone
  std::vector<RegionPair> pairs{kAllRegionPairs.begin(), kAllRegionPairs.end()};
  NoiseOrder order = NoiseOrder::kBeforeUnruh;
};

/// Explicit axis values of a sweep.
struct GridValues {
  ChannelKind channel = ChannelKind::kNone;
  std::vector<double> p;
  std::vector<double> k;
  std::vector<double> r;
  std::vector<RegionPair> pairs;
  NoiseOrder order = NoiseOrder::kBeforeUnruh;
};

/// Expands the ranges; k collapses to {0} for the noiseless channel.
GridValues expand(const GridSpec& spec);

/// One record per (p, k, r, pair), in that lexicographic order. Grid points
/// are evaluated on `threads` worker threads (0 picks the hardware count);
/// the output order does not depend on it.
std::vector<DiscrepancyRecord> discrepancy_map(const GridValues& grid, unsigned threads = 0);
std::vector<DiscrepancyRecord> discrepancy_map(const GridSpec& spec, unsigned threads = 0);

}  // namespace qdisc
