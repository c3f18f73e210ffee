#include "qdisc/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace qdisc {

std::string_view to_string(NoiseOrder order) {
  return order == NoiseOrder::kBeforeUnruh ? "before-unruh" : "after-unruh";
}

NoiseOrder parse_noise_order(std::string_view name) {
  if (name == "before-unruh") return NoiseOrder::kBeforeUnruh;
  if (name == "after-unruh") return NoiseOrder::kAfterUnruh;
  throw std::invalid_argument("unknown noise order '" + std::string(name) +
                              "' (expected before-unruh, after-unruh)");
}

TwoQubitBloch reduced_state(const ScenarioParams& params) {
  const PauliTransfer noise =
      bloch_transfer(make_channel(params.channel, params.k)).as_pauli_transfer();
  const TwoQubitBloch initial = werner(params.p);
  if (params.order == NoiseOrder::kBeforeUnruh) {
    return reduce_pair(apply_transfers(noise, noise, initial), params.ra, params.rb, params.pair);
  }
  return apply_transfers(noise, noise, reduce_pair(initial, params.ra, params.rb, params.pair));
}

ScenarioResult evaluate_scenario(const ScenarioParams& params) {
  ScenarioResult out;
  out.reduced = reduced_state(params);
  out.breakdown = geometric_discord(out.reduced);
  out.branch = branch_condition(out.reduced);
  out.d_closed = closed_form_discord(params);
  return out;
}

double numeric_discord(const ScenarioParams& params) {
  return geometric_discord(reduced_state(params)).value;
}

double base_factor(WernerParam p, ChannelKind channel, DecayProbability k) {
  const double c = 2.0 * p.value() - 1.0;
  const double kv = k.value();
  const double q4 = std::pow(1.0 - 2.0 * kv, 4);
  switch (channel) {
    case ChannelKind::kNone: return c * c / 18.0;
    case ChannelKind::kPhaseDamping: return (1.0 - kv) * c * (1.0 - kv) * c / 18.0;
    case ChannelKind::kPhaseFlip: return c * c * q4 / 18.0;
    case ChannelKind::kBitFlip: return c * c * (1.0 + q4) / 36.0;
  }
  throw std::invalid_argument("base_factor: unknown channel");
}

double closed_form_discord(const ScenarioParams& params) {
  auto weight = [](const AccelerationParam& r, ModeRegion region) {
    return region == ModeRegion::kI ? r.cos() * r.cos() : r.sin() * r.sin();
  };
  return base_factor(params.p, params.channel, params.k) * weight(params.ra, params.pair.alice) *
         weight(params.rb, params.pair.bob);
}

double tradeoff_sum(WernerParam p, ChannelKind channel, DecayProbability k) {
  return base_factor(p, channel, k);
}

std::vector<double> GridRange::values() const {
  if (steps == 0) throw std::invalid_argument("GridRange: steps must be positive");
  if (steps == 1) return {lo};
  std::vector<double> out(steps);
  const double span = hi - lo;
  for (std::size_t i = 0; i < steps; ++i)
    out[i] = lo + span * static_cast<double>(i) / static_cast<double>(steps - 1);
  // Pin the endpoint exactly so hi (e.g. pi/4) survives range validation.
  out.back() = hi;
  return out;
}

GridValues expand(const GridSpec& spec) {
  GridValues out;
  out.channel = spec.channel;
  out.p = spec.p.values();
  out.k = spec.channel == ChannelKind::kNone ? std::vector<double>{0.0} : spec.k.values();
  out.r = spec.r.values();
  out.pairs = spec.pairs;
  out.order = spec.order;
  return out;
}

std::vector<DiscrepancyRecord> discrepancy_map(const GridSpec& spec, unsigned threads) {
  return discrepancy_map(expand(spec), threads);
}

std::vector<DiscrepancyRecord> discrepancy_map(const GridValues& grid, unsigned threads) {
  const auto& ps = grid.p;
  const auto& ks = grid.k;
  const auto& rs = grid.r;
  const std::size_t per_p = ks.size() * rs.size() * grid.pairs.size();
  std::vector<DiscrepancyRecord> out(ps.size() * per_p);

  // Parameter validation happens here, on the calling thread.
  std::vector<WernerParam> p_params;
  for (double p : ps) p_params.emplace_back(p);
  std::vector<DecayProbability> k_params;
  for (double k : ks) k_params.emplace_back(k);
  std::vector<AccelerationParam> r_params;
  for (double r : rs) r_params.push_back(AccelerationParam::from_radians(r));

  auto fill = [&](std::size_t pi) {
    std::size_t idx = pi * per_p;
    for (const auto& k : k_params)
      for (const auto& r : r_params)
        for (const auto& pair : grid.pairs) {
          DiscrepancyRecord& rec = out[idx++];
          rec.params = ScenarioParams{p_params[pi], r, r, grid.channel, k, pair, grid.order};
          const ScenarioResult res = evaluate_scenario(rec.params);
          rec.d_closed = res.d_closed;
          rec.d_numeric = res.breakdown.value;
          rec.abs_diff = std::abs(rec.d_closed - rec.d_numeric);
          rec.branch_ok = res.branch.ok;
        }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, ps.size()));
  if (workers <= 1) {
    for (std::size_t pi = 0; pi < ps.size(); ++pi) fill(pi);
    return out;
  }

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t pi = w; pi < ps.size(); pi += workers) fill(pi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace qdisc
