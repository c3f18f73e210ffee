#include "qdisc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qdisc/output.hpp"
#include "qdisc/sampling.hpp"

namespace qdisc {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr std::array<ChannelKind, 4> kAllChannels{ChannelKind::kNone, ChannelKind::kPhaseDamping,
                                                  ChannelKind::kPhaseFlip, ChannelKind::kBitFlip};
constexpr std::array<ChannelKind, 3> kNoisyChannels{
    ChannelKind::kPhaseDamping, ChannelKind::kPhaseFlip, ChannelKind::kBitFlip};
constexpr std::array<double, 5> kChannelKs{0.0, 0.25, 0.5, 0.75, 1.0};

// Monotonicity is checked on exact values; this absorbs last-bit noise only.
constexpr double kMonotoneSlack = 1e-14;

SuiteResult at_most(std::string name, double observed, double bound, std::string note = {}) {
  return {std::move(name), observed <= bound, observed, "<=", bound, std::move(note)};
}

SuiteResult greater_than(std::string name, double observed, double bound, std::string note = {}) {
  return {std::move(name), observed > bound, observed, ">", bound, std::move(note)};
}

std::string channel_tag(std::string base, ChannelKind kind) {
  return base + "[" + std::string(to_string(kind)) + "]";
}

ScenarioParams scenario(double p, double ra, double rb, ChannelKind channel, double k,
                        RegionPair pair, NoiseOrder order = NoiseOrder::kBeforeUnruh) {
  return ScenarioParams{WernerParam(p),
                        AccelerationParam::from_radians(ra),
                        AccelerationParam::from_radians(rb),
                        channel,
                        DecayProbability(k),
                        pair,
                        order};
}

// Unit eigenvector of a symmetric 3x3 for a simple eigenvalue.
Vec3 eigenvector(const RealSymmetric3& m, double lambda) {
  std::array<Vec3, 3> rows;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rows[i][j] = m(i, j) - (i == j ? lambda : 0.0);
  Vec3 best{};
  double best_norm = 0.0;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const Vec3& u = rows[a];
    const Vec3& v = rows[b];
    const Vec3 c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    const double n = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    if (n > best_norm) {
      best_norm = n;
      best = c;
    }
  }
  for (double& c : best) c /= best_norm;
  return best;
}

// ---------------------------------------------------------------- matrixkit

void matrixkit_suites(Sampler& rng, VerifyReport& report) {
  double kron_err = 0.0;
  for (int n = 0; n < 100; ++n) {
    const ComplexMatrix a = rng.hermitian(n % 2 ? 2 : 4);
    const ComplexMatrix b = rng.hermitian(n % 3 ? 4 : 2);
    kron_err = std::max(kron_err, std::abs(kron(a, b).trace() - a.trace() * b.trace()));
  }
  report.suites.push_back(at_most("matrixkit.kron-trace", kron_err, 1e-12));

  double eig_err = 0.0;
  for (int n = 0; n < 120; ++n) {
    const ComplexMatrix m = rng.hermitian(n < 100 ? 4 : 16);
    const auto eig = hermitian_eigenvalues(m);
    double sum = 0.0;
    for (double v : eig) sum += v;
    eig_err = std::max(eig_err, std::abs(sum - m.trace().real()));
  }
  report.suites.push_back(at_most("matrixkit.eigenvalue-trace", eig_err, 1e-10));

  double residual = 0.0;
  for (int n = 0; n < 100; ++n) {
    RealSymmetric3::Rows rows{};
    for (auto& row : rows)
      for (double& v : row) v = rng.normal();
    const RealSymmetric3 m(rows);
    for (double lambda : hermitian_eigenvalues(m)) {
      const Vec3 v = eigenvector(m, lambda);
      double r2 = 0.0;
      for (std::size_t i = 0; i < 3; ++i) {
        double mv = 0.0;
        for (std::size_t j = 0; j < 3; ++j) mv += m(i, j) * v[j];
        r2 += (mv - lambda * v[i]) * (mv - lambda * v[i]);
      }
      residual = std::max(residual, std::sqrt(r2));
    }
  }
  report.suites.push_back(at_most("matrixkit.cubic-residual", residual, tol::kEigResidual));

  double trace_err = 0.0;
  double compose_err = 0.0;
  const std::array<std::size_t, 4> dims{2, 2, 2, 2};
  for (int n = 0; n < 50; ++n) {
    const ComplexMatrix rho = rng.density_matrix(16);
    for (const auto& keep : {std::vector<std::size_t>{0, 2}, std::vector<std::size_t>{1, 3},
                             std::vector<std::size_t>{0}, std::vector<std::size_t>{1, 2, 3}}) {
      const ComplexMatrix reduced = partial_trace(rho, dims, keep);
      trace_err = std::max(trace_err, std::abs(reduced.trace() - rho.trace()));
    }
    const std::array<std::size_t, 3> first_keep{0, 1, 2};
    const std::array<std::size_t, 3> dims3{2, 2, 2};
    const std::array<std::size_t, 2> second_keep{0, 1};
    const std::array<std::size_t, 2> direct_keep{0, 1};
    const ComplexMatrix stepwise =
        partial_trace(partial_trace(rho, dims, first_keep), dims3, second_keep);
    const ComplexMatrix direct = partial_trace(rho, dims, direct_keep);
    compose_err = std::max(compose_err, max_abs_diff(stepwise, direct));
  }
  report.suites.push_back(at_most("matrixkit.partial-trace-preserves-trace", trace_err, 1e-12));
  report.suites.push_back(at_most("matrixkit.partial-trace-composes", compose_err, 1e-14));
}

// -------------------------------------------------------------------- bloch

void bloch_suites(Sampler& rng, VerifyReport& report) {
  double spectrum_err = 0.0;
  int unphysical = 0;
  for (int i = 0; i <= 100; ++i) {
    const double p = -1.0 + 2.0 * i / 100.0;
    const ComplexMatrix rho = bloch_to_density(werner(WernerParam(p)));
    if (!is_density_matrix(rho, 1e-10)) ++unphysical;
    std::array<double, 4> expected{(1 + p) / 6, (1 + p) / 6, (1 + p) / 6, (1 - p) / 2};
    std::sort(expected.begin(), expected.end(), std::greater<>());
    const auto eig = hermitian_eigenvalues(rho);
    for (std::size_t j = 0; j < 4; ++j)
      spectrum_err = std::max(spectrum_err, std::abs(eig[j] - expected[j]));
  }
  report.suites.push_back(at_most("bloch.werner-physical", unphysical, 0, "unphysical grid points"));
  report.suites.push_back(at_most("bloch.werner-spectrum", spectrum_err, 1e-10));

  double round_trip = 0.0;
  for (int n = 0; n < 100; ++n) {
    const TwoQubitBloch s = rng.two_qubit_state();
    round_trip = std::max(round_trip, max_coeff_diff(density_to_bloch(bloch_to_density(s)), s));
  }
  report.suites.push_back(at_most("bloch.round-trip", round_trip, 1e-12));
}

// ----------------------------------------------------------------- channels

void channel_suites(Sampler& rng, VerifyReport& report) {
  double completeness = 0.0;
  for (auto kind : kNoisyChannels)
    for (double k : kChannelKs)
      completeness = std::max(completeness, completeness_defect(make_channel(kind, DecayProbability(k))));
  report.suites.push_back(at_most("channels.kraus-completeness", completeness, 1e-12));

  int unphysical = 0;
  double route_err = 0.0;
  for (int n = 0; n < 100; ++n) {
    const TwoQubitBloch s = rng.two_qubit_state();
    const ComplexMatrix rho = bloch_to_density(s);
    for (std::size_t f = 0; f < kNoisyChannels.size(); ++f)
      for (double k : kChannelKs) {
        const KrausChannel ch_a = make_channel(kNoisyChannels[f], DecayProbability(k));
        const KrausChannel ch_b =
            make_channel(kNoisyChannels[(f + n) % 3], DecayProbability(1.0 - k));
        const TwoQubitBloch same = apply_local(ch_a, ch_a, s);
        if (!is_density_matrix(bloch_to_density(same), 1e-10)) ++unphysical;
        route_err = std::max(route_err,
                             max_coeff_diff(density_to_bloch(apply_kraus(ch_a, ch_a, rho)), same));
        route_err = std::max(route_err, max_coeff_diff(density_to_bloch(apply_kraus(ch_a, ch_b, rho)),
                                                       apply_local(ch_a, ch_b, s)));
      }
  }
  report.suites.push_back(at_most("channels.output-physical", unphysical, 0, "unphysical outputs"));
  report.suites.push_back(at_most("channels.kraus-vs-transfer", route_err, 1e-12));

  double semigroup = 0.0;
  for (int n = 0; n < 100; ++n) {
    const double k1 = rng.uniform();
    const double k2 = rng.uniform();
    const double combined = k1 + k2 - 2.0 * k1 * k2;
    for (auto family : {ChannelKind::kPhaseFlip, ChannelKind::kBitFlip}) {
      const auto t1 = bloch_transfer(make_channel(family, DecayProbability(k1)));
      const auto t2 = bloch_transfer(make_channel(family, DecayProbability(k2)));
      const auto t12 = bloch_transfer(make_channel(family, DecayProbability(combined)));
      for (std::size_t i = 0; i < 3; ++i)
        semigroup = std::max(semigroup, std::abs(t1.scale[i] * t2.scale[i] - t12.scale[i]));
    }
  }
  report.suites.push_back(at_most("channels.flip-semigroup", semigroup, 1e-12));
}

// -------------------------------------------------------------------- unruh

void unruh_suites(Sampler& rng, VerifyReport& report) {
  double oracle_err = 0.0;
  double purity_err = 0.0;
  int unphysical_dilated = 0;
  int unphysical_reduced = 0;
  for (int n = 0; n < 200; ++n) {
    const TwoQubitBloch s = rng.two_qubit_state();
    const auto ra = AccelerationParam::from_radians(rng.uniform(0.0, kQuarterPi));
    const auto rb = AccelerationParam::from_radians(rng.uniform(0.0, kQuarterPi));
    const ComplexMatrix rho = bloch_to_density(s);
    const ComplexMatrix full = dilate_state(rho, ra, rb);
    if (!is_density_matrix(full, 1e-10)) ++unphysical_dilated;
    purity_err = std::max(purity_err, std::abs(hs_inner(full, full) - hs_inner(rho, rho)));
    for (const auto& pair : kAllRegionPairs) {
      const TwoQubitBloch fast = reduce_pair(s, ra, rb, pair);
      oracle_err = std::max(oracle_err, max_coeff_diff(fast, reduce_pair_by_dilation(s, ra, rb, pair)));
      if (!is_density_matrix(bloch_to_density(fast), 1e-10)) ++unphysical_reduced;
    }
  }
  report.suites.push_back(at_most("unruh.dilation-oracle", oracle_err, 1e-12));
  report.suites.push_back(at_most("unruh.dilated-physical", unphysical_dilated, 0, "unphysical dilations"));
  report.suites.push_back(at_most("unruh.dilation-purity", purity_err, 1e-12));
  report.suites.push_back(at_most("unruh.reduced-physical", unphysical_reduced, 0, "unphysical reductions"));

  double commute_err = 0.0;
  for (int n = 0; n < 100; ++n) {
    const TwoQubitBloch s = rng.two_qubit_state();
    const auto ra = AccelerationParam::from_radians(rng.uniform(0.0, kQuarterPi));
    const auto rb = AccelerationParam::from_radians(rng.uniform(0.0, kQuarterPi));
    const DecayProbability k(rng.uniform());
    for (auto kind : {ChannelKind::kPhaseDamping, ChannelKind::kPhaseFlip}) {
      const KrausChannel ch = make_channel(kind, k);
      for (const auto& pair : kAllRegionPairs) {
        const TwoQubitBloch noise_first = reduce_pair(apply_local(ch, ch, s), ra, rb, pair);
        const TwoQubitBloch noise_last = apply_local(ch, ch, reduce_pair(s, ra, rb, pair));
        commute_err = std::max(commute_err, max_coeff_diff(noise_first, noise_last));
      }
    }
  }
  report.suites.push_back(at_most("unruh.dephasing-commutes", commute_err, 1e-12));

  const auto quarter = AccelerationParam::from_radians(kQuarterPi);
  const KrausChannel flip = bit_flip(DecayProbability(0.5));
  const TwoQubitBloch w = werner(WernerParam(1.0));
  const double bitflip_gap =
      max_coeff_diff(reduce_pair(apply_local(flip, flip, w), quarter, quarter, {}),
                     apply_local(flip, flip, reduce_pair(w, quarter, quarter, {})));
  report.suites.push_back(greater_than("unruh.bit-flip-does-not-commute", bitflip_gap, 1e-6,
                                       "k=0.5, r=pi/4, I-I"));
}

// ------------------------------------------------------------------ discord

void discord_suites(Sampler& rng, VerifyReport& report) {
  double min_value = 0.0;
  double product_max = 0.0;
  double unitary_err = 0.0;
  for (int n = 0; n < 100; ++n) {
    const TwoQubitBloch s = rng.two_qubit_state();
    const double d = geometric_discord(s).value;
    min_value = std::min(min_value, d);
    product_max = std::max(product_max, geometric_discord(rng.product_state()).value);

    const ComplexMatrix uv = kron(rng.unitary2(), rng.unitary2());
    const ComplexMatrix rotated = uv * bloch_to_density(s) * uv.adjoint();
    unitary_err =
        std::max(unitary_err, std::abs(geometric_discord(density_to_bloch(rotated)).value - d));
  }
  report.suites.push_back(at_most("discord.nonnegative", std::max(0.0, -min_value), 0.0, "negated minimum"));
  report.suites.push_back(at_most("discord.product-states-zero", product_max, 1e-12));
  report.suites.push_back(at_most("discord.local-unitary-invariance", unitary_err, 1e-10));

  double below = -1.0;
  double above = 0.0;
  for (int n = 0; n < 50; ++n) {
    const TwoQubitBloch s = rng.two_qubit_state();
    const double formula = geometric_discord(s).value;
    const double oracle = discord_oracle(bloch_to_density(s));
    below = std::max(below, formula - oracle);
    above = std::max(above, oracle - formula);
  }
  report.suites.push_back(at_most("discord.oracle-lower-bound", below, 1e-9,
                                  "max(formula - oracle), 50 states"));
  report.suites.push_back(at_most("discord.oracle-upper-bound", above, 5e-4,
                                  "max(oracle - formula), 50 states"));

  TwoQubitBloch bell;
  bell.t[0][0] = 1.0;
  bell.t[1][1] = -1.0;
  bell.t[2][2] = 1.0;
  const double werner_err =
      std::abs(discord_oracle(bloch_to_density(werner(WernerParam(1.0)))) - 1.0 / 18.0);
  const double bell_err = std::abs(discord_oracle(bloch_to_density(bell)) - 0.5);
  report.suites.push_back(at_most("discord.oracle-werner", werner_err, 5e-4, "target 1/18"));
  report.suites.push_back(at_most("discord.oracle-bell", bell_err, 5e-4, "target 1/2"));
}

void branch_formula_suite(const VerifyOptions& options, VerifyReport& report) {
  const std::size_t steps = options.grid == GridResolution::kFine ? 21 : 11;
  double err = 0.0;
  for (auto channel : kAllChannels) {
    GridSpec spec;
    spec.channel = channel;
    spec.p.steps = spec.r.steps = spec.k.steps = steps;
    const GridValues grid = expand(spec);
    for (double p : grid.p)
      for (double k : grid.k)
        for (double r : grid.r)
          for (const auto& pair : grid.pairs) {
            const TwoQubitBloch s = reduced_state(scenario(p, r, r, channel, k, pair));
            if (!branch_condition(s)) continue;
            const double expected = (s.t[0][0] * s.t[0][0] + s.t[1][1] * s.t[1][1]) / 4.0;
            err = std::max(err, std::abs(geometric_discord(s).value - expected));
          }
  }
  report.suites.push_back(at_most("discord.branch-formula", err, 1e-12,
                                  "D = (t11^2 + t22^2)/4 where branch holds"));
}

// ----------------------------------------------------------------- analytic

void acceptance_suites(const VerifyOptions& options, Sampler& rng, VerifyReport& report) {
  // Inertial Werner discord.
  double inertial = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double p = 0.5 + 0.5 * i / 100.0;
    const double d = numeric_discord(scenario(p, 0.0, 0.0, ChannelKind::kNone, 0.0, {}));
    inertial = std::max(inertial, std::abs(d - (2 * p - 1) * (2 * p - 1) / 18.0));
  }
  report.suites.push_back(at_most("analytic.inertial-werner", inertial, 1e-12));

  // Closed forms against exact numerics, wherever the branch condition holds.
  const std::size_t steps = agreement_grid_steps(options.grid);
  double agreement = 0.0;
  std::size_t checked = 0;
  std::size_t violations_p1 = 0;
  for (auto channel : kAllChannels) {
    GridSpec spec;
    spec.channel = channel;
    spec.p.steps = spec.r.steps = spec.k.steps = steps;
    for (const auto& rec : discrepancy_map(spec, options.threads)) {
      if (channel == ChannelKind::kNone && rec.params.p.value() == 1.0 && !rec.branch_ok)
        ++violations_p1;
      if (!rec.branch_ok) continue;
      ++checked;
      agreement = std::max(agreement, std::abs(options.closed_form(rec.params) - rec.d_numeric));
    }
  }
  report.suites.push_back(at_most("analytic.closed-form-agreement", agreement, 1e-10,
                                  std::to_string(checked) + " branch-valid points, " +
                                      std::to_string(steps) + "^3 grid x 4 pairs x 4 channels"));
  report.suites.push_back(greater_than("analytic.branch-violations-exist",
                                       static_cast<double>(violations_p1), 0.0,
                                       "noiseless p=1 sweep"));
  report.findings.push_back("branch-violation points found: " + std::to_string(violations_p1));

  // cos^2 r = 0.9 on both sides, no noise, I-I.
  {
    const double r = std::acos(std::sqrt(0.9));
    const ScenarioParams params = scenario(1.0, r, r, ChannelKind::kNone, 0.0, {});
    const ScenarioResult res = evaluate_scenario(params);
    const double closed = options.closed_form(params);
    const double err = std::max(std::abs(res.breakdown.value - 0.0446), std::abs(closed - 0.045));
    SuiteResult suite = at_most("analytic.branch-counterexample", err, 1e-4,
                                "d_numeric 0.0446, d_closed 0.045, branch_ok false");
    suite.passed = suite.passed && !res.branch.ok;
    report.suites.push_back(suite);
    report.findings.push_back("cos^2 r = 0.9, p=1, none, I-I: d_numeric=" +
                              format_real(res.breakdown.value) +
                              " d_closed_form=" + format_real(closed) +
                              " branch_ok=" + (res.branch.ok ? "1" : "0"));
  }

  // Trade-off identities.
  double tradeoff = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const double p = rng.uniform(-1.0, 1.0);
    const double ra = rng.uniform(0.0, kQuarterPi);
    const double rb = rng.uniform(0.0, kQuarterPi);
    const double k = rng.uniform();
    const ChannelKind channel = kAllChannels[static_cast<std::size_t>(n) % 4];
    double sum = 0.0;
    for (const auto& pair : kAllRegionPairs)
      sum += options.closed_form(scenario(p, ra, rb, channel, k, pair));
    tradeoff = std::max(tradeoff, std::abs(sum - tradeoff_sum(WernerParam(p), channel,
                                                              DecayProbability(k))));
  }
  tradeoff = std::max(tradeoff, std::abs(tradeoff_sum(WernerParam(1.0), ChannelKind::kNone,
                                                      DecayProbability(0.0)) -
                                         1.0 / 18.0));
  report.suites.push_back(at_most("analytic.tradeoff-identity", tradeoff, 1e-15,
                                  "1000 random tuples; p=1 noiseless constant 1/18"));

  // Qualitative behaviour along r, per channel.
  GridRange r_axis{0.0, kQuarterPi, 101};
  const auto rs = r_axis.values();
  for (auto channel : kAllChannels) {
    double rise = -1.0;       // largest increase of the accessible discord
    double fall = -1.0;       // largest decrease of the inaccessible discord
    double start = 0.0;       // inaccessible discord at r = 0
    double end_min = 1.0;     // accessible discord at r = pi/4, nonzero base factor only
    double symmetry = 0.0;
    for (double p : {0.6, 0.8, 1.0})
      for (double k : {0.0, 1.0 / 3.0}) {
        std::vector<double> accessible;
        std::vector<double> inaccessible;
        for (double r : rs) {
          accessible.push_back(numeric_discord(scenario(p, r, r, channel, k, {})));
          inaccessible.push_back(numeric_discord(
              scenario(p, r, r, channel, k, {ModeRegion::kII, ModeRegion::kII})));
          if (channel == ChannelKind::kPhaseFlip || channel == ChannelKind::kBitFlip) {
            for (const auto& pair : kAllRegionPairs)
              symmetry = std::max(
                  symmetry, std::abs(numeric_discord(scenario(p, r, r, channel, k, pair)) -
                                     numeric_discord(scenario(p, r, r, channel, 1.0 - k, pair))));
          }
        }
        for (std::size_t i = 1; i < rs.size(); ++i) {
          rise = std::max(rise, accessible[i] - accessible[i - 1]);
          fall = std::max(fall, inaccessible[i - 1] - inaccessible[i]);
        }
        start = std::max(start, std::abs(inaccessible.front()));
        if (base_factor(WernerParam(p), channel, DecayProbability(k)) > 0.0)
          end_min = std::min(end_min, accessible.back());
      }
    report.suites.push_back(at_most(channel_tag("analytic.accessible-non-increasing", channel), rise,
                                    kMonotoneSlack, "largest step increase of D(I-I) in r"));
    report.suites.push_back(at_most(channel_tag("analytic.inaccessible-non-decreasing", channel),
                                    std::max(fall, start), kMonotoneSlack,
                                    "largest step decrease of D(II-II), or D(II-II) at r=0"));
    report.suites.push_back(greater_than(channel_tag("analytic.no-sudden-death", channel), end_min,
                                         0.0, "min D(I-I) at r=pi/4"));
    if (channel == ChannelKind::kPhaseFlip || channel == ChannelKind::kBitFlip) {
      report.suites.push_back(
          at_most(channel_tag("analytic.k-symmetry", channel), symmetry, 1e-12, "D(k) vs D(1-k)"));
    }
  }

  // Bit flip at k = 1/2: exact numerics against the closed form.
  {
    const ScenarioParams params = scenario(1.0, 0.0, 0.0, ChannelKind::kBitFlip, 0.5, {});
    const ScenarioResult res = evaluate_scenario(params);
    const double closed = options.closed_form(params);
    const double err =
        std::max(std::abs(res.breakdown.value), std::abs(closed - 1.0 / 36.0));
    SuiteResult suite = at_most("analytic.bit-flip-half-reported", err, 1e-12,
                                "d_numeric 0, d_closed 1/36, branch_ok false");
    suite.passed = suite.passed && !res.branch.ok;
    report.suites.push_back(suite);
    report.findings.push_back("bit-flip k=0.5 p=1 r=0 I-I: d_numeric=" +
                              format_real(res.breakdown.value) +
                              " d_closed_form=" + format_real(closed) +
                              " branch_ok=" + (res.branch.ok ? "1" : "0"));
  }

  // Sweep output is independent of evaluation threading.
  {
    GridSpec spec;
    spec.channel = ChannelKind::kBitFlip;
    spec.p.steps = 3;
    spec.k.steps = 3;
    spec.r.steps = 11;
    std::ostringstream serial;
    std::ostringstream parallel;
    write_sweep_csv(discrepancy_map(spec, 1), serial);
    write_sweep_csv(discrepancy_map(spec, 4), parallel);
    report.suites.push_back(at_most("cli.sweep-deterministic", serial.str() == parallel.str() ? 0 : 1,
                                    0, "serial vs 4-thread sweep bytes"));
  }
}

}  // namespace

std::string_view to_string(GridResolution grid) {
  return grid == GridResolution::kFine ? "fine" : "coarse";
}

GridResolution parse_grid_resolution(std::string_view name) {
  if (name == "coarse") return GridResolution::kCoarse;
  if (name == "fine") return GridResolution::kFine;
  throw std::invalid_argument("unknown grid '" + std::string(name) + "' (expected coarse, fine)");
}

std::size_t agreement_grid_steps(GridResolution grid) {
  return grid == GridResolution::kFine ? 51 : 21;
}

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  Sampler rng(options.seed);
  matrixkit_suites(rng, report);
  bloch_suites(rng, report);
  channel_suites(rng, report);
  unruh_suites(rng, report);
  discord_suites(rng, report);
  branch_formula_suite(options, report);
  acceptance_suites(options, rng, report);
  return report;
}

void print_report(const VerifyReport& report, const VerifyOptions& options, std::ostream& out) {
  out << "qdisc verify: grid=" << to_string(options.grid) << " seed=" << options.seed << '\n';
  std::size_t passed = 0;
  for (const auto& suite : report.suites) {
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-48s observed=%.3e %s %.1e", suite.passed ? "PASS" : "FAIL",
                  suite.name.c_str(), suite.observed, suite.relation.c_str(), suite.bound);
    out << line;
    if (!suite.note.empty()) out << "  (" << suite.note << ')';
    out << '\n';
    if (suite.passed) ++passed;
  }
  out << "findings (expected closed-form discrepancies, not failures):\n";
  for (const auto& finding : report.findings) out << "  " << finding << '\n';
  out << "summary: " << passed << '/' << report.suites.size() << " suites passed\n";
}

}  // namespace qdisc
