#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qdisc/analytic.hpp"
#include "qdisc/discord.hpp"
#include "support.hpp"

using namespace qdisc;
using qdisc::test::Gen;
using qdisc::test::kPi;

namespace {

// Random SU(2) from three Euler angles; independent of the library sampler.
ComplexMatrix euler_unitary(Gen& gen) {
  const double a = gen.real(0, 2 * kPi);
  const double b = gen.real(0, kPi);
  const double c = gen.real(0, 2 * kPi);
  const Complex i{0.0, 1.0};
  auto rz = [&](double t) {
    return ComplexMatrix{{std::exp(-i * (t / 2)), 0.0}, {0.0, std::exp(i * (t / 2))}};
  };
  const ComplexMatrix ry{{std::cos(b / 2), -std::sin(b / 2)}, {std::sin(b / 2), std::cos(b / 2)}};
  return rz(a) * ry * rz(c);
}

TwoQubitBloch bell_phi_plus() { return test::diag_state({}, {}, {1.0, -1.0, 1.0}); }

}  // namespace

TEST_SUITE("discord") {

TEST_CASE("reference values") {
  CHECK(geometric_discord(werner(WernerParam(1.0))).value == doctest::Approx(1.0 / 18).epsilon(1e-14));
  CHECK(geometric_discord(bell_phi_plus()).value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(geometric_discord(werner(WernerParam(0.5))).value == 0.0);

  const auto quarter = AccelerationParam::from_radians(kPi / 4);
  const TwoQubitBloch accelerated = reduce_pair(werner(WernerParam(1.0)), quarter, quarter, {});
  CHECK(geometric_discord(accelerated).value == doctest::Approx(1.0 / 72).epsilon(1e-14));

  const double d = numeric_discord(
      test::scenario(1.0, kPi / 4, kPi / 4, ChannelKind::kPhaseDamping, 1.0 / 3, test::kII_II));
  CHECK(d == doctest::Approx(1.0 / 162).epsilon(1e-13));
}

TEST_CASE("breakdown fields") {
  const DiscordBreakdown b = geometric_discord(bell_phi_plus());
  CHECK(b.x_norm_sq == 0.0);
  CHECK(b.t_norm_sq == doctest::Approx(3.0));
  CHECK(b.lambda_max == doctest::Approx(1.0));
  CHECK(b.lambda_argmax == 0);  // three-way tie: lowest index

  const DiscordBreakdown z = geometric_discord(test::diag_state({0, 0, 0.2}, {}, {0.1, 0.1, 0.5}));
  CHECK(z.lambda_argmax == 2);
  CHECK(z.lambda_max == doctest::Approx(0.04 + 0.25));
}

TEST_CASE("discord of unphysical input throws") {
  CHECK_THROWS_AS(geometric_discord(test::diag_state({}, {}, {1.0, 1.0, 1.0})), std::invalid_argument);
}

TEST_CASE("discord is invariant under local unitaries") {
  Gen gen(29);
  for (int n = 0; n < 60; ++n) {
    const ComplexMatrix rho = gen.mixed(4, 1 + n % 3);
    const ComplexMatrix u = kron(euler_unitary(gen), euler_unitary(gen));
    const double before = geometric_discord(density_to_bloch(rho)).value;
    const double after = geometric_discord(density_to_bloch(u * rho * u.adjoint())).value;
    CAPTURE(n);
    CHECK(std::abs(before - after) <= 1e-10);
  }
}

TEST_CASE("classical-quantum states have zero discord") {
  Gen gen(31);
  for (int n = 0; n < 40; ++n) {
    // sum_k p_k |k><k| (x) sigma_k in a random basis for A.
    const ComplexMatrix ua = euler_unitary(gen);
    ComplexMatrix rho(4);
    const double w = gen.unit();
    for (std::size_t k = 0; k < 2; ++k) {
      ComplexMatrix proj(2);
      proj(k, k) = 1.0;
      rho += kron(ua * proj * ua.adjoint(), gen.mixed(2)) * Complex{k == 0 ? w : 1.0 - w};
    }
    CHECK(geometric_discord(density_to_bloch(rho)).value <= 1e-12);
  }
}

TEST_CASE("discord is bounded by one half and nonnegative") {
  Gen gen(37);
  for (int n = 0; n < 200; ++n) {
    const double d = geometric_discord(density_to_bloch(gen.mixed(4, 1 + n % 4))).value;
    CHECK(d >= 0.0);
    CHECK(d <= 0.5 + 1e-12);
  }
}

TEST_CASE("measurement oracle brackets the closed formula from above") {
  Gen gen(41);
  for (int n = 0; n < 10; ++n) {
    const ComplexMatrix rho = gen.mixed(4);
    const double formula = geometric_discord(density_to_bloch(rho)).value;
    const double oracle = discord_oracle(rho);
    CAPTURE(n);
    CHECK(formula <= oracle + 1e-12);
    CHECK(oracle <= formula + 5e-4);
  }
}

TEST_CASE("any single measurement gives an upper bound") {
  const ComplexMatrix bell = bloch_to_density(bell_phi_plus());
  for (double theta : {0.0, 0.4, 1.3, kPi}) {
    const double d = measurement_distance_sq(bell, {theta, 0.7});
    CHECK(d == doctest::Approx(0.5).epsilon(1e-13));  // all directions are equivalent
  }
  const ComplexMatrix measured = measure_subsystem_a(bell, {0.0, 0.0});
  CHECK(std::abs(measured(0, 3)) < 1e-15);
  CHECK(measured(0, 0).real() == doctest::Approx(0.5));
}

TEST_CASE("oracle rejects too coarse a grid") {
  CHECK_THROWS_AS(discord_oracle(bloch_to_density(werner(WernerParam(1.0))), 8),
                  std::invalid_argument);
}

TEST_CASE("branch condition margins") {
  const auto quarter = AccelerationParam::from_radians(kPi / 4);
  const BranchReport inf = branch_condition(reduce_pair(werner(WernerParam(1.0)), quarter, quarter, {}));
  CHECK(inf.ok);
  CHECK(inf.margin == doctest::Approx(1.0 / 3).epsilon(1e-14));

  // cos^2 r = 0.9 on both sides: t11 = 0.3, t33 = 0.28, x3 = -0.1.
  const double r = std::acos(std::sqrt(0.9));
  const auto ar = AccelerationParam::from_radians(r);
  const TwoQubitBloch s = reduce_pair(werner(WernerParam(1.0)), ar, ar, {});
  CHECK(s.t[0][0] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(s.t[2][2] == doctest::Approx(0.28).epsilon(1e-14));
  CHECK(s.x[2] == doctest::Approx(-0.1).epsilon(1e-14));
  const BranchReport cut = branch_condition(s);
  CHECK_FALSE(cut.ok);
  CHECK(cut.margin == doctest::Approx(-0.0016).epsilon(1e-12));

  CHECK_THROWS_AS(branch_condition(test::diag_state({0.1, 0, 0}, {}, {0.1, 0.1, 0.1})),
                  std::invalid_argument);
}

TEST_CASE("where the branch holds, discord is (t11^2 + t22^2) / 4") {
  Gen gen(43);
  for (int n = 0; n < 200; ++n) {
    const ChannelKind kinds[] = {ChannelKind::kNone, ChannelKind::kPhaseDamping,
                                 ChannelKind::kPhaseFlip, ChannelKind::kBitFlip};
    ScenarioParams params;
    params.p = WernerParam(gen.real(0.5, 1.0));
    params.ra = gen.accel();
    params.rb = gen.accel();
    params.channel = kinds[gen.index(4)];
    params.k = DecayProbability(gen.unit());
    params.pair = kAllRegionPairs[gen.index(4)];
    const TwoQubitBloch s = reduced_state(params);
    if (!branch_condition(s)) continue;
    const double expected = (s.t[0][0] * s.t[0][0] + s.t[1][1] * s.t[1][1]) / 4;
    CHECK(std::abs(geometric_discord(s).value - expected) <= 1e-12);
  }
}

}  // TEST_SUITE
