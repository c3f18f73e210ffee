#include "qdisc/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdisc {

namespace {

constexpr double kStateTol = 1e-10;
constexpr double kNegativeDiscordTol = 1e-12;
constexpr double kTieTol = 1e-14;
constexpr double kFamilyTol = 1e-12;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm_sq(const Vec3& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

// Lowest index whose |value| is within kTieTol of the maximum.
std::size_t argmax_lowest(const Vec3& v) {
  const double best = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
  for (std::size_t i = 0; i < 3; ++i)
    if (std::abs(v[i]) >= best - kTieTol) return i;
  return 0;
}

std::size_t attaining_axis(const RealSymmetric3& k, double lambda) {
  const double off = std::max({std::abs(k(0, 1)), std::abs(k(0, 2)), std::abs(k(1, 2))});
  if (off <= kTieTol) return argmax_lowest({k(0, 0), k(1, 1), k(2, 2)});

  // Eigenvector for lambda: the best-conditioned cross product of two rows of K - lambda I.
  std::array<Vec3, 3> rows;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rows[i][j] = k(i, j) - (i == j ? lambda : 0.0);
  Vec3 best{};
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const Vec3 candidate = cross(rows[a], rows[b]);
    if (norm_sq(candidate) > norm_sq(best)) best = candidate;
  }
  if (norm_sq(best) == 0.0) return 0;
  return argmax_lowest(best);
}

}  // namespace

DiscordBreakdown geometric_discord(const TwoQubitBloch& s) {
  if (auto check = is_density_matrix(bloch_to_density(s), kStateTol); !check) {
    throw std::invalid_argument("geometric_discord: state is not physical (" + check.diagnostic +
                                ")");
  }

  RealSymmetric3::Rows k{};
  DiscordBreakdown out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.x_norm_sq += s.x[i] * s.x[i];
    for (std::size_t j = 0; j < 3; ++j) {
      out.t_norm_sq += s.t[i][j] * s.t[i][j];
      double tt = 0.0;
      for (std::size_t l = 0; l < 3; ++l) tt += s.t[i][l] * s.t[j][l];
      k[i][j] = s.x[i] * s.x[j] + tt;
    }
  }
  const RealSymmetric3 kmat(k);
  out.lambda_max = hermitian_eigenvalues(kmat)[0];
  out.lambda_argmax = attaining_axis(kmat, out.lambda_max);

  const double raw = (out.x_norm_sq + out.t_norm_sq - out.lambda_max) / 4.0;
  if (raw < -kNegativeDiscordTol) {
    throw std::logic_error("geometric_discord: negative value " + std::to_string(raw));
  }
  out.value = std::max(raw, 0.0);
  return out;
}

Vec3 MeasurementDirection::unit_vector() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

ComplexMatrix measure_subsystem_a(const ComplexMatrix& rho, const MeasurementDirection& dir) {
  if (rho.dim() != 4) throw std::invalid_argument("measure_subsystem_a: expected a 4x4 matrix");
  const Vec3 n = dir.unit_vector();
  ComplexMatrix n_sigma(2);
  for (std::size_t i = 0; i < 3; ++i) n_sigma += sigma(i + 1) * Complex{n[i]};

  ComplexMatrix out(4);
  for (double sign : {1.0, -1.0}) {
    const ComplexMatrix projector = (sigma(0) + n_sigma * Complex{sign}) * Complex{0.5};
    const ComplexMatrix lifted = kron(projector, ComplexMatrix::identity(2));
    out += lifted * rho * lifted;
  }
  return out;
}

double measurement_distance_sq(const ComplexMatrix& rho, const MeasurementDirection& dir) {
  const ComplexMatrix diff = rho - measure_subsystem_a(rho, dir);
  return hs_inner(diff, diff).real();
}

OracleResult discord_oracle_search(const ComplexMatrix& rho, int coarse_steps, int refine_rounds) {
  if (coarse_steps < 32) throw std::invalid_argument("discord_oracle: coarse_steps must be >= 32");
  if (refine_rounds < 0) throw std::invalid_argument("discord_oracle: refine_rounds must be >= 0");
  if (rho.dim() != 4) throw std::invalid_argument("discord_oracle: expected a 4x4 matrix");
  if (auto check = is_density_matrix(rho, kStateTol); !check) {
    throw std::invalid_argument("discord_oracle: input is not a density matrix (" +
                                check.diagnostic + ")");
  }

  const double pi = std::numbers::pi;
  double theta_step = pi / (coarse_steps - 1);
  double phi_step = 2.0 * pi / coarse_steps;

  OracleResult best{measurement_distance_sq(rho, {0.0, 0.0}), {0.0, 0.0}};
  for (int i = 0; i < coarse_steps; ++i) {
    for (int j = 0; j < coarse_steps; ++j) {
      const MeasurementDirection dir{i * theta_step, j * phi_step};
      const double value = measurement_distance_sq(rho, dir);
      if (value < best.value) best = {value, dir};
    }
  }

  // Any (theta, phi) is a valid direction, so the stencil is not clipped.
  for (int round = 0; round < refine_rounds; ++round) {
    theta_step /= 2.0;
    phi_step /= 2.0;
    const MeasurementDirection centre = best.best;
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        const MeasurementDirection dir{centre.theta + di * theta_step, centre.phi + dj * phi_step};
        const double value = measurement_distance_sq(rho, dir);
        if (value < best.value) best = {value, dir};
      }
    }
  }
  best.value = std::max(best.value, 0.0);
  return best;
}

double discord_oracle(const ComplexMatrix& rho, int coarse_steps, int refine_rounds) {
  return discord_oracle_search(rho, coarse_steps, refine_rounds).value;
}

BranchReport branch_condition(const TwoQubitBloch& s) {
  const double off = std::max({std::abs(s.x[0]), std::abs(s.x[1]), std::abs(s.y[0]),
                               std::abs(s.y[1]), std::abs(s.t[0][1]), std::abs(s.t[0][2]),
                               std::abs(s.t[1][0]), std::abs(s.t[1][2]), std::abs(s.t[2][0]),
                               std::abs(s.t[2][1])});
  if (off > kFamilyTol) {
    throw std::invalid_argument(
        "branch_condition: state must have x, y along the third axis and diagonal T");
  }
  const double third = s.x[2] * s.x[2] + s.t[2][2] * s.t[2][2];
  const double transverse = std::max(s.t[0][0] * s.t[0][0], s.t[1][1] * s.t[1][1]);
  BranchReport out;
  out.margin = third - transverse;
  out.ok = out.margin >= -kTieTol;
  return out;
}

}  // namespace qdisc
