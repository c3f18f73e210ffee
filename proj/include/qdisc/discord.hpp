#pragma once

#include <cstddef>

#include "qdisc/bloch.hpp"
#include "qdisc/matrixkit.hpp"

namespace qdisc {

struct DiscordBreakdown {
  double value = 0.0;  // clamped at 0 when rounding pushes it slightly negative
  double x_norm_sq = 0.0;
  double t_norm_sq = 0.0;
  double lambda_max = 0.0;
  std::size_t lambda_argmax = 0;
};

/// D = (|x|^2 + |T|^2 - lambda_max(x x^t + T T^t)) / 4.
///
/// Throws std::invalid_argument when `s` does not describe a density matrix
/// (tolerance 1e-10), and std::logic_error if the raw value falls below
/// -1e-12. Ties for the largest eigenvalue report the lowest axis index.
DiscordBreakdown geometric_discord(const TwoQubitBloch& s);

/// Bloch-sphere direction of a projective measurement on subsystem A.
struct MeasurementDirection {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  Vec3 unit_vector() const;
};

/// sum_k (P_k (x) I) rho (P_k (x) I) for the two projectors along `dir`.
ComplexMatrix measure_subsystem_a(const ComplexMatrix& rho, const MeasurementDirection& dir);

/// Squared Hilbert-Schmidt distance between rho and its measured image.
double measurement_distance_sq(const ComplexMatrix& rho, const MeasurementDirection& dir);

struct OracleResult {
  double value = 0.0;
  MeasurementDirection best;
};

/// Brute-force minimum of measurement_distance_sq over directions: a
/// coarse_steps x coarse_steps (theta, phi) grid followed by refine_rounds
/// rounds of stencil search with the step halved each round. Deterministic.
OracleResult discord_oracle_search(const ComplexMatrix& rho, int coarse_steps = 64,
                                   int refine_rounds = 20);

double discord_oracle(const ComplexMatrix& rho, int coarse_steps = 64, int refine_rounds = 20);

struct BranchReport {
  bool ok = false;
  double margin = 0.0;  // (x3^2 + t33^2) - max(t11^2, t22^2)

  explicit operator bool() const noexcept { return ok; }
};

/// Whether lambda_max is attained on the third axis for a state with
/// x = (0, 0, x3), y = (0, 0, y3) and diagonal T. Throws
/// std::invalid_argument for states outside that family.
BranchReport branch_condition(const TwoQubitBloch& s);

}  // namespace qdisc
