#pragma once

#include <array>
#include <cstddef>

#include "qdisc/matrixkit.hpp"

namespace qdisc {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// sigma(0) is the identity; sigma(1..3) are the Pauli X, Y, Z matrices.
const ComplexMatrix& sigma(std::size_t index);

/// rho = (1/4)(I + x.sigma (x) I + I (x) y.sigma + sum t_ij sigma_i (x) sigma_j)
struct TwoQubitBloch {
  Vec3 x{};
  Vec3 y{};
  Mat3 t{};

  /// x1..x3, y1..y3, then t row-major.
  std::array<double, 15> coefficients() const;
  static TwoQubitBloch from_coefficients(const std::array<double, 15>& c);
};

double max_coeff_diff(const TwoQubitBloch& a, const TwoQubitBloch& b);

ComplexMatrix bloch_to_density(const TwoQubitBloch& s);

/// Throws std::invalid_argument unless rho is 4x4, Hermitian and unit trace
/// within 1e-10.
TwoQubitBloch density_to_bloch(const ComplexMatrix& rho);

/// Werner state parameter, -1 <= p <= 1.
class WernerParam {
 public:
  explicit WernerParam(double p);
  double value() const noexcept { return p_; }

 private:
  double p_;
};

/// x = y = 0, T = ((2p - 1) / 3) I.
TwoQubitBloch werner(WernerParam p);

/// Real 4x4 matrix M acting on single-qubit operator coefficients in the
/// basis (I, sigma1, sigma2, sigma3): the image of sigma_mu is
/// sum_alpha M[alpha][mu] sigma_alpha. Both local channels and Rindler mode
/// reductions are expressed this way.
struct PauliTransfer {
  std::array<std::array<double, 4>, 4> m{};

  static PauliTransfer identity();
  PauliTransfer then(const PauliTransfer& next) const;  // next o this
};

/// Applies transfer_a to Alice's operator slot and transfer_b to Bob's.
TwoQubitBloch apply_transfers(const PauliTransfer& transfer_a, const PauliTransfer& transfer_b,
                              const TwoQubitBloch& s);

}  // namespace qdisc
