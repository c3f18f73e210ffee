#pragma once

#include <cstdint>
#include <random>

#include "qdisc/bloch.hpp"
#include "qdisc/matrixkit.hpp"

namespace qdisc {

/// Seeded source of random test states. Draws are built from raw
/// mt19937_64 output so sequences are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

  /// Ginibre-distributed full-rank density matrix of the given dimension.
  ComplexMatrix density_matrix(std::size_t dim);
  /// density_to_bloch of a random 4x4 density matrix.
  TwoQubitBloch two_qubit_state();
  /// Bloch triple of rho_A (x) rho_B for random single-qubit mixed states.
  TwoQubitBloch product_state();
  /// Haar-random SU(2) element.
  ComplexMatrix unitary2();
  /// Random Hermitian matrix with entries of order one.
  ComplexMatrix hermitian(std::size_t dim);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qdisc
