#include "qdisc/sampling.hpp"

#include <cmath>
#include <numbers>

namespace qdisc {

double Sampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::normal() {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u = 1.0 - uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

ComplexMatrix Sampler::density_matrix(std::size_t dim) {
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex{normal(), normal()};
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex{1.0 / rho.trace().real()};
  // Remove rounding asymmetry so hermiticity is exact.
  return (rho + rho.adjoint()) * Complex{0.5};
}

TwoQubitBloch Sampler::two_qubit_state() { return density_to_bloch(density_matrix(4)); }

TwoQubitBloch Sampler::product_state() {
  auto bloch_vector = [this] {
    Vec3 v{normal(), normal(), normal()};
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    const double radius = uniform();
    for (double& c : v) c *= radius / norm;
    return v;
  };
  TwoQubitBloch s;
  s.x = bloch_vector();
  s.y = bloch_vector();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s.t[i][j] = s.x[i] * s.y[j];
  return s;
}

ComplexMatrix Sampler::unitary2() {
  std::array<double, 4> q{normal(), normal(), normal(), normal()};
  const double norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  for (double& c : q) c /= norm;
  // q0 I - i (q1 s1 + q2 s2 + q3 s3)
  const Complex i{0.0, 1.0};
  return ComplexMatrix{{q[0] - i * q[3], -i * q[1] - q[2]}, {-i * q[1] + q[2], q[0] + i * q[3]}};
}

ComplexMatrix Sampler::hermitian(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = Complex{normal(), normal()};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace qdisc
