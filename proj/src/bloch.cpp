#include "qdisc/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qdisc {

namespace {

constexpr double kStateTol = 1e-10;

using Coeffs4 = std::array<std::array<double, 4>, 4>;

// R[0][0] = 1, R[i][0] = x_i, R[0][j] = y_j, R[i][j] = t_ij.
Coeffs4 to_coeff_matrix(const TwoQubitBloch& s) {
  Coeffs4 r{};
  r[0][0] = 1.0;
  for (std::size_t i = 0; i < 3; ++i) {
    r[i + 1][0] = s.x[i];
    r[0][i + 1] = s.y[i];
    for (std::size_t j = 0; j < 3; ++j) r[i + 1][j + 1] = s.t[i][j];
  }
  return r;
}

}  // namespace

const ComplexMatrix& sigma(std::size_t index) {
  using namespace std::complex_literals;
  static const std::array<ComplexMatrix, 4> basis{
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, -1i}, {1i, 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (index > 3) throw std::invalid_argument("sigma: index must be 0..3");
  return basis[index];
}

std::array<double, 15> TwoQubitBloch::coefficients() const {
  std::array<double, 15> c{};
  for (std::size_t i = 0; i < 3; ++i) {
    c[i] = x[i];
    c[3 + i] = y[i];
    for (std::size_t j = 0; j < 3; ++j) c[6 + 3 * i + j] = t[i][j];
  }
  return c;
}

TwoQubitBloch TwoQubitBloch::from_coefficients(const std::array<double, 15>& c) {
  TwoQubitBloch s;
  for (std::size_t i = 0; i < 3; ++i) {
    s.x[i] = c[i];
    s.y[i] = c[3 + i];
    for (std::size_t j = 0; j < 3; ++j) s.t[i][j] = c[6 + 3 * i + j];
  }
  return s;
}

double max_coeff_diff(const TwoQubitBloch& a, const TwoQubitBloch& b) {
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  double worst = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) worst = std::max(worst, std::abs(ca[i] - cb[i]));
  return worst;
}

ComplexMatrix bloch_to_density(const TwoQubitBloch& s) {
  const Coeffs4 r = to_coeff_matrix(s);
  ComplexMatrix rho(4);
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      if (r[mu][nu] == 0.0) continue;
      rho += kron(sigma(mu), sigma(nu)) * Complex{r[mu][nu]};
    }
  return rho * Complex{0.25};
}

TwoQubitBloch density_to_bloch(const ComplexMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("density_to_bloch: expected a 4x4 matrix, got dimension " +
                                std::to_string(rho.dim()));
  }
  if (hermiticity_defect(rho) > kStateTol) {
    throw std::invalid_argument("density_to_bloch: matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex{1.0}) > kStateTol) {
    throw std::invalid_argument("density_to_bloch: trace is not 1");
  }
  // Tr(rho P) with P Hermitian; the imaginary part is rounding noise.
  auto expect = [&](std::size_t mu, std::size_t nu) {
    return hs_inner(kron(sigma(mu), sigma(nu)), rho).real();
  };
  TwoQubitBloch s;
  for (std::size_t i = 0; i < 3; ++i) {
    s.x[i] = expect(i + 1, 0);
    s.y[i] = expect(0, i + 1);
    for (std::size_t j = 0; j < 3; ++j) s.t[i][j] = expect(i + 1, j + 1);
  }
  return s;
}

WernerParam::WernerParam(double p) : p_(p) {
  if (!(p >= -1.0 && p <= 1.0)) {
    throw std::invalid_argument("WernerParam: p must lie in [-1, 1], got " + std::to_string(p));
  }
}

TwoQubitBloch werner(WernerParam p) {
  const double c = (2.0 * p.value() - 1.0) / 3.0;
  TwoQubitBloch s;
  for (std::size_t i = 0; i < 3; ++i) s.t[i][i] = c;
  return s;
}

PauliTransfer PauliTransfer::identity() {
  PauliTransfer out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i][i] = 1.0;
  return out;
}

PauliTransfer PauliTransfer::then(const PauliTransfer& next) const {
  PauliTransfer out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < 4; ++k) sum += next.m[i][k] * m[k][j];
      out.m[i][j] = sum;
    }
  return out;
}

TwoQubitBloch apply_transfers(const PauliTransfer& transfer_a, const PauliTransfer& transfer_b,
                              const TwoQubitBloch& s) {
  const Coeffs4 r = to_coeff_matrix(s);
  // R' = Ma R Mb^T
  Coeffs4 left{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      double sum = 0.0;
      for (std::size_t mu = 0; mu < 4; ++mu) sum += transfer_a.m[a][mu] * r[mu][nu];
      left[a][nu] = sum;
    }
  Coeffs4 out{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      double sum = 0.0;
      for (std::size_t nu = 0; nu < 4; ++nu) sum += left[a][nu] * transfer_b.m[b][nu];
      out[a][b] = sum;
    }

  TwoQubitBloch result;
  for (std::size_t i = 0; i < 3; ++i) {
    result.x[i] = out[i + 1][0];
    result.y[i] = out[0][i + 1];
    for (std::size_t j = 0; j < 3; ++j) result.t[i][j] = out[i + 1][j + 1];
  }
  return result;
}

}  // namespace qdisc
