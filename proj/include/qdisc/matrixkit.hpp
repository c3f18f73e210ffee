#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qdisc {

using Complex = std::complex<double>;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kPsd = 1e-12;
inline constexpr double kEigResidual = 1e-10;
}  // namespace tol

/// Dense square complex matrix, row-major. Carrier for density and Kraus
/// operators; dimensions stay small (2, 4, 16).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest absolute entrywise difference. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |M[i][j] - conj(M[j][i])|
double hermiticity_defect(const ComplexMatrix& m);

/// Tr(A^dagger B)
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real symmetric 3x3. The constructor symmetrizes its input, so
/// entries(i, j) == entries(j, i) holds bit-exactly.
class RealSymmetric3 {
 public:
  using Rows = std::array<std::array<double, 3>, 3>;

  RealSymmetric3() = default;
  explicit RealSymmetric3(const Rows& rows);

  double operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const Rows& rows() const noexcept { return m_; }
  double trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

 private:
  Rows m_{};
};

/// Kronecker product; the left factor is the slow index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out every subsystem not listed in `keep`. Kept subsystems retain
/// their relative order. Throws std::invalid_argument on dimension mismatch
/// or an empty / out-of-range keep set.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Eigenvalues of a Hermitian matrix, descending. Throws
/// std::invalid_argument when the hermiticity defect exceeds tol::kHermitian.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Closed-form trigonometric solution of the characteristic cubic,
/// descending. When the deviatoric part is numerically zero the triple
/// mean is returned.
std::array<double, 3> hermitian_eigenvalues(const RealSymmetric3& m);

enum class DensityFailure { kNone, kNotSquare, kNotHermitian, kTrace, kNegativeEigenvalue };

struct DensityCheck {
  bool ok = false;
  DensityFailure failure = DensityFailure::kNone;
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

DensityCheck is_density_matrix(const ComplexMatrix& rho, double tolerance);

}  // namespace qdisc
