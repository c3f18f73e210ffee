#include "qdisc/matrixkit.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qdisc {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

// Assumes hermiticity has already been established by the caller.
std::vector<double> eigenvalues_unchecked(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd em(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      em(i, j) = 0.5 * (m(ui, uj) + std::conj(m(uj, ui)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigen solver did not converge");
  }
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string format_value(const char* label, double value) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %.3e", label, value);
  return buf;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim == 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
  if (data_.size() != dim * dim) {
    throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim * dim) +
                                " entries, got " + std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("ComplexMatrix: ragged initializer");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
    ++i;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix out(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "hs_inner");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    sum += std::conj(a.entries()[i]) * b.entries()[i];
  return sum;
}

RealSymmetric3::RealSymmetric3(const Rows& rows) {
  for (std::size_t i = 0; i < 3; ++i) {
    m_[i][i] = rows[i][i];
    for (std::size_t j = i + 1; j < 3; ++j) {
      const double v = 0.5 * (rows[i][j] + rows[j][i]);
      m_[i][j] = v;
      m_[j][i] = v;
    }
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  if (dims.empty()) throw std::invalid_argument("partial_trace: empty subsystem list");
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw std::invalid_argument("partial_trace: zero subsystem dimension");
    total *= d;
  }
  if (total != rho.dim()) {
    throw std::invalid_argument("partial_trace: subsystem dimensions multiply to " +
                                std::to_string(total) + " but matrix has dimension " +
                                std::to_string(rho.dim()));
  }
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");

  const std::size_t n = dims.size();
  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw std::invalid_argument("partial_trace: keep index out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: duplicate keep index");
    kept[k] = true;
  }

  // Row-major strides: subsystem 0 is the slowest index.
  std::vector<std::size_t> stride(n);
  std::size_t s = 1;
  for (std::size_t i = n; i-- > 0;) {
    stride[i] = s;
    s *= dims[i];
  }

  std::vector<std::size_t> kept_axes;
  std::vector<std::size_t> traced_axes;
  for (std::size_t i = 0; i < n; ++i) (kept[i] ? kept_axes : traced_axes).push_back(i);

  // Offset of each multi-index over a group of axes, enumerated with the
  // first listed axis slowest.
  auto offsets = [&](const std::vector<std::size_t>& axes) {
    std::vector<std::size_t> out{0};
    for (std::size_t axis : axes) {
      std::vector<std::size_t> next;
      next.reserve(out.size() * dims[axis]);
      for (std::size_t base : out)
        for (std::size_t v = 0; v < dims[axis]; ++v) next.push_back(base + v * stride[axis]);
      out = std::move(next);
    }
    return out;
  };
  const auto kept_off = offsets(kept_axes);
  const auto traced_off = offsets(traced_axes);

  ComplexMatrix out(kept_off.size());
  for (std::size_t i = 0; i < kept_off.size(); ++i)
    for (std::size_t j = 0; j < kept_off.size(); ++j) {
      Complex sum = 0.0;
      for (std::size_t t : traced_off) sum += rho(kept_off[i] + t, kept_off[j] + t);
      out(i, j) = sum;
    }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  const double defect = hermiticity_defect(m);
  if (defect > tol::kHermitian) {
    throw std::invalid_argument(format_value("hermitian_eigenvalues: hermiticity defect", defect));
  }
  return eigenvalues_unchecked(m);
}

namespace {

using Vec3d = std::array<double, 3>;

Vec3d cross(const Vec3d& a, const Vec3d& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3d& a, const Vec3d& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3d normalized(Vec3d v) {
  const double n = std::sqrt(dot(v, v));
  for (double& c : v) c /= n;
  return v;
}

// The two eigenvalues of m restricted to the plane orthogonal to the unit
// eigenvector v. The 2x2 formula has no cancellation under the square root,
// so a close pair keeps full absolute accuracy.
std::array<double, 2> complement_pair(const RealSymmetric3& m, const Vec3d& v) {
  std::size_t axis = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(v[i]) < std::abs(v[axis])) axis = i;
  Vec3d unit{};
  unit[axis] = 1.0;
  const Vec3d e1 = normalized(cross(v, unit));
  const Vec3d e2 = cross(v, e1);
  auto form = [&](const Vec3d& a, const Vec3d& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) acc += a[i] * m(i, j) * b[j];
    return acc;
  };
  const double b11 = form(e1, e1);
  const double b22 = form(e2, e2);
  const double b12 = form(e1, e2);
  const double mean = 0.5 * (b11 + b22);
  const double radius = std::hypot(0.5 * (b11 - b22), b12);
  return {mean + radius, mean - radius};
}

}  // namespace

std::array<double, 3> hermitian_eigenvalues(const RealSymmetric3& m) {
  const double off = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);
  if (off == 0.0) {
    std::array<double, 3> out{m(0, 0), m(1, 1), m(2, 2)};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  const double q = m.trace() / 3.0;
  const double d0 = m(0, 0) - q;
  const double d1 = m(1, 1) - q;
  const double d2 = m(2, 2) - q;
  const double dev_sq = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * off;
  if (std::sqrt(dev_sq) < 1e-14) return {q, q, q};

  const double p = std::sqrt(dev_sq / 6.0);
  // det((M - qI) / p) / 2, clamped into acos's domain.
  const double b00 = d0 / p, b11 = d1 / p, b22 = d2 / p;
  const double b01 = m(0, 1) / p, b02 = m(0, 2) / p, b12 = m(1, 2) / p;
  const double det = b00 * (b11 * b22 - b12 * b12) - b01 * (b01 * b22 - b12 * b02) +
                     b02 * (b01 * b12 - b11 * b02);
  const double half_det = std::clamp(det / 2.0, -1.0, 1.0);
  const double phi = std::acos(half_det) / 3.0;

  const double largest = q + 2.0 * p * std::cos(phi);
  const double smallest = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);

  // Near a double root acos amplifies rounding to sqrt(eps). The root farthest
  // from the other two is insensitive, so take it from the formula and get the
  // close pair from the orthogonal complement of its eigenvector.
  const bool largest_isolated = phi <= std::numbers::pi / 6.0;
  const double isolated = largest_isolated ? largest : smallest;
  const std::array<Vec3d, 3> rows{{{m(0, 0) - isolated, m(0, 1), m(0, 2)},
                                   {m(1, 0), m(1, 1) - isolated, m(1, 2)},
                                   {m(2, 0), m(2, 1), m(2, 2) - isolated}}};
  Vec3d v{};
  double best = 0.0;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const Vec3d c = cross(rows[a], rows[b]);
    const double n = dot(c, c);
    if (n > best) {
      best = n;
      v = c;
    }
  }
  std::array<double, 3> out;
  if (best == 0.0) {
    out = {largest, 3.0 * q - largest - smallest, smallest};
  } else {
    const auto pair = complement_pair(m, normalized(v));
    out = {isolated, pair[0], pair[1]};
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

DensityCheck is_density_matrix(const ComplexMatrix& rho, double tolerance) {
  DensityCheck check;
  if (rho.dim() == 0 || rho.entries().size() != rho.dim() * rho.dim()) {
    check.failure = DensityFailure::kNotSquare;
    check.diagnostic = "not a square matrix";
    return check;
  }
  check.hermiticity_defect = hermiticity_defect(rho);
  check.trace_defect = std::abs(rho.trace() - Complex{1.0});
  if (check.hermiticity_defect > tolerance) {
    check.failure = DensityFailure::kNotHermitian;
    check.diagnostic = format_value("hermiticity defect", check.hermiticity_defect);
    return check;
  }
  if (check.trace_defect > tolerance) {
    check.failure = DensityFailure::kTrace;
    check.diagnostic = format_value("trace defect", check.trace_defect);
    return check;
  }
  check.min_eigenvalue = eigenvalues_unchecked(rho).back();
  if (check.min_eigenvalue < -tolerance) {
    check.failure = DensityFailure::kNegativeEigenvalue;
    check.diagnostic = format_value("negative eigenvalue", check.min_eigenvalue);
    return check;
  }
  check.ok = true;
  return check;
}

}  // namespace qdisc
