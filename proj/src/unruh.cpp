#include "qdisc/unruh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdisc {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

// Index of |a>_I |b>_II in the two-mode space.
constexpr std::size_t mode_index(std::size_t region_one, std::size_t region_two) {
  return 2 * region_one + region_two;
}

// Image of the dyad |i><j| under the dilation.
ComplexMatrix dilate_dyad(std::size_t i, std::size_t j, double c, double s) {
  ComplexMatrix out(4);
  if (i == 0 && j == 0) {
    out(mode_index(0, 0), mode_index(0, 0)) = c * c;
    out(mode_index(0, 0), mode_index(1, 1)) = c * s;
    out(mode_index(1, 1), mode_index(0, 0)) = s * c;
    out(mode_index(1, 1), mode_index(1, 1)) = s * s;
  } else if (i == 0 && j == 1) {
    out(mode_index(0, 0), mode_index(1, 0)) = c;
    out(mode_index(1, 1), mode_index(1, 0)) = s;
  } else if (i == 1 && j == 0) {
    out(mode_index(1, 0), mode_index(0, 0)) = c;
    out(mode_index(1, 0), mode_index(1, 1)) = s;
  } else {
    out(mode_index(1, 0), mode_index(1, 0)) = 1.0;
  }
  return out;
}

std::size_t region_slot(ModeRegion region, std::size_t first_mode) {
  return first_mode + (region == ModeRegion::kI ? 0 : 1);
}

}  // namespace

AccelerationParam::AccelerationParam(double r) : r_(r), cos_(std::cos(r)), sin_(std::sin(r)) {}

AccelerationParam AccelerationParam::from_radians(double r) {
  if (!(r >= 0.0 && r <= kQuarterPi)) {
    throw std::invalid_argument("acceleration parameter r must lie in [0, pi/4], got " +
                                std::to_string(r));
  }
  return AccelerationParam(r);
}

AccelerationParam AccelerationParam::from_physical(double acceleration, double omega,
                                                   double light_speed) {
  for (double v : {acceleration, omega, light_speed}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("acceleration, frequency and light speed must be positive");
    }
  }
  const double boltzmann = std::exp(-2.0 * std::numbers::pi * omega * light_speed / acceleration);
  // acos can land one ulp above pi/4 when the exponential rounds to 1.
  const double r = std::min(std::acos(1.0 / std::sqrt(boltzmann + 1.0)), kQuarterPi);
  AccelerationParam out(r);
  out.physical_ = Physical{acceleration, omega, light_speed};
  return out;
}

std::string to_string(RegionPair pair) {
  auto name = [](ModeRegion r) { return r == ModeRegion::kI ? "I" : "II"; };
  return std::string(name(pair.alice)) + "-" + name(pair.bob);
}

RegionPair parse_region_pair(std::string_view name) {
  for (const auto& pair : kAllRegionPairs) {
    if (name == to_string(pair)) return pair;
  }
  throw std::invalid_argument("unknown region pair '" + std::string(name) +
                              "' (expected I-I, I-II, II-I, II-II)");
}

ComplexMatrix dilate_op(const ComplexMatrix& op, const AccelerationParam& r) {
  if (op.dim() != 2) {
    throw std::invalid_argument("dilate_op: expected a 2x2 operator, got dimension " +
                                std::to_string(op.dim()));
  }
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (op(i, j) == Complex{}) continue;
      out += dilate_dyad(i, j, r.cos(), r.sin()) * op(i, j);
    }
  return out;
}

ComplexMatrix dilate_state(const ComplexMatrix& rho, const AccelerationParam& ra,
                           const AccelerationParam& rb) {
  if (rho.dim() != 4) throw std::invalid_argument("dilate_state: expected a 4x4 density matrix");
  if (auto check = is_density_matrix(rho, 1e-10); !check) {
    throw std::invalid_argument("dilate_state: input is not a density matrix (" +
                                check.diagnostic + ")");
  }
  std::array<ComplexMatrix, 4> alice;
  std::array<ComplexMatrix, 4> bob;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      alice[2 * i + k] = dilate_dyad(i, k, ra.cos(), ra.sin());
      bob[2 * i + k] = dilate_dyad(i, k, rb.cos(), rb.sin());
    }

  // rho[(i j), (k l)] |i><k|_A (x) |j><l|_B
  ComplexMatrix out(16);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          const Complex coeff = rho(2 * i + j, 2 * k + l);
          if (coeff == Complex{}) continue;
          out += kron(alice[2 * i + k], bob[2 * j + l]) * coeff;
        }
  return out;
}

PauliTransfer mode_transfer(const AccelerationParam& r, ModeRegion region) {
  const double c = r.cos();
  const double s = r.sin();
  PauliTransfer out;
  out.m[0][0] = 1.0;
  if (region == ModeRegion::kI) {
    out.m[3][0] = -s * s;
    out.m[1][1] = c;
    out.m[2][2] = c;
    out.m[3][3] = c * c;
  } else {
    out.m[3][0] = c * c;
    out.m[1][1] = s;
    out.m[2][2] = -s;
    out.m[3][3] = -s * s;
  }
  return out;
}

std::array<double, 4> reduce_mode(const std::array<double, 4>& op_coeffs,
                                  const AccelerationParam& r, ModeRegion region) {
  const PauliTransfer m = mode_transfer(r, region);
  std::array<double, 4> out{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) out[a] += m.m[a][b] * op_coeffs[b];
  return out;
}

TwoQubitBloch reduce_pair(const TwoQubitBloch& s, const AccelerationParam& ra,
                          const AccelerationParam& rb, RegionPair pair) {
  return apply_transfers(mode_transfer(ra, pair.alice), mode_transfer(rb, pair.bob), s);
}

TwoQubitBloch reduce_pair_by_dilation(const TwoQubitBloch& s, const AccelerationParam& ra,
                                      const AccelerationParam& rb, RegionPair pair) {
  const ComplexMatrix full = dilate_state(bloch_to_density(s), ra, rb);
  const std::array<std::size_t, 4> dims{2, 2, 2, 2};
  const std::array<std::size_t, 2> keep{region_slot(pair.alice, 0), region_slot(pair.bob, 2)};
  return density_to_bloch(partial_trace(full, dims, keep));
}

std::array<TwoQubitBloch, 4> quartet(const TwoQubitBloch& s, const AccelerationParam& ra,
                                     const AccelerationParam& rb) {
  std::array<TwoQubitBloch, 4> out;
  for (std::size_t i = 0; i < kAllRegionPairs.size(); ++i)
    out[i] = reduce_pair(s, ra, rb, kAllRegionPairs[i]);
  return out;
}

}  // namespace qdisc
