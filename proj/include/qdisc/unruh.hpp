#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "qdisc/bloch.hpp"
#include "qdisc/matrixkit.hpp"

namespace qdisc {

/// Acceleration parameter r in [0, pi/4], with cos r = (exp(-2 pi omega c / a) + 1)^(-1/2).
class AccelerationParam {
 public:
  struct Physical {
    double acceleration;
    double omega;
    double light_speed;
  };

  /// Throws std::invalid_argument unless 0 <= r <= pi/4.
  static AccelerationParam from_radians(double r);
  /// Throws std::invalid_argument unless a, omega, c are all positive and finite.
  static AccelerationParam from_physical(double acceleration, double omega, double light_speed);

  double radians() const noexcept { return r_; }
  double cos() const noexcept { return cos_; }
  double sin() const noexcept { return sin_; }
  const std::optional<Physical>& physical() const noexcept { return physical_; }

 private:
  explicit AccelerationParam(double r);

  double r_;
  double cos_;
  double sin_;
  std::optional<Physical> physical_;
};

enum class ModeRegion { kI, kII };

struct RegionPair {
  ModeRegion alice = ModeRegion::kI;
  ModeRegion bob = ModeRegion::kI;

  auto operator<=>(const RegionPair&) const = default;
};

/// I-I, I-II, II-I, II-II in that order.
inline constexpr std::array<RegionPair, 4> kAllRegionPairs{{
    {ModeRegion::kI, ModeRegion::kI},
    {ModeRegion::kI, ModeRegion::kII},
    {ModeRegion::kII, ModeRegion::kI},
    {ModeRegion::kII, ModeRegion::kII},
}};

std::string to_string(RegionPair pair);
RegionPair parse_region_pair(std::string_view name);

/// Image of a single-mode operator in the two-mode (region I slow, region II
/// fast) space, by linearity over the dyads |i><j|:
///   |0><0| -> cos^2 |00><00| + cos sin (|00><11| + |11><00|) + sin^2 |11><11|
///   |0><1| -> cos |00><10| + sin |11><10|
///   |1><0| -> cos |10><00| + sin |10><11|
///   |1><1| -> |10><10|
ComplexMatrix dilate_op(const ComplexMatrix& op, const AccelerationParam& r);

/// Four-mode state ordered A_I, A_II, B_I, B_II. Throws std::invalid_argument
/// if rho is not a two-qubit density matrix (tolerance 1e-10).
ComplexMatrix dilate_state(const ComplexMatrix& rho, const AccelerationParam& ra,
                           const AccelerationParam& rb);

/// Partial trace over the partner region, as a map on (I, s1, s2, s3)
/// coefficients. Region I keeps the region-I mode, region II keeps region II.
PauliTransfer mode_transfer(const AccelerationParam& r, ModeRegion region);

/// Coefficients (c0, c1, c2, c3) of c0 I + sum c_i sigma_i, reduced.
std::array<double, 4> reduce_mode(const std::array<double, 4>& op_coeffs,
                                  const AccelerationParam& r, ModeRegion region);

/// Two-qubit state seen by the modes named in `pair`, computed on Bloch
/// coefficients directly.
TwoQubitBloch reduce_pair(const TwoQubitBloch& s, const AccelerationParam& ra,
                          const AccelerationParam& rb, RegionPair pair);

/// The same reduction through the explicit 16x16 dilation and a partial trace.
TwoQubitBloch reduce_pair_by_dilation(const TwoQubitBloch& s, const AccelerationParam& ra,
                                      const AccelerationParam& rb, RegionPair pair);

/// reduce_pair for each entry of kAllRegionPairs, same order.
std::array<TwoQubitBloch, 4> quartet(const TwoQubitBloch& s, const AccelerationParam& ra,
                                     const AccelerationParam& rb);

}  // namespace qdisc
