#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qdisc/analytic.hpp"
#include "qdisc/matrixkit.hpp"

namespace qdisc::test {

inline constexpr double kPi = 3.14159265358979323846;

// Hand-rolled generators for property tests. Deliberately separate from the
// library's Sampler: states here are convex mixtures of random kets, so a bug
// in one construction is not mirrored in the other.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double real(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  std::vector<Complex> ket(std::size_t dim) {
    std::vector<Complex> v(dim);
    double norm = 0.0;
    for (auto& c : v) {
      c = Complex{real(-1, 1), real(-1, 1)};
      norm += std::norm(c);
    }
    for (auto& c : v) c /= std::sqrt(norm);
    return v;
  }

  // Mixture of `terms` random pure states with random weights.
  ComplexMatrix mixed(std::size_t dim, int terms = 3) {
    ComplexMatrix rho(dim);
    std::vector<double> w(static_cast<std::size_t>(terms));
    double total = 0.0;
    for (auto& x : w) total += (x = unit() + 1e-3);
    for (double x : w) {
      const auto v = ket(dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) rho(i, j) += x / total * v[i] * std::conj(v[j]);
    }
    return rho;
  }

  AccelerationParam accel() { return AccelerationParam::from_radians(real(0.0, kPi / 4)); }

 private:
  std::mt19937_64 engine_;
};

inline ComplexMatrix projector(const std::vector<Complex>& v) {
  ComplexMatrix p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) p(i, j) = v[i] * std::conj(v[j]);
  return p;
}

inline TwoQubitBloch diag_state(Vec3 x, Vec3 y, Vec3 t) {
  TwoQubitBloch s;
  s.x = x;
  s.y = y;
  for (std::size_t i = 0; i < 3; ++i) s.t[i][i] = t[i];
  return s;
}

inline ScenarioParams scenario(double p, double ra, double rb, ChannelKind ch, double k,
                               RegionPair pair = {}) {
  ScenarioParams s;
  s.p = WernerParam(p);
  s.ra = AccelerationParam::from_radians(ra);
  s.rb = AccelerationParam::from_radians(rb);
  s.channel = ch;
  s.k = DecayProbability(k);
  s.pair = pair;
  return s;
}

inline constexpr RegionPair kII_II{ModeRegion::kII, ModeRegion::kII};
inline constexpr RegionPair kI_II{ModeRegion::kI, ModeRegion::kII};

}  // namespace qdisc::test
