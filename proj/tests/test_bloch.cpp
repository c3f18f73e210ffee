#include <doctest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qdisc/bloch.hpp"
#include "support.hpp"

using namespace qdisc;
using qdisc::test::Gen;

namespace {

// Swap operator F|ij> = |ji> on two qubits.
ComplexMatrix swap_operator() {
  ComplexMatrix f(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) f(2 * j + i, 2 * i + j) = 1.0;
  return f;
}

// Werner family written as ((2 - p) I + (2p - 1) F) / 6.
ComplexMatrix werner_from_swap(double p) {
  return (ComplexMatrix::identity(4) * Complex{2.0 - p} + swap_operator() * Complex{2.0 * p - 1.0}) *
         Complex{1.0 / 6.0};
}

}  // namespace

TEST_SUITE("bloch") {

TEST_CASE("Pauli matrices") {
  const Complex i{0.0, 1.0};
  CHECK(max_abs_diff(sigma(1) * sigma(2), sigma(3) * i) == 0.0);
  CHECK(max_abs_diff(sigma(0), ComplexMatrix::identity(2)) == 0.0);
  CHECK_THROWS(sigma(4));
}

TEST_CASE("Bell state Phi+ has T = diag(1, -1, 1)") {
  ComplexMatrix bell(4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const TwoQubitBloch s = density_to_bloch(bell);
  CHECK(max_coeff_diff(s, test::diag_state({}, {}, {1.0, -1.0, 1.0})) < 1e-15);
}

TEST_CASE("Werner states match the swap-operator construction") {
  for (double p : {-1.0, -0.3, 0.0, 0.5, 0.6, 0.8, 1.0}) {
    CAPTURE(p);
    const ComplexMatrix rho = bloch_to_density(werner(WernerParam(p)));
    CHECK(max_abs_diff(rho, werner_from_swap(p)) < 1e-15);
  }
}

TEST_CASE("Werner p = 1 is a third of the triplet projector") {
  const auto e = hermitian_eigenvalues(bloch_to_density(werner(WernerParam(1.0))));
  CHECK(e[0] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(e[1] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(e[2] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(std::abs(e[3]) < 1e-15);
}

TEST_CASE("Werner p = 1/2 is maximally mixed") {
  const ComplexMatrix rho = bloch_to_density(werner(WernerParam(0.5)));
  CHECK(max_abs_diff(rho, ComplexMatrix::identity(4) * Complex{0.25}) < 1e-16);
}

TEST_CASE("Werner parameter range") {
  CHECK_NOTHROW(WernerParam(-1.0));
  CHECK_THROWS_AS(WernerParam(1.0000001), std::invalid_argument);
  CHECK_THROWS_AS(WernerParam(std::nan("")), std::invalid_argument);
}

TEST_CASE("Bloch coefficients survive a round trip through the density matrix") {
  Gen gen(3);
  for (int n = 0; n < 100; ++n) {
    const ComplexMatrix rho = gen.mixed(4, 1 + n % 4);
    const TwoQubitBloch s = density_to_bloch(rho);
    CHECK(max_abs_diff(bloch_to_density(s), rho) < 1e-14);
    CHECK(max_coeff_diff(TwoQubitBloch::from_coefficients(s.coefficients()), s) == 0.0);
  }
}

TEST_CASE("coefficients are ordered x, y, then T row-major") {
  TwoQubitBloch s;
  s.x = {1, 2, 3};
  s.y = {4, 5, 6};
  s.t = {{{7, 8, 9}, {10, 11, 12}, {13, 14, 15}}};
  const auto c = s.coefficients();
  for (std::size_t i = 0; i < 15; ++i) CHECK(c[i] == static_cast<double>(i + 1));
}

TEST_CASE("density_to_bloch rejects non-states") {
  CHECK_THROWS_AS(density_to_bloch(ComplexMatrix::identity(2) * Complex{0.5}), std::invalid_argument);
  CHECK_THROWS_AS(density_to_bloch(ComplexMatrix::identity(4)), std::invalid_argument);
  ComplexMatrix skew = ComplexMatrix::identity(4) * Complex{0.25};
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(density_to_bloch(skew), std::invalid_argument);
}

TEST_CASE("Pauli transfers act as R' = M_A R M_B^t") {
  // Alice: sigma1 -> sigma2 (and nothing else moves).
  PauliTransfer ma = PauliTransfer::identity();
  ma.m[1][1] = 0.0;
  ma.m[2][1] = 1.0;
  ma.m[2][2] = 0.0;
  TwoQubitBloch s;
  s.x = {0.3, 0.0, 0.0};
  s.t[0][2] = 0.4;
  const TwoQubitBloch out = apply_transfers(ma, PauliTransfer::identity(), s);
  CHECK(out.x[1] == 0.3);
  CHECK(out.x[0] == 0.0);
  CHECK(out.t[1][2] == 0.4);
  CHECK(out.t[0][2] == 0.0);
}

TEST_CASE("then composes in application order") {
  PauliTransfer scale = PauliTransfer::identity();
  scale.m[3][3] = 0.5;
  PauliTransfer shift = PauliTransfer::identity();
  shift.m[3][0] = 0.2;  // I -> I + 0.2 sigma3
  // shift first, then scale: I -> I + 0.1 sigma3.
  CHECK(shift.then(scale).m[3][0] == doctest::Approx(0.1));
  CHECK(scale.then(shift).m[3][0] == doctest::Approx(0.2));
}

}  // TEST_SUITE
