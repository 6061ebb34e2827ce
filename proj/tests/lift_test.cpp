// Copyright 2026 The fockgate authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "fockgate/algebra.hpp"
#include "fockgate/lift.hpp"
#include "fockgate/random.hpp"
#include "test_support.hpp"

using namespace fockgate;

namespace {

Eigen::MatrixXcd hadamard2() {
  Eigen::MatrixXcd h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

}  // namespace

TEST_CASE("differential lift of the canonical generators") {
  auto basis = FockBasis::enumerate(2, 2);
  const std::complex<double> i(0.0, 1.0);

  Eigen::MatrixXcd number_generator = Eigen::MatrixXcd::Zero(2, 2);
  number_generator(0, 0) = i;
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
  expected.diagonal() << 2.0 * i, i, 0.0;
  CHECK((differential_lift(number_generator, *basis) - expected).cwiseAbs().maxCoeff() < 1e-14);

  CHECK(differential_lift(Eigen::MatrixXcd::Zero(2, 2), *basis).cwiseAbs().maxCoeff() == 0.0);

  Eigen::MatrixXcd e21 = Eigen::MatrixXcd::Zero(2, 2);
  e21(1, 0) = i / 2.0;
  e21(0, 1) = i / 2.0;
  const double r2 = std::sqrt(2.0);
  Eigen::MatrixXcd b1(3, 3);
  b1 << 0, i * r2 / 2.0, 0, i * r2 / 2.0, 0, i * r2 / 2.0, 0, i * r2 / 2.0, 0;
  CHECK((differential_lift(e21, *basis) - b1).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(differential_lift(Eigen::MatrixXcd::Zero(3, 3), *basis), DimensionMismatch);

  std::mt19937_64 rng(2);
  CHECK(is_skew_hermitian(differential_lift(random_skew_hermitian(2, rng), *basis)));
}

TEST_CASE("permanent: small closed forms and the naive oracle") {
  Eigen::MatrixXcd one(1, 1);
  one << std::complex<double>(2.5, 1.0);
  CHECK(std::abs(permanent(one) - std::complex<double>(2.5, 1.0)) < 1e-14);

  Eigen::MatrixXcd two(2, 2);
  two << 1, 2, 3, 4;
  CHECK(std::abs(permanent(two) - std::complex<double>(10.0)) < 1e-12);  // 1*4 + 2*3

  CHECK(std::abs(permanent(Eigen::MatrixXcd::Identity(3, 3)) - 1.0) < 1e-12);
  CHECK(std::abs(permanent(Eigen::MatrixXcd::Ones(3, 3)) - 6.0) < 1e-12);

  std::mt19937_64 rng(1);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 4; ++trial) {
    Eigen::MatrixXcd a(5, 5);
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) a(r, c) = std::complex<double>(gauss(rng), gauss(rng));
    CHECK(std::abs(permanent(a) - fgtest::naive_permanent(a)) < 1e-10);
  }
}

TEST_CASE("photonic lift on worked interferometers") {
  const ScatteringMatrix identity(Eigen::MatrixXcd::Identity(2, 2));
  const LiftedUnitary lifted_identity = photonic_lift(identity, 2);
  CHECK((lifted_identity.matrix - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <
        1e-12);

  Eigen::MatrixXcd swap(2, 2);
  swap << 0, 1, 1, 0;
  const LiftedUnitary lifted_swap = photonic_lift(ScatteringMatrix(swap), 2);
  auto basis = FockBasis::enumerate(2, 2);
  Eigen::MatrixXcd expected_swap = Eigen::MatrixXcd::Zero(3, 3);
  expected_swap(basis->index_of({0, 2}), basis->index_of({2, 0})) = 1.0;
  expected_swap(basis->index_of({1, 1}), basis->index_of({1, 1})) = 1.0;
  expected_swap(basis->index_of({2, 0}), basis->index_of({0, 2})) = 1.0;
  CHECK((lifted_swap.matrix - expected_swap).cwiseAbs().maxCoeff() < 1e-10);

  // Hong-Ou-Mandel: a balanced beam splitter takes |11> to (|20>-|02>)/sqrt(2).
  const LiftedUnitary hom = photonic_lift(ScatteringMatrix(hadamard2()), 2);
  Eigen::VectorXcd in = Eigen::VectorXcd::Zero(3);
  in[basis->index_of({1, 1})] = 1.0;
  const Eigen::VectorXcd out = hom.matrix * in;
  CHECK(std::abs(out[basis->index_of({2, 0})] - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(out[basis->index_of({1, 1})]) < 1e-12);
  CHECK(std::abs(out[basis->index_of({0, 2})] + 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("principal-log branch handling near eigenvalue -1") {
  // phi(-I) multiplies each n-photon state by (-1)^n.
  const ScatteringMatrix minus_identity(-Eigen::MatrixXcd::Identity(2, 2));
  const LiftedUnitary even = photonic_lift(minus_identity, 2);
  CHECK((even.matrix - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);
  const LiftedUnitary odd = photonic_lift(minus_identity, 3);
  CHECK((odd.matrix + Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-9);

  Eigen::MatrixXcd reflect(2, 2);
  reflect << -1, 0, 0, 1;
  const LiftedUnitary lifted = photonic_lift(ScatteringMatrix(reflect), 2);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
  expected.diagonal() << 1.0, -1.0, 1.0;  // (-1)^{n_1} on {|20>,|11>,|02>}
  CHECK((lifted.matrix - expected).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("matrix element oracle agrees with the exponential route") {
  const ScatteringMatrix identity(Eigen::MatrixXcd::Identity(3, 3));
  CHECK(std::abs(matrix_element_oracle(identity, {1, 1, 0}, {1, 1, 0}) - 1.0) < 1e-14);

  const ScatteringMatrix hom(hadamard2());
  CHECK(std::abs(matrix_element_oracle(hom, {1, 1}, {1, 1})) < 1e-14);

  CHECK_THROWS_AS(matrix_element_oracle(hom, {1, 1}, {2, 1}), PhotonNumberMismatch);
  CHECK_THROWS_AS(matrix_element_oracle(hom, {1, 1, 0}, {1, 1}), DimensionMismatch);

  std::mt19937_64 rng(9);
  for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    const ScatteringMatrix s(haar_unitary(m, rng));
    auto basis = FockBasis::enumerate(m, n);
    const LiftedUnitary exponential = photonic_lift(s, n);
    const LiftedUnitary permanents = lift_via_permanents(s, *basis);
    CHECK((exponential.matrix - permanents.matrix).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("lift is a group homomorphism") {
  std::mt19937_64 rng(13);
  for (auto [m, n] : {std::pair{3, 2}, {2, 3}}) {
    const ScatteringMatrix s1(haar_unitary(m, rng));
    const ScatteringMatrix s2(haar_unitary(m, rng));
    const ScatteringMatrix product(s1.matrix() * s2.matrix());
    const Eigen::MatrixXcd lifted_product = photonic_lift(product, n).matrix;
    const Eigen::MatrixXcd product_of_lifts =
        photonic_lift(s1, n).matrix * photonic_lift(s2, n).matrix;
    CHECK((lifted_product - product_of_lifts).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("adjoint conjugation by a lifted unitary preserves the splitting") {
  std::mt19937_64 rng(17);
  for (auto [m, n] : {std::pair{2, 2}, {3, 2}}) {
    auto basis = FockBasis::enumerate(m, n);
    const OrthonormalFrame frame = complete_frame(tangent_frame(*basis));
    const Eigen::MatrixXcd u = photonic_lift(ScatteringMatrix(haar_unitary(m, rng)), n).matrix;
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::MatrixXcd v = random_skew_hermitian(frame.dim, rng);
      const auto [vt, vp] = decompose(v, frame);
      const Eigen::MatrixXcd v_tangent = reconstruct(vt, Eigen::VectorXd::Zero(vp.size()), frame);
      const Eigen::MatrixXcd v_perp = v - v_tangent;

      // Tangent maps to tangent, perpendicular to perpendicular.
      const auto [wt_t, wt_p] = decompose(u * v_tangent * u.adjoint(), frame);
      CHECK(wt_p.cwiseAbs().maxCoeff() < 1e-8);
      const auto [wp_t, wp_p] = decompose(u * v_perp * u.adjoint(), frame);
      CHECK(wp_t.cwiseAbs().maxCoeff() < 1e-8);

      // Norms of both components are conserved.
      const auto [wt, wp] = decompose(u * v * u.adjoint(), frame);
      CHECK(wt.norm() == doctest::Approx(vt.norm()).epsilon(1e-8));
      CHECK(wp.norm() == doctest::Approx(vp.norm()).epsilon(1e-8));
    }
  }
}

TEST_CASE("membership test separates lifted unitaries from generic ones") {
  std::mt19937_64 rng(23);
  auto basis = FockBasis::enumerate(2, 2);
  const OrthonormalFrame frame = complete_frame(tangent_frame(*basis));

  const auto lifted = photonic_lift(ScatteringMatrix(haar_unitary(2, rng)), 2);
  const AdjointTestResult member = is_optical_realization(lifted.matrix, frame);
  CHECK(member.member);
  CHECK(member.residual < 1e-10);

  // Mode permutations lift to Fock-basis permutations, which are members.
  Eigen::MatrixXcd swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(is_optical_realization(photonic_lift(ScatteringMatrix(swap), 2).matrix, frame).member);

  // diag(1, 1, -1) would need lifted phases e^{2ia}=1, e^{i(a+b)}=1,
  // e^{2ib}=-1, which is unsolvable, so it cannot be a member.
  Eigen::MatrixXcd stray = Eigen::MatrixXcd::Identity(3, 3);
  stray(2, 2) = -1.0;
  const AdjointTestResult non_member = is_optical_realization(stray, frame);
  CHECK_FALSE(non_member.member);
  CHECK(non_member.residual > 1e-3);

  for (int trial = 0; trial < 5; ++trial) {
    const AdjointTestResult haar = is_optical_realization(haar_unitary(3, rng), frame);
    CHECK_FALSE(haar.member);
    CHECK(haar.residual > 1e-3);
  }

  CHECK_THROWS_AS(is_optical_realization(Eigen::MatrixXcd::Identity(4, 4), frame),
                  FrameMismatch);
  CHECK_THROWS_AS(is_optical_realization(2.0 * Eigen::MatrixXcd::Identity(3, 3), frame),
                  DomainError);
}
