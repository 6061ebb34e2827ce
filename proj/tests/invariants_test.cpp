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

#include <algorithm>
#include <random>

#include "fockgate/invariants.hpp"
#include "fockgate/json_io.hpp"
#include "fockgate/lift.hpp"
#include "fockgate/random.hpp"
#include "test_support.hpp"

using namespace fockgate;

namespace {

DensityMatrix pure_density(const std::string& expr) {
  return DensityMatrix::from_pure(parse_state(expr));
}

double tangent_projection_only(const DensityMatrix& rho, const OrthonormalFrame& frame) {
  const std::complex<double> i(0.0, 1.0);
  const Eigen::MatrixXcd v = i * rho.matrix();
  double total = 0.0;
  for (const auto& c : frame.tangent) {
    const double coeff = inner_product(c, v);
    total += coeff * coeff;
  }
  return total;
}

}  // namespace

TEST_CASE("constants at (2,2): Gram values, closed-formula coefficients, cross-identities") {
  const InvariantConstants c = constants(2, 2);
  CHECK(c.A == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(c.b() == doctest::Approx(1.0).epsilon(1e-12));
  // Brute-force sum over {|20>,|11>,|02>} of <n_1> is 2 + 1 + 0 = 3.
  CHECK(c.C == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(c.C1 == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(c.C2 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c.alpha_value() == doctest::Approx(5.0).epsilon(1e-12));

  const BruteForceConstants brute = constants_brute_force(2, 2);
  CHECK(brute.A == 5.0);
  CHECK(brute.B == 1.0);
  CHECK(brute.C == 3.0);

  const auto [c1, c2] = closed_constants_exact(2, 2);
  CHECK(c1 == Rational(5, 6));
  CHECK(c2 == Rational(1, 2));

  CHECK_THROWS_AS(constants(2, 1).b(), DomainError);
  CHECK_THROWS_AS(constants(2, 1).alpha_value(), DomainError);
  CHECK_THROWS_AS(constants(1, 2), DomainError);
}

TEST_CASE("closed-form constants match the enumeration sums over every small space") {
  for (int m = 2; m <= 10; ++m) {
    for (int n = 1; n <= 12; ++n) {
      if (dimension(m, n) > 300) break;
      const BruteForceConstants brute = constants_brute_force(m, n);
      const InvariantConstants closed = constants(m, n);
      CHECK(closed.A == doctest::Approx(brute.A).epsilon(1e-9));
      CHECK(closed.C == doctest::Approx(brute.C).epsilon(1e-9));
      if (n >= 2)
        CHECK(closed.b() == doctest::Approx(brute.B).epsilon(1e-9));
      else
        CHECK(brute.B == 0.0);
    }
  }
}

TEST_CASE("number-sector Gram matrix and its closed-form inverse") {
  const auto [g, g_inverse] = gram_number_sector(2, 2);
  Eigen::MatrixXd expected(2, 2);
  expected << 5, 1, 1, 5;
  CHECK((g - expected).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((g * g_inverse - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  const auto [g34, g34_inverse] = gram_number_sector(3, 4);
  CHECK((g34_inverse - g34.inverse()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((g34 * g34_inverse - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);

  CHECK_THROWS_AS(gram_number_sector(2, 1), DomainError);
}

TEST_CASE("projection invariants reproduce the two-photon two-mode table") {
  auto frame = shared_frame(2, 2);
  const InvariantReport twenty = invariants_projection(pure_density("|2,0>"), *frame);
  const InvariantReport eleven = invariants_projection(pure_density("|1,1>"), *frame);
  const InvariantReport zerotwo = invariants_projection(pure_density("|0,2>"), *frame);
  const InvariantReport hom =
      invariants_projection(pure_density("(|2,0> - |0,2>)/sqrt(2)"), *frame);

  CHECK(twenty.tangent == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
  CHECK(std::abs(twenty.tangent - 0.83333) < 1e-5);
  CHECK(eleven.tangent == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(eleven.perpendicular == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(zerotwo.tangent == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
  CHECK(hom.tangent == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

  for (const auto& report : {twenty, eleven, zerotwo, hom})
    CHECK(report.tangent + report.perpendicular == doctest::Approx(report.purity).epsilon(1e-8));

  auto wrong_frame = shared_frame(3, 2);
  CHECK_THROWS_AS(invariants_projection(pure_density("|1,1>"), *wrong_frame), FrameMismatch);
}

TEST_CASE("closed formula on NOON pairs and single-occupancy states") {
  auto noon = [](int n) {
    return parse_state_expression("(|" + std::to_string(n) + ",0> + |0," + std::to_string(n) +
                                  ">)/sqrt(2)");
  };
  auto balanced = [](int k) {
    return parse_state_expression("|" + std::to_string(k) + "," + std::to_string(k) + ">");
  };
  const double printed[] = {0.33333, 0.20000, 0.14286, 0.11111, 0.09090};
  for (int k = 1; k <= 5; ++k) {
    const double from_pair = tangent_invariant_closed(balanced(k));
    const double from_noon = tangent_invariant_closed(noon(2 * k));
    CHECK(std::abs(from_pair - printed[k - 1]) < 1e-5);
    CHECK(from_pair == doctest::Approx(from_noon).epsilon(1e-12));
  }

  // A single occupied mode zeroes every cross term, leaving exactly C1.
  for (int n : {1, 2, 5}) {
    const auto lone = parse_state_expression("|" + std::to_string(n) + ",0,0>");
    CHECK(tangent_invariant_closed(lone) ==
          doctest::Approx(constants(3, n).C1).epsilon(1e-12));
  }
}

TEST_CASE("reduced sums: redistribution, Bell block, GHZ and W blocks") {
  const auto s330 = parse_state_expression("|3,3,0>");
  const auto s114 = parse_state_expression("|1,1,4>");
  CHECK(reduced_sum_exact(s330)->rational() == Rational(-9));
  CHECK(reduced_sum_exact(s114)->rational() == Rational(-9));

  const auto bell = parse_state_expression("(|1,0,1,0> + |0,1,0,1>)/sqrt(2)");
  CHECK(reduced_sum_exact(bell)->rational() == Rational(-3, 2));

  const auto ghz = parse_state_expression("(|0,1,0,1,0,1> + |1,0,1,0,1,0>)/sqrt(2)");
  CHECK(reduced_sum_exact(ghz)->rational() == Rational(-15, 4));

  const auto w =
      parse_state_expression("(|1,0,0,1,0,1> + |0,1,1,0,0,1> + |0,1,0,1,1,0>)/sqrt(3)");
  CHECK(reduced_sum_exact(w)->rational() == Rational(-11, 3));

  // The W hopping expectations vanish; confirm against the dense operator.
  auto basis = FockBasis::enumerate(6, 3);
  const PureState w_dense = w.to_pure_state();
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j) {
      if (i == j) continue;
      CHECK(std::abs(fgtest::dense_expectation(
                w_dense, fgtest::dense_hopping_operator(*basis, i, j))) < 1e-14);
      CHECK(exact_hopping_expectation(w, i, j)->is_zero());
    }
  }

  // Doubles agree with the exact route.
  for (const auto& state : {s330, bell, ghz, w})
    CHECK(reduced_sum(state) ==
          doctest::Approx(reduced_sum_exact(state)->to_double()).epsilon(1e-12));
}

TEST_CASE("closed and projection paths agree on random states across small spaces") {
  std::mt19937_64 rng(29);
  int covered = 0;
  for (int m = 2; m <= 8; ++m) {
    for (int n = 2; n <= 8; ++n) {
      if (dimension(m, n) > 300) break;
      auto basis = FockBasis::enumerate(m, n);
      const OrthonormalFrame frame = tangent_frame(*basis);
      for (int trial = 0; trial < 3; ++trial) {
        const PureState psi(basis, random_state_vector(basis->size(), rng));
        const double closed = tangent_invariant_closed(psi);
        const double projected = tangent_projection_only(DensityMatrix::from_pure(psi), frame);
        CHECK(closed == doctest::Approx(projected).epsilon(1e-8));
      }
      ++covered;
    }
  }
  CHECK(covered >= 15);
}

TEST_CASE("invariants are independent of the basis ordering") {
  std::mt19937_64 rng(31);
  auto canonical = FockBasis::enumerate(3, 2);
  std::vector<FockVector> shuffled = canonical->states();
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  auto permuted = FockBasis::with_order(3, 2, shuffled);

  const OrthonormalFrame frame_a = complete_frame(tangent_frame(*canonical));
  const OrthonormalFrame frame_b = complete_frame(tangent_frame(*permuted));

  const Eigen::VectorXcd amplitudes = random_state_vector(canonical->size(), rng);
  Eigen::VectorXcd relabeled(amplitudes.size());
  for (std::int64_t k = 0; k < canonical->size(); ++k)
    relabeled[permuted->index_of(canonical->state(k))] = amplitudes[k];

  const auto report_a =
      invariants_projection(DensityMatrix::from_pure(PureState(canonical, amplitudes)), frame_a);
  const auto report_b =
      invariants_projection(DensityMatrix::from_pure(PureState(permuted, relabeled)), frame_b);
  CHECK(report_a.tangent == doctest::Approx(report_b.tangent).epsilon(1e-10));
  CHECK(report_a.perpendicular == doctest::Approx(report_b.perpendicular).epsilon(1e-10));
}

TEST_CASE("adjoint evolution conserves both invariants and never trips the verdict") {
  std::mt19937_64 rng(37);
  const VerdictOptions options;
  for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    auto frame = shared_frame(m, n);
    auto basis = FockBasis::enumerate(m, n);
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::MatrixXcd u = photonic_lift(ScatteringMatrix(haar_unitary(m, rng)), n).matrix;
      const DensityMatrix rho = random_density(basis, 2, rng);
      const DensityMatrix evolved = rho.evolved(u);
      const InvariantReport before = invariants_projection(rho, *frame);
      const InvariantReport after = invariants_projection(evolved, *frame);
      CHECK(before.tangent == doctest::Approx(after.tangent).epsilon(1e-8));
      CHECK(before.perpendicular == doctest::Approx(after.perpendicular).epsilon(1e-8));
      CHECK_FALSE(transition_verdict(rho, evolved, *frame, options).forbidden());
    }
  }
}

TEST_CASE("verdicts on the worked transitions") {
  auto frame = shared_frame(2, 2);

  const Verdict impossible =
      transition_verdict(pure_density("|1,1>"), pure_density("|2,0>"), *frame);
  CHECK(impossible.forbidden());
  REQUIRE(impossible.witness.has_value());
  CHECK(impossible.witness->quantity == "I_t");
  CHECK(impossible.witness->gap == doctest::Approx(0.5).epsilon(1e-9));

  const Verdict hom = transition_verdict(pure_density("|1,1>"),
                                         pure_density("(|2,0> - |0,2>)/sqrt(2)"), *frame);
  CHECK_FALSE(hom.forbidden());

  const Verdict swap = transition_verdict(pure_density("|2,0>"), pure_density("|0,2>"), *frame);
  CHECK_FALSE(swap.forbidden());

  // Mixed against pure: purity fires first.
  const DensityMatrix mixed = parse_mixture("0.5: |2,0>; 0.5: |0,2>");
  const Verdict purity_gap = transition_verdict(mixed, pure_density("|1,1>"), *frame);
  CHECK(purity_gap.forbidden());
  CHECK(purity_gap.witness->quantity == "purity");

  CHECK_THROWS_AS(transition_verdict(pure_density("|1,1>"),
                                     DensityMatrix::from_pure(parse_state("|1,1,0>")), *frame),
                  ShapeMismatch);
}

TEST_CASE("expression verdicts certify with exact arithmetic") {
  // |22> vs NOON_4 share every invariant this criterion sees: the verdict
  // must stay inconclusive even though the transformation is impossible.
  const auto in = parse_state_expression("|2,2>");
  const auto noon4 = parse_state_expression("(|4,0> + |0,4>)/sqrt(2)");
  CHECK(*reduced_sum_exact(in) == *reduced_sum_exact(noon4));
  CHECK_FALSE(transition_verdict(in, noon4).forbidden());

  // Fock input against the Bell-with-ancilla block: half-integer gap.
  const auto fock = parse_state_expression("|2,0,0,0>");
  const auto bell = parse_state_expression("(|1,0,1,0> + |0,1,0,1>)/sqrt(2)");
  const Verdict verdict = transition_verdict(fock, bell);
  CHECK(verdict.forbidden());
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->quantity == "reduced_sum");
  REQUIRE(verdict.witness->exact_gap.has_value());
  CHECK(*verdict.witness->exact_gap == Rational(3, 2));
  CHECK(boost::multiprecision::denominator(*verdict.witness->exact_gap) == 2);

  CHECK_THROWS_AS(transition_verdict(in, parse_state_expression("|2,2,0>")), ShapeMismatch);
}

TEST_CASE("pure states satisfy I_t + I_p = 1 on both paths") {
  std::mt19937_64 rng(41);
  auto frame = shared_frame(3, 2);
  auto basis = FockBasis::enumerate(3, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi(basis, random_state_vector(basis->size(), rng));
    const InvariantReport report = invariants_projection(DensityMatrix::from_pure(psi), *frame);
    CHECK(report.tangent + report.perpendicular == doctest::Approx(1.0).epsilon(1e-8));

    const DensityMatrix mixed = random_density(basis, 3, rng);
    const InvariantReport mixed_report = invariants_projection(mixed, *frame);
    CHECK(mixed_report.tangent + mixed_report.perpendicular ==
          doctest::Approx(mixed_report.purity).epsilon(1e-8));
    CHECK(mixed_report.purity < 1.0);
  }
}
