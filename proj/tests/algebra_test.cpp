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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "fockgate/algebra.hpp"
#include "fockgate/invariants.hpp"
#include "fockgate/random.hpp"

using namespace fockgate;

namespace {

// The four 3x3 generators of the two-photon two-mode image algebra, written
// out entry by entry on the basis {|20>, |11>, |02>}.
std::vector<Eigen::MatrixXcd> two_mode_two_photon_generators() {
  const std::complex<double> i(0.0, 1.0);
  const double r2 = std::sqrt(2.0);
  Eigen::MatrixXcd e_sym(3, 3), n1(3, 3), n2(3, 3), f_asym(3, 3);
  e_sym << 0, i * r2 / 2.0, 0, i * r2 / 2.0, 0, i * r2 / 2.0, 0, i * r2 / 2.0, 0;
  n1 << 2.0 * i, 0, 0, 0, i, 0, 0, 0, 0;
  n2 << 0, 0, 0, 0, i, 0, 0, 0, 2.0 * i;
  f_asym << 0, -r2 / 2.0, 0, r2 / 2.0, 0, -r2 / 2.0, 0, r2 / 2.0, 0;
  return {e_sym, n1, n2, f_asym};
}

double max_abs(const Eigen::MatrixXcd& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("image algebra basis reproduces the two-photon two-mode generators entry-exact") {
  auto basis = FockBasis::enumerate(2, 2);
  const auto elements = image_algebra_basis(*basis);
  REQUIRE(elements.size() == 4);
  const auto expected = two_mode_two_photon_generators();
  // Library order: number generators first, then symmetric, then antisymmetric.
  CHECK(max_abs(elements[0] - expected[1]) < 1e-14);
  CHECK(max_abs(elements[1] - expected[2]) < 1e-14);
  CHECK(max_abs(elements[2] - expected[0]) < 1e-14);
  CHECK(max_abs(elements[3] - expected[3]) < 1e-14);
  for (const auto& element : elements) CHECK(is_skew_hermitian(element));
}

TEST_CASE("inner products of the number generators") {
  auto basis = FockBasis::enumerate(2, 2);
  const auto elements = image_algebra_basis(*basis);
  CHECK(inner_product(elements[0], elements[0]) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(inner_product(elements[0], elements[1]) == doctest::Approx(1.0).epsilon(1e-12));
  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(3, 3);
  CHECK(inner_product(zero, zero) == 0.0);
  CHECK_THROWS_AS(inner_product(zero, Eigen::MatrixXcd::Zero(2, 2)), DimensionMismatch);

  // On skew-Hermitian inputs the form reduces to -tr(uv).
  std::mt19937_64 rng(3);
  const Eigen::MatrixXcd u = random_skew_hermitian(3, rng);
  const Eigen::MatrixXcd v = random_skew_hermitian(3, rng);
  CHECK(inner_product(u, v) == doctest::Approx(-(u * v).trace().real()).epsilon(1e-12));
}

TEST_CASE("single-mode and single-photon image algebras") {
  auto one_mode = FockBasis::enumerate(1, 4);
  const auto single = image_algebra_basis(*one_mode);
  REQUIRE(single.size() == 1);
  CHECK(single[0](0, 0) == std::complex<double>(0.0, 4.0));

  // With one photon the lift is the identity representation of u(2).
  auto one_photon = FockBasis::enumerate(2, 1);
  const auto elements = image_algebra_basis(*one_photon);
  REQUIRE(elements.size() == 4);
  const std::complex<double> i(0.0, 1.0);
  Eigen::MatrixXcd n1(2, 2), n2(2, 2), e21(2, 2), f21(2, 2);
  n1 << i, 0, 0, 0;
  n2 << 0, 0, 0, i;
  e21 << 0, i / 2.0, i / 2.0, 0;
  f21 << 0, -0.5, 0.5, 0;
  CHECK(max_abs(elements[0] - n1) < 1e-14);
  CHECK(max_abs(elements[1] - n2) < 1e-14);
  CHECK(max_abs(elements[2] - e21) < 1e-14);
  CHECK(max_abs(elements[3] - f21) < 1e-14);
}

TEST_CASE("Gram-Schmidt produces an orthonormal span and is a fixed point on orthonormal input") {
  auto basis = FockBasis::enumerate(2, 2);
  const auto elements = image_algebra_basis(*basis);
  const auto ortho = orthonormalize(elements);
  REQUIRE(ortho.size() == 4);
  for (std::size_t a = 0; a < ortho.size(); ++a) {
    for (std::size_t b = 0; b < ortho.size(); ++b) {
      const double expected = a == b ? 1.0 : 0.0;
      CHECK(inner_product(ortho[a], ortho[b]) == doctest::Approx(expected).epsilon(1e-10));
    }
    CHECK(is_skew_hermitian(ortho[a]));
  }

  const auto again = orthonormalize(ortho);
  for (std::size_t a = 0; a < ortho.size(); ++a) CHECK(max_abs(again[a] - ortho[a]) < 1e-12);

  // Every original generator projects back onto the span with zero residual.
  for (const auto& element : elements) {
    Eigen::MatrixXcd residual = element;
    for (const auto& c : ortho) residual -= inner_product(c, residual) * c;
    CHECK(residual.norm() < 1e-8);
  }

  auto duplicated = elements;
  duplicated.push_back(elements.front());
  CHECK_THROWS_AS(orthonormalize(duplicated), RankDeficient);
}

TEST_CASE("inner products of the raw image basis follow the Gram product table") {
  for (int m = 2; m <= 8; ++m) {
    for (int n = 1; n <= 10; ++n) {
      if (dimension(m, n) > 120) break;
      auto basis = FockBasis::enumerate(m, n);
      const auto elements = image_algebra_basis(*basis);
      const BruteForceConstants expected = constants_brute_force(m, n);
      if (n >= 2) {
        const InvariantConstants closed = constants(m, n);
        CHECK(expected.A == doctest::Approx(closed.A).epsilon(1e-9));
        CHECK(expected.B == doctest::Approx(closed.b()).epsilon(1e-9));
        CHECK(expected.C == doctest::Approx(closed.C).epsilon(1e-9));
      }
      const std::size_t pair_count = static_cast<std::size_t>(m) * (m - 1) / 2;
      const auto kind = [&](std::size_t a) {  // 0: number, 1: symmetric, 2: antisymmetric
        if (a < static_cast<std::size_t>(m)) return 0;
        return a < static_cast<std::size_t>(m) + pair_count ? 1 : 2;
      };
      for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = a; b < elements.size(); ++b) {
          const double value = inner_product(elements[a], elements[b]);
          double want = 0.0;
          if (kind(a) == 0 && kind(b) == 0)
            want = a == b ? expected.A : expected.B;
          else if (kind(a) == kind(b) && a == b)
            want = 0.5 * (expected.B + expected.C);
          // distinct same-kind pairs and all cross-kind products vanish
          CHECK(value == doctest::Approx(want).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("frame completion counts and orthonormality") {
  auto check_frame = [](int m, int n, std::int64_t expected_perp) {
    auto basis = FockBasis::enumerate(m, n);
    const OrthonormalFrame frame = complete_frame(tangent_frame(*basis));
    CHECK(static_cast<std::int64_t>(frame.perpendicular.size()) == expected_perp);
    CHECK(frame.has_perpendicular());
    std::vector<AlgebraElement> all = frame.tangent;
    all.insert(all.end(), frame.perpendicular.begin(), frame.perpendicular.end());
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a; b < all.size(); ++b)
        CHECK(inner_product(all[a], all[b]) ==
              doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-9));
  };
  check_frame(2, 2, 5);   // 9 - 4
  check_frame(2, 1, 0);   // the image is all of u(2)
  check_frame(2, 3, 12);  // 16 - 4
}

TEST_CASE("decompose recovers coefficients and reconstructs") {
  auto basis = FockBasis::enumerate(2, 2);
  const OrthonormalFrame frame = complete_frame(tangent_frame(*basis));

  const auto [t0, p0] = decompose(frame.tangent[0], frame);
  CHECK(t0[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t0.tail(3).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(p0.cwiseAbs().maxCoeff() < 1e-12);

  // i|11><11| has tangent energy 1/3.
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(3, 3);
  rho(1, 1) = 1.0;
  const std::complex<double> i(0.0, 1.0);
  const auto [tangent, perp] = decompose(i * rho, frame);
  CHECK(tangent.squaredNorm() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(tangent.squaredNorm() + perp.squaredNorm() == doctest::Approx(1.0).epsilon(1e-9));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXcd v = random_skew_hermitian(3, rng);
    const auto [tc, pc] = decompose(v, frame);
    CHECK((reconstruct(tc, pc, frame) - v).norm() < 1e-8);
  }
}

TEST_CASE("frame cache returns shared instances and survives disk round trips") {
  const FrameOptions options{.cap = kDefaultDimensionCap, .with_perpendicular = true,
                             .cache_directory = std::nullopt};
  auto first = shared_frame(2, 2, options);
  auto second = shared_frame(2, 2, options);
  CHECK(first.get() == second.get());

  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "fockgate_frames";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / "frame.bin";
  save_frame(*first, path);
  const auto loaded = load_frame(path, 2, 2);
  REQUIRE(loaded.has_value());
  CHECK(loaded->dim == first->dim);
  REQUIRE(loaded->tangent.size() == first->tangent.size());
  for (std::size_t k = 0; k < loaded->tangent.size(); ++k)
    CHECK(max_abs(loaded->tangent[k] - first->tangent[k]) == 0.0);

  CHECK_FALSE(load_frame(path, 3, 2).has_value());  // wrong shape is rejected

  // A truncated file must be rejected, not trusted.
  const auto corrupt = dir / "corrupt.bin";
  std::filesystem::copy_file(path, corrupt);
  std::filesystem::resize_file(corrupt, std::filesystem::file_size(corrupt) / 2);
  CHECK_FALSE(load_frame(corrupt, 2, 2).has_value());
  std::filesystem::remove_all(dir);
}
