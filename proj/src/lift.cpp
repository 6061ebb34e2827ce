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

#include "fockgate/lift.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "fockgate/algebra.hpp"

namespace fockgate {

namespace {

bool is_unitary(const Eigen::MatrixXcd& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
             .cwiseAbs()
             .maxCoeff() <= tolerance;
}

// Principal logarithm of a unitary matrix through its Schur form (diagonal
// for normal inputs). Result is skew-Hermitian. Throws LogBranchFailure when
// an eigenvalue sits within `branch_margin` of -1.
Eigen::MatrixXcd unitary_log(const Eigen::MatrixXcd& u, double branch_margin) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
  if (schur.info() != Eigen::Success) throw Error("Schur decomposition failed");
  const Eigen::MatrixXcd& q = schur.matrixU();
  Eigen::VectorXcd log_diag(u.rows());
  for (Eigen::Index k = 0; k < u.rows(); ++k) {
    const std::complex<double> lambda = schur.matrixT()(k, k);
    if (std::abs(lambda + 1.0) < branch_margin)
      throw LogBranchFailure("eigenvalue on the principal-log branch cut");
    log_diag[k] = std::complex<double>(0.0, std::arg(lambda));
  }
  Eigen::MatrixXcd log = q * log_diag.asDiagonal() * q.adjoint();
  return 0.5 * (log - log.adjoint().eval());  // squash the symmetric round-off
}

// exp of a skew-Hermitian matrix via the Hermitian eigendecomposition of -iA.
Eigen::MatrixXcd skew_hermitian_exp(const Eigen::MatrixXcd& a) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(-i * a);
  if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
  Eigen::VectorXcd phases(a.rows());
  for (Eigen::Index k = 0; k < a.rows(); ++k)
    phases[k] = std::exp(i * solver.eigenvalues()[k]);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Lists each mode index once per photon, e.g. (2,0,1) -> [0,0,2].
std::vector<int> repeat_modes(const FockVector& occupations) {
  std::vector<int> modes;
  for (std::size_t m = 0; m < occupations.size(); ++m)
    for (int c = 0; c < occupations[m]; ++c) modes.push_back(static_cast<int>(m));
  return modes;
}

}  // namespace

ScatteringMatrix::ScatteringMatrix(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols())
    throw DimensionMismatch("scattering matrix must be square");
  if (!is_unitary(matrix_, 1e-10)) throw DomainError("scattering matrix is not unitary");
}

Eigen::MatrixXcd differential_lift(const Eigen::MatrixXcd& h, const FockBasis& basis) {
  if (h.rows() != basis.modes() || h.cols() != basis.modes())
    throw DimensionMismatch("generator shape does not match the mode count");
  const std::int64_t dim = basis.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    const FockVector& ket = basis.state(col);
    for (int j = 0; j < basis.modes(); ++j) {
      for (int k = 0; k < basis.modes(); ++k) {
        const std::complex<double> coeff = h(j, k);
        if (coeff == 0.0) continue;
        if (j == k) {
          out(col, col) += coeff * static_cast<double>(ket[static_cast<std::size_t>(j)]);
          continue;
        }
        const int nk = ket[static_cast<std::size_t>(k)];
        if (nk == 0) continue;
        FockVector moved = ket;
        moved[static_cast<std::size_t>(k)] -= 1;
        moved[static_cast<std::size_t>(j)] += 1;
        const double factor =
            std::sqrt(static_cast<double>(nk) * (ket[static_cast<std::size_t>(j)] + 1));
        out(basis.index_of(moved), col) += coeff * factor;
      }
    }
  }
  return out;
}

LiftedUnitary photonic_lift(const ScatteringMatrix& scattering, int photons, std::int64_t cap) {
  const int m = scattering.modes();
  auto basis = FockBasis::enumerate(m, photons, cap);

  Eigen::MatrixXcd s = scattering.matrix();
  std::complex<double> compensation(1.0, 0.0);
  Eigen::MatrixXcd generator;
  try {
    generator = unitary_log(s, 1e-8);
  } catch (const LogBranchFailure&) {
    // phi(e^{i theta} S) = e^{i n theta} phi(S): shift off the cut, lift,
    // then undo the global phase on the n-photon sector.
    const double theta = std::numbers::pi / 7.0;
    const std::complex<double> shift = std::polar(1.0, theta);
    generator = unitary_log(shift * s, 1e-12);
    compensation = std::polar(1.0, -theta * photons);
  }

  LiftedUnitary lifted;
  lifted.modes = m;
  lifted.photons = photons;
  lifted.matrix = compensation * skew_hermitian_exp(differential_lift(generator, *basis));
  return lifted;
}

std::complex<double> permanent(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("permanent needs a square matrix");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;
  if (n > 30) throw DomainError("permanent size out of range");

  // Ryser with Gray-code subset updates:
  // per(A) = (-1)^n sum_{S != 0} (-1)^|S| prod_i sum_{j in S} A_ij.
  Eigen::VectorXcd row_sums = Eigen::VectorXcd::Zero(n);
  std::complex<double> total = 0.0;
  std::uint64_t gray = 0;
  const std::uint64_t subsets = 1ull << n;
  for (std::uint64_t index = 1; index < subsets; ++index) {
    const std::uint64_t next_gray = index ^ (index >> 1);
    const std::uint64_t changed = gray ^ next_gray;
    const int j = std::countr_zero(changed);
    const double sign_change = (next_gray & changed) ? 1.0 : -1.0;
    row_sums += sign_change * a.col(j);
    gray = next_gray;

    std::complex<double> product = 1.0;
    for (int i = 0; i < n; ++i) product *= row_sums[i];
    const double subset_sign = (std::popcount(gray) % 2 == 0) ? 1.0 : -1.0;
    total += subset_sign * product;
  }
  const double outer_sign = (n % 2 == 0) ? 1.0 : -1.0;
  return outer_sign * total;
}

std::complex<double> matrix_element_oracle(const ScatteringMatrix& scattering,
                                           const FockVector& in, const FockVector& out) {
  const int m = scattering.modes();
  if (static_cast<int>(in.size()) != m || static_cast<int>(out.size()) != m)
    throw DimensionMismatch("occupation vectors do not match the mode count");
  int n_in = 0;
  int n_out = 0;
  for (int occ : in) n_in += occ;
  for (int occ : out) n_out += occ;
  if (n_in != n_out)
    throw PhotonNumberMismatch("input has " + std::to_string(n_in) + " photons, output " +
                               std::to_string(n_out));
  if (n_in == 0) return 1.0;

  const std::vector<int> rows = repeat_modes(out);
  const std::vector<int> cols = repeat_modes(in);
  Eigen::MatrixXcd sub(n_in, n_in);
  for (int r = 0; r < n_in; ++r)
    for (int c = 0; c < n_in; ++c) sub(r, c) = scattering.matrix()(rows[r], cols[c]);

  double normalization = 1.0;
  for (int occ : in) normalization *= factorial(occ);
  for (int occ : out) normalization *= factorial(occ);
  return permanent(sub) / std::sqrt(normalization);
}

LiftedUnitary lift_via_permanents(const ScatteringMatrix& scattering, const FockBasis& basis) {
  const std::int64_t dim = basis.size();
  LiftedUnitary lifted;
  lifted.modes = basis.modes();
  lifted.photons = basis.photons();
  lifted.matrix.resize(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r)
    for (std::int64_t c = 0; c < dim; ++c)
      lifted.matrix(r, c) = matrix_element_oracle(scattering, basis.state(c), basis.state(r));
  return lifted;
}

AdjointTestResult is_optical_realization(const Eigen::MatrixXcd& u, const OrthonormalFrame& frame,
                                         double threshold) {
  if (u.rows() != frame.dim || u.cols() != frame.dim)
    throw FrameMismatch("matrix dimension does not match the frame");
  if (!is_unitary(u, 1e-9)) throw DomainError("candidate matrix is not unitary");

  AdjointTestResult result;
  for (const auto& c : frame.tangent) {
    const Eigen::MatrixXcd w = u * c * u.adjoint();
    double tangent_energy = 0.0;
    for (const auto& t : frame.tangent) {
      const double coeff = inner_product(t, w);
      tangent_energy += coeff * coeff;
    }
    const double perpendicular_energy = std::max(0.0, w.squaredNorm() - tangent_energy);
    result.residual = std::max(result.residual, perpendicular_energy);
  }
  result.member = result.residual < threshold;
  return result;
}

}  // namespace fockgate
