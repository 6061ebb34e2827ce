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

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "fockgate/fock_space.hpp"

namespace fockgate {

struct OrthonormalFrame;

/// m x m unitary description of a lossless linear interferometer.
class ScatteringMatrix {
 public:
  /// Validates unitarity within 1e-10.
  explicit ScatteringMatrix(Eigen::MatrixXcd matrix);

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  int modes() const { return static_cast<int>(matrix_.rows()); }

 private:
  Eigen::MatrixXcd matrix_;
};

/// M x M image of a scattering matrix on the n-photon sector.
struct LiftedUnitary {
  Eigen::MatrixXcd matrix;
  int modes = 0;
  int photons = 0;
};

/// Image of a skew-Hermitian m x m generator under the algebra homomorphism:
/// sum_jk h_jk * (matrix of a^dag_j a_k on the Fock basis). The output is
/// skew-Hermitian whenever h is.
Eigen::MatrixXcd differential_lift(const Eigen::MatrixXcd& h, const FockBasis& basis);

/// U = exp(differential_lift(log S)) with the principal matrix logarithm,
/// both taken by unitary eigendecomposition. Eigenvalues of S within 1e-8 of
/// -1 are handled by lifting e^{i pi/7} S and compensating with the global
/// phase e^{-i n pi/7}.
LiftedUnitary photonic_lift(const ScatteringMatrix& scattering, int photons,
                            std::int64_t cap = kDefaultDimensionCap);

/// Permanent by Ryser's formula with Gray-code updates; exponential in the
/// matrix size, intended for n <= ~12.
std::complex<double> permanent(const Eigen::MatrixXcd& a);

/// <out| phi(S) |in> through the permanent of the submatrix of S with columns
/// repeated per input occupations and rows per output occupations, normalized
/// by sqrt(prod in_i! prod out_j!). Independent of the exponential route.
std::complex<double> matrix_element_oracle(const ScatteringMatrix& scattering,
                                           const FockVector& in, const FockVector& out);

/// Full M x M lift assembled entry-by-entry from matrix_element_oracle.
LiftedUnitary lift_via_permanents(const ScatteringMatrix& scattering, const FockBasis& basis);

struct AdjointTestResult {
  bool member = false;
  /// Largest perpendicular energy of U c U^dag over the tangent frame.
  double residual = 0.0;
};

/// Membership test for the image of the photonic lift: U belongs iff
/// conjugation by U maps every tangent frame element back into the tangent
/// span. The perpendicular energy is evaluated as |w|^2 - sum_i <c_i, w>^2,
/// so only the tangent part of the frame is needed.
AdjointTestResult is_optical_realization(const Eigen::MatrixXcd& u, const OrthonormalFrame& frame,
                                         double threshold = 1e-8);

}  // namespace fockgate
