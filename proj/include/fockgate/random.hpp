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

#include <random>

#include <Eigen/Dense>

#include "fockgate/fock_space.hpp"

namespace fockgate {

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
/// diagonal phases absorbed.
Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng);

/// Normalized complex-Gaussian amplitude vector.
Eigen::VectorXcd random_state_vector(Eigen::Index dim, std::mt19937_64& rng);

Eigen::MatrixXcd random_skew_hermitian(Eigen::Index dim, std::mt19937_64& rng);

/// Random rank-`components` mixture of Gaussian pure states.
DensityMatrix random_density(const std::shared_ptr<const FockBasis>& basis, int components,
                             std::mt19937_64& rng);

}  // namespace fockgate
