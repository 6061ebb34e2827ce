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

#include "fockgate/random.hpp"

namespace fockgate {

namespace {

Eigen::MatrixXcd ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
  return g;
}

}  // namespace

Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) {
    const std::complex<double> diag = r(c, c);
    q.col(c) *= diag / std::abs(diag);
  }
  return q;
}

Eigen::VectorXcd random_state_vector(Eigen::Index dim, std::mt19937_64& rng) {
  Eigen::VectorXcd v = ginibre(dim, 1, rng);
  return v / v.norm();
}

Eigen::MatrixXcd random_skew_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
  const Eigen::MatrixXcd g = ginibre(dim, dim, rng);
  return 0.5 * (g - g.adjoint().eval());
}

DensityMatrix random_density(const std::shared_ptr<const FockBasis>& basis, int components,
                             std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.1, 1.0);
  std::vector<std::pair<double, PureState>> parts;
  double total = 0.0;
  std::vector<double> weights;
  for (int k = 0; k < components; ++k) {
    weights.push_back(uniform(rng));
    total += weights.back();
  }
  for (int k = 0; k < components; ++k)
    parts.emplace_back(weights[static_cast<std::size_t>(k)] / total,
                       PureState(basis, random_state_vector(basis->size(), rng)));
  return DensityMatrix::mixture(parts);
}

}  // namespace fockgate
