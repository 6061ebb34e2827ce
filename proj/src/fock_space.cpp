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

#include "fockgate/fock_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace fockgate {

std::string ket_string(const FockVector& ket) {
  std::ostringstream out;
  out << "|";
  for (std::size_t i = 0; i < ket.size(); ++i) {
    if (i > 0) out << ",";
    out << ket[i];
  }
  out << ">";
  return out.str();
}

std::int64_t dimension(int modes, int photons) {
  if (modes < 1) throw DomainError("mode count must be at least 1");
  if (photons < 0) throw DomainError("photon number must be non-negative");
  // C(m+n-1, n) by incremental multiply/divide; each intermediate is itself a
  // binomial, so the division is exact.
  const std::int64_t a = static_cast<std::int64_t>(modes) + photons - 1;
  const std::int64_t k = std::min<std::int64_t>(photons, a - photons);
  __int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (a - k + i) / i;
    if (result > std::numeric_limits<std::int64_t>::max())
      throw OverflowBeyondCap("dimension(" + std::to_string(modes) + ", " +
                              std::to_string(photons) + ") exceeds the 64-bit integer range");
  }
  return static_cast<std::int64_t>(result);
}

FockBasis::FockBasis(int modes, int photons, std::vector<FockVector> states)
    : modes_(modes), photons_(photons), states_(std::move(states)) {
  for (std::size_t k = 0; k < states_.size(); ++k)
    index_.emplace(states_[k], static_cast<std::int64_t>(k));
}

std::shared_ptr<const FockBasis> FockBasis::enumerate(int modes, int photons, std::int64_t cap) {
  const std::int64_t dim = dimension(modes, photons);
  if (dim > cap) throw DimensionCapExceeded(dim, cap);

  std::vector<FockVector> states;
  states.reserve(static_cast<std::size_t>(dim));
  FockVector current(static_cast<std::size_t>(modes), 0);
  current[0] = photons;
  while (true) {
    states.push_back(current);
    // Next composition in lexicographically decreasing order: take one photon
    // from the rightmost non-final occupied mode and push everything to its
    // right into the next slot.
    int pivot = -1;
    for (int i = modes - 2; i >= 0; --i) {
      if (current[static_cast<std::size_t>(i)] > 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) break;
    int rest = 0;
    for (int i = pivot + 1; i < modes; ++i) {
      rest += current[static_cast<std::size_t>(i)];
      current[static_cast<std::size_t>(i)] = 0;
    }
    current[static_cast<std::size_t>(pivot)] -= 1;
    current[static_cast<std::size_t>(pivot) + 1] = rest + 1;
  }
  return std::shared_ptr<const FockBasis>(new FockBasis(modes, photons, std::move(states)));
}

std::shared_ptr<const FockBasis> FockBasis::with_order(int modes, int photons,
                                                       std::vector<FockVector> states) {
  const std::int64_t dim = dimension(modes, photons);
  if (static_cast<std::int64_t>(states.size()) != dim)
    throw DomainError("state list does not cover the full basis");
  std::map<FockVector, int> seen;
  for (const auto& ket : states) {
    if (static_cast<int>(ket.size()) != modes) throw DomainError("ket has the wrong mode count");
    int total = 0;
    for (int occ : ket) {
      if (occ < 0) throw DomainError("negative occupation in " + ket_string(ket));
      total += occ;
    }
    if (total != photons) throw DomainError("ket " + ket_string(ket) + " has the wrong photon sum");
    if (++seen[ket] > 1) throw DomainError("duplicate ket " + ket_string(ket));
  }
  return std::shared_ptr<const FockBasis>(new FockBasis(modes, photons, std::move(states)));
}

std::int64_t FockBasis::index_of(const FockVector& ket) const {
  auto it = index_.find(ket);
  if (it == index_.end()) throw DomainError("ket " + ket_string(ket) + " is not in the basis");
  return it->second;
}

PureState::PureState(std::shared_ptr<const FockBasis> basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != basis_->size())
    throw DimensionMismatch("amplitude vector length does not match the basis size");
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12)
    throw DomainError("state vector is not normalized");
}

PureState PureState::normalized(std::shared_ptr<const FockBasis> basis,
                                Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (norm < 1e-300) throw DomainError("cannot normalize the zero vector");
  amplitudes /= norm;
  return PureState(std::move(basis), std::move(amplitudes));
}

std::vector<WeightedKet> PureState::nonzero_terms(double threshold) const {
  std::vector<WeightedKet> terms;
  for (std::int64_t k = 0; k < amplitudes_.size(); ++k) {
    if (std::abs(amplitudes_[k]) > threshold)
      terms.push_back({basis_->state(k), amplitudes_[k]});
  }
  return terms;
}

DensityMatrix::DensityMatrix(std::shared_ptr<const FockBasis> basis, Eigen::MatrixXcd matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  const std::int64_t dim = basis_->size();
  if (matrix_.rows() != dim || matrix_.cols() != dim)
    throw DimensionMismatch("density matrix shape does not match the basis size");
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw DomainError("density matrix is not Hermitian");
  if (std::abs(matrix_.trace() - std::complex<double>(1.0)) > 1e-12)
    throw DomainError("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10)
    throw DomainError("density matrix has a negative eigenvalue");
  const double p = purity();
  if (p <= 0.0 || p > 1.0 + 1e-12) throw DomainError("density matrix purity is out of range");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.basis(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::mixture(const std::vector<std::pair<double, PureState>>& parts) {
  if (parts.empty()) throw EmptyExpression("mixture has no components");
  double total = 0.0;
  for (const auto& [p, psi] : parts) {
    if (p < 0.0) throw ProbabilitySumError("negative probability in mixture");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ProbabilitySumError("mixture probabilities sum to " + std::to_string(total));
  const auto& basis = parts.front().second.basis();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(basis->size(), basis->size());
  for (const auto& [p, psi] : parts) {
    if (psi.basis()->modes() != basis->modes() || psi.basis()->photons() != basis->photons())
      throw ShapeMismatch("mixture components live on different bases");
    rho += p * (psi.amplitudes() * psi.amplitudes().adjoint());
  }
  rho /= rho.trace().real();  // absorb the 1e-9 slack so the invariant holds exactly
  return DensityMatrix(basis, std::move(rho));
}

double DensityMatrix::purity() const { return matrix_.squaredNorm(); }

DensityMatrix DensityMatrix::evolved(const Eigen::MatrixXcd& unitary) const {
  if (unitary.rows() != matrix_.rows() || unitary.cols() != matrix_.cols())
    throw DimensionMismatch("evolution operator shape does not match the density matrix");
  return DensityMatrix(basis_, unitary * matrix_ * unitary.adjoint());
}

namespace {

void check_mode(int mode, int modes) {
  if (mode < 1 || mode > modes)
    throw ModeOutOfRange("mode index " + std::to_string(mode) + " is outside 1.." +
                         std::to_string(modes));
}

}  // namespace

std::complex<double> hopping_expectation(std::span<const WeightedKet> terms, int mode_i,
                                         int mode_j) {
  if (terms.empty()) throw EmptyExpression("no terms to take an expectation over");
  const int modes = static_cast<int>(terms.front().ket.size());
  check_mode(mode_i, modes);
  check_mode(mode_j, modes);

  // Coalesce duplicate kets up front so repeated terms behave like their sum.
  std::map<FockVector, std::complex<double>> lookup;
  for (const auto& term : terms) lookup[term.ket] += term.amplitude;

  const std::size_t i = static_cast<std::size_t>(mode_i - 1);
  const std::size_t j = static_cast<std::size_t>(mode_j - 1);

  if (mode_i == mode_j) {
    double value = 0.0;
    for (const auto& [ket, amp] : lookup) value += std::norm(amp) * ket[i];
    return value;
  }

  std::complex<double> value = 0.0;
  for (const auto& [ket, amp] : lookup) {
    const int nj = ket[j];
    if (nj == 0) continue;
    FockVector moved = ket;
    moved[j] -= 1;
    moved[i] += 1;
    auto it = lookup.find(moved);
    if (it == lookup.end()) continue;
    const double factor = std::sqrt(static_cast<double>(nj) * (ket[i] + 1));
    value += std::conj(it->second) * amp * factor;
  }
  return value;
}

std::complex<double> hopping_expectation(const PureState& psi, int mode_i, int mode_j) {
  const auto terms = psi.nonzero_terms();
  check_mode(mode_i, psi.modes());
  check_mode(mode_j, psi.modes());
  return hopping_expectation(std::span<const WeightedKet>(terms), mode_i, mode_j);
}

double number_expectation(std::span<const WeightedKet> terms, int mode) {
  return hopping_expectation(terms, mode, mode).real();
}

double purity(const DensityMatrix& rho) { return rho.purity(); }

}  // namespace fockgate
