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
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fockgate/errors.hpp"

namespace fockgate {

/// Occupation numbers per mode, (n_1, ..., n_m).
using FockVector = std::vector<int>;

inline constexpr std::int64_t kDefaultDimensionCap = 4096;

std::string ket_string(const FockVector& ket);

/// Number of n-photon states on m modes, C(m+n-1, n).
/// Throws OverflowBeyondCap when the result does not fit in int64.
std::int64_t dimension(int modes, int photons);

/// The n-photon m-mode number-state basis in a fixed canonical order:
/// occupation vectors sorted lexicographically decreasing, so (n,0,...,0)
/// comes first and (0,...,0,n) last.
class FockBasis {
 public:
  static std::shared_ptr<const FockBasis> enumerate(int modes, int photons,
                                                    std::int64_t cap = kDefaultDimensionCap);

  /// Builds a basis with an explicit (non-canonical) state order. The states
  /// must be exactly the weak compositions of `photons` into `modes` parts.
  static std::shared_ptr<const FockBasis> with_order(int modes, int photons,
                                                     std::vector<FockVector> states);

  int modes() const { return modes_; }
  int photons() const { return photons_; }
  std::int64_t size() const { return static_cast<std::int64_t>(states_.size()); }
  const std::vector<FockVector>& states() const { return states_; }
  const FockVector& state(std::int64_t k) const { return states_.at(static_cast<std::size_t>(k)); }

  /// Position of a ket in the basis; throws DomainError if absent.
  std::int64_t index_of(const FockVector& ket) const;
  bool contains(const FockVector& ket) const { return index_.count(ket) != 0; }

 private:
  FockBasis(int modes, int photons, std::vector<FockVector> states);

  int modes_;
  int photons_;
  std::vector<FockVector> states_;
  std::map<FockVector, std::int64_t> index_;
};

/// A ket together with its complex amplitude; the sparse currency shared by
/// the parser, the expectation routines and the closed-formula paths.
struct WeightedKet {
  FockVector ket;
  std::complex<double> amplitude;
};

/// Normalized amplitude vector over a FockBasis.
class PureState {
 public:
  /// Validates the norm (1 within 1e-12).
  PureState(std::shared_ptr<const FockBasis> basis, Eigen::VectorXcd amplitudes);

  /// Rescales to unit norm; throws DomainError on the zero vector.
  static PureState normalized(std::shared_ptr<const FockBasis> basis, Eigen::VectorXcd amplitudes);

  const std::shared_ptr<const FockBasis>& basis() const { return basis_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  int modes() const { return basis_->modes(); }
  int photons() const { return basis_->photons(); }

  /// Entries with |amplitude| above the threshold, as sparse terms.
  std::vector<WeightedKet> nonzero_terms(double threshold = 1e-14) const;

 private:
  std::shared_ptr<const FockBasis> basis_;
  Eigen::VectorXcd amplitudes_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix over a FockBasis.
class DensityMatrix {
 public:
  DensityMatrix(std::shared_ptr<const FockBasis> basis, Eigen::MatrixXcd matrix);

  static DensityMatrix from_pure(const PureState& psi);
  /// rho = sum_i p_i |psi_i><psi_i|. Probabilities must sum to 1 within 1e-9.
  static DensityMatrix mixture(const std::vector<std::pair<double, PureState>>& parts);

  const std::shared_ptr<const FockBasis>& basis() const { return basis_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  int modes() const { return basis_->modes(); }
  int photons() const { return basis_->photons(); }

  /// tr(rho^2), in (0, 1].
  double purity() const;

  /// U rho U^dagger for an M x M unitary.
  DensityMatrix evolved(const Eigen::MatrixXcd& unitary) const;

 private:
  std::shared_ptr<const FockBasis> basis_;
  Eigen::MatrixXcd matrix_;
};

/// <Psi| a^dag_i a_j |Psi> for 1-based mode indices, evaluated sparsely from
/// the nonzero terms: each ket with n_j > 0 contributes through the shifted
/// ket with amplitude factor sqrt(n_j)*sqrt(n_i + 1). For i == j this is the
/// photon-number expectation <n_i>, real and in [0, n].
std::complex<double> hopping_expectation(std::span<const WeightedKet> terms, int mode_i,
                                         int mode_j);
std::complex<double> hopping_expectation(const PureState& psi, int mode_i, int mode_j);

/// <n_i> for a 1-based mode index.
double number_expectation(std::span<const WeightedKet> terms, int mode);

double purity(const DensityMatrix& rho);

}  // namespace fockgate
