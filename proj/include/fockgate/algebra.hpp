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

#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fockgate/fock_space.hpp"

namespace fockgate {

/// Element of u(M): a skew-Hermitian complex matrix.
using AlgebraElement = Eigen::MatrixXcd;

bool is_skew_hermitian(const AlgebraElement& v, double tolerance = 1e-10);

/// Real inner product (1/2)tr(u^dag v + v^dag u) = Re tr(u^dag v); on
/// skew-Hermitian inputs this equals -tr(uv).
double inner_product(const AlgebraElement& u, const AlgebraElement& v);

double algebra_norm(const AlgebraElement& v);

/// The m^2 generators reachable by linear optics, represented on the Fock
/// basis. Order: i*n_j for j = 1..m, then the symmetric hopping generators
/// (i/2)(a^dag_j a_k + a^dag_k a_j) for k < j, then the antisymmetric ones
/// (1/2)(a^dag_j a_k - a^dag_k a_j) for k < j, with j ascending and k
/// ascending inside each j.
std::vector<AlgebraElement> image_algebra_basis(const FockBasis& basis);

/// Classical Gram-Schmidt with one re-orthogonalization pass. Deterministic
/// given the input order. Throws RankDeficient when a residual norm falls
/// below 1e-10.
std::vector<AlgebraElement> orthonormalize(const std::vector<AlgebraElement>& elements);

/// Orthonormal splitting u(M) = span(tangent) + span(perpendicular).
/// `perpendicular` may be empty when only the tangent part was built.
struct OrthonormalFrame {
  int modes = 0;
  int photons = 0;
  std::int64_t dim = 0;  // M
  std::vector<AlgebraElement> tangent;
  std::vector<AlgebraElement> perpendicular;

  bool has_perpendicular() const {
    return static_cast<std::int64_t>(tangent.size() + perpendicular.size()) == dim * dim;
  }
};

/// Orthonormalized image-algebra basis; no perpendicular part.
OrthonormalFrame tangent_frame(const FockBasis& basis);

/// Appends the M^2 - m^2 perpendicular elements: seeds with the canonical
/// skew-Hermitian basis of u(M), projects out the tangent span, Gram-Schmidts
/// the remainder and keeps survivors with residual >= 1e-8. Throws
/// CompletionCountMismatch if the survivor count is off.
OrthonormalFrame complete_frame(OrthonormalFrame frame);

/// Coefficients of v in the frame, (tangent, perpendicular); requires a full
/// frame. alpha_i = <c_i, v>.
std::pair<Eigen::VectorXd, Eigen::VectorXd> decompose(const AlgebraElement& v,
                                                      const OrthonormalFrame& frame);

AlgebraElement reconstruct(const Eigen::VectorXd& tangent_coeffs,
                           const Eigen::VectorXd& perpendicular_coeffs,
                           const OrthonormalFrame& frame);

struct FrameOptions {
  std::int64_t cap = kDefaultDimensionCap;
  bool with_perpendicular = true;
  /// Optional on-disk cache directory; corrupt or mismatched files are
  /// ignored and rebuilt.
  std::optional<std::filesystem::path> cache_directory;
};

/// Process-wide frame cache keyed by (m, n, cap). First builds are
/// serialized; the returned frames are immutable and safe to share across
/// threads.
std::shared_ptr<const OrthonormalFrame> shared_frame(int modes, int photons,
                                                     const FrameOptions& options = {});

/// Binary frame snapshot ("FGFRAME1" header + row-major complex doubles).
void save_frame(const OrthonormalFrame& frame, const std::filesystem::path& path);
std::optional<OrthonormalFrame> load_frame(const std::filesystem::path& path, int modes,
                                           int photons);

}  // namespace fockgate
