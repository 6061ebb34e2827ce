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

#include "fockgate/algebra.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <tuple>

#include "fockgate/lift.hpp"

namespace fockgate {

namespace {

constexpr double kGramSchmidtDropThreshold = 1e-10;
constexpr double kCompletionKeepThreshold = 1e-8;

void check_same_shape(const AlgebraElement& u, const AlgebraElement& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw DimensionMismatch("algebra elements have different shapes");
}

// Subtracts the projection of w onto each orthonormal element of `frame`.
void project_out(AlgebraElement& w, const std::vector<AlgebraElement>& frame) {
  for (const auto& c : frame) w -= inner_product(c, w) * c;
}

}  // namespace

bool is_skew_hermitian(const AlgebraElement& v, double tolerance) {
  if (v.rows() != v.cols()) return false;
  return (v + v.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

double inner_product(const AlgebraElement& u, const AlgebraElement& v) {
  check_same_shape(u, v);
  return u.conjugate().cwiseProduct(v).sum().real();
}

double algebra_norm(const AlgebraElement& v) { return v.norm(); }

std::vector<AlgebraElement> image_algebra_basis(const FockBasis& basis) {
  const int m = basis.modes();
  const std::complex<double> half_i(0.0, 0.5);
  std::vector<AlgebraElement> elements;
  elements.reserve(static_cast<std::size_t>(m) * m);

  Eigen::MatrixXcd generator(m, m);
  for (int j = 0; j < m; ++j) {
    generator.setZero();
    generator(j, j) = std::complex<double>(0.0, 1.0);
    elements.push_back(differential_lift(generator, basis));  // i * n_j
  }
  for (int j = 1; j < m; ++j) {
    for (int k = 0; k < j; ++k) {
      generator.setZero();
      generator(j, k) = half_i;
      generator(k, j) = half_i;
      elements.push_back(differential_lift(generator, basis));
    }
  }
  for (int j = 1; j < m; ++j) {
    for (int k = 0; k < j; ++k) {
      generator.setZero();
      generator(j, k) = 0.5;
      generator(k, j) = -0.5;
      elements.push_back(differential_lift(generator, basis));
    }
  }
  return elements;
}

std::vector<AlgebraElement> orthonormalize(const std::vector<AlgebraElement>& elements) {
  std::vector<AlgebraElement> result;
  result.reserve(elements.size());
  for (const auto& v : elements) {
    AlgebraElement w = v;
    project_out(w, result);
    project_out(w, result);  // twice is enough
    const double norm = w.norm();
    if (norm < kGramSchmidtDropThreshold)
      throw RankDeficient("Gram-Schmidt residual " + std::to_string(norm) +
                          " below the drop threshold; input is linearly dependent");
    result.push_back(w / norm);
  }
  return result;
}

OrthonormalFrame tangent_frame(const FockBasis& basis) {
  OrthonormalFrame frame;
  frame.modes = basis.modes();
  frame.photons = basis.photons();
  frame.dim = basis.size();
  frame.tangent = orthonormalize(image_algebra_basis(basis));
  return frame;
}

OrthonormalFrame complete_frame(OrthonormalFrame frame) {
  const std::int64_t dim = frame.dim;
  const std::int64_t wanted =
      dim * dim - static_cast<std::int64_t>(frame.tangent.size());
  frame.perpendicular.clear();
  frame.perpendicular.reserve(static_cast<std::size_t>(wanted));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto consider = [&](const AlgebraElement& candidate) {
    AlgebraElement w = candidate;
    project_out(w, frame.tangent);
    project_out(w, frame.perpendicular);
    project_out(w, frame.tangent);
    project_out(w, frame.perpendicular);
    const double norm = w.norm();
    if (norm >= kCompletionKeepThreshold) frame.perpendicular.push_back(w / norm);
  };

  AlgebraElement candidate = AlgebraElement::Zero(dim, dim);
  for (std::int64_t k = 0; k < dim; ++k) {
    candidate.setZero();
    candidate(k, k) = std::complex<double>(0.0, 1.0);
    consider(candidate);
  }
  for (std::int64_t j = 1; j < dim; ++j) {
    for (std::int64_t k = 0; k < j; ++k) {
      candidate.setZero();
      candidate(j, k) = std::complex<double>(0.0, inv_sqrt2);
      candidate(k, j) = std::complex<double>(0.0, inv_sqrt2);
      consider(candidate);
      candidate.setZero();
      candidate(j, k) = inv_sqrt2;
      candidate(k, j) = -inv_sqrt2;
      consider(candidate);
    }
  }

  if (static_cast<std::int64_t>(frame.perpendicular.size()) != wanted)
    throw CompletionCountMismatch(
        "perpendicular completion kept " + std::to_string(frame.perpendicular.size()) +
        " elements, expected " + std::to_string(wanted));
  return frame;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> decompose(const AlgebraElement& v,
                                                      const OrthonormalFrame& frame) {
  if (v.rows() != frame.dim || v.cols() != frame.dim)
    throw DimensionMismatch("element shape does not match the frame dimension");
  if (!frame.has_perpendicular())
    throw FrameMismatch("decompose needs a frame with its perpendicular part built");
  Eigen::VectorXd tangent(frame.tangent.size());
  for (std::size_t i = 0; i < frame.tangent.size(); ++i)
    tangent[static_cast<Eigen::Index>(i)] = inner_product(frame.tangent[i], v);
  Eigen::VectorXd perpendicular(frame.perpendicular.size());
  for (std::size_t j = 0; j < frame.perpendicular.size(); ++j)
    perpendicular[static_cast<Eigen::Index>(j)] = inner_product(frame.perpendicular[j], v);
  return {std::move(tangent), std::move(perpendicular)};
}

AlgebraElement reconstruct(const Eigen::VectorXd& tangent_coeffs,
                           const Eigen::VectorXd& perpendicular_coeffs,
                           const OrthonormalFrame& frame) {
  if (tangent_coeffs.size() != static_cast<Eigen::Index>(frame.tangent.size()) ||
      perpendicular_coeffs.size() != static_cast<Eigen::Index>(frame.perpendicular.size()))
    throw DimensionMismatch("coefficient lengths do not match the frame");
  AlgebraElement v = AlgebraElement::Zero(frame.dim, frame.dim);
  for (std::size_t i = 0; i < frame.tangent.size(); ++i)
    v += tangent_coeffs[static_cast<Eigen::Index>(i)] * frame.tangent[i];
  for (std::size_t j = 0; j < frame.perpendicular.size(); ++j)
    v += perpendicular_coeffs[static_cast<Eigen::Index>(j)] * frame.perpendicular[j];
  return v;
}

namespace {

struct FrameCacheKey {
  int modes;
  int photons;
  std::int64_t cap;
  bool with_perpendicular;
  auto operator<=>(const FrameCacheKey&) const = default;
};

std::mutex frame_cache_mutex;
std::map<FrameCacheKey, std::shared_ptr<const OrthonormalFrame>>& frame_cache() {
  static std::map<FrameCacheKey, std::shared_ptr<const OrthonormalFrame>> cache;
  return cache;
}

std::filesystem::path frame_file_name(const std::filesystem::path& dir, int m, int n) {
  return dir / ("fgframe_m" + std::to_string(m) + "_n" + std::to_string(n) + ".bin");
}

}  // namespace

std::shared_ptr<const OrthonormalFrame> shared_frame(int modes, int photons,
                                                     const FrameOptions& options) {
  const FrameCacheKey key{modes, photons, options.cap, options.with_perpendicular};
  std::lock_guard<std::mutex> lock(frame_cache_mutex);
  auto& cache = frame_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::shared_ptr<const OrthonormalFrame> frame;
  if (options.cache_directory) {
    if (auto loaded = load_frame(frame_file_name(*options.cache_directory, modes, photons),
                                 modes, photons)) {
      if (!options.with_perpendicular || loaded->has_perpendicular())
        frame = std::make_shared<const OrthonormalFrame>(std::move(*loaded));
    }
  }
  if (!frame) {
    auto basis = FockBasis::enumerate(modes, photons, options.cap);
    OrthonormalFrame built = tangent_frame(*basis);
    if (options.with_perpendicular) built = complete_frame(std::move(built));
    if (options.cache_directory) {
      std::error_code ec;
      std::filesystem::create_directories(*options.cache_directory, ec);
      if (!ec) save_frame(built, frame_file_name(*options.cache_directory, modes, photons));
    }
    frame = std::make_shared<const OrthonormalFrame>(std::move(built));
  }
  cache.emplace(key, frame);
  return frame;
}

namespace {

constexpr char kFrameMagic[8] = {'F', 'G', 'F', 'R', 'A', 'M', 'E', '1'};

void write_matrices(std::ofstream& out, const std::vector<AlgebraElement>& mats) {
  for (const auto& mat : mats) {
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
      for (Eigen::Index c = 0; c < mat.cols(); ++c) {
        const std::complex<double> z = mat(r, c);
        const double parts[2] = {z.real(), z.imag()};
        out.write(reinterpret_cast<const char*>(parts), sizeof(parts));
      }
    }
  }
}

bool read_matrices(std::ifstream& in, std::vector<AlgebraElement>& mats, std::int64_t count,
                   std::int64_t dim) {
  mats.resize(static_cast<std::size_t>(count));
  for (auto& mat : mats) {
    mat.resize(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) {
        double parts[2];
        in.read(reinterpret_cast<char*>(parts), sizeof(parts));
        if (!in) return false;
        mat(r, c) = std::complex<double>(parts[0], parts[1]);
      }
    }
  }
  return true;
}

}  // namespace

void save_frame(const OrthonormalFrame& frame, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(kFrameMagic, sizeof(kFrameMagic));
  const std::int64_t header[5] = {frame.modes, frame.photons, frame.dim,
                                  static_cast<std::int64_t>(frame.tangent.size()),
                                  static_cast<std::int64_t>(frame.perpendicular.size())};
  out.write(reinterpret_cast<const char*>(header), sizeof(header));
  write_matrices(out, frame.tangent);
  write_matrices(out, frame.perpendicular);
  if (!out) throw Error("failed writing frame file " + path.string());
}

std::optional<OrthonormalFrame> load_frame(const std::filesystem::path& path, int modes,
                                           int photons) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kFrameMagic, sizeof(magic)) != 0) return std::nullopt;
  std::int64_t header[5];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (!in) return std::nullopt;
  OrthonormalFrame frame;
  frame.modes = static_cast<int>(header[0]);
  frame.photons = static_cast<int>(header[1]);
  frame.dim = header[2];
  if (frame.modes != modes || frame.photons != photons) return std::nullopt;
  const std::int64_t tangent_count = header[3];
  const std::int64_t perp_count = header[4];
  if (frame.dim <= 0 || tangent_count != static_cast<std::int64_t>(modes) * modes ||
      perp_count < 0 || tangent_count + perp_count > frame.dim * frame.dim)
    return std::nullopt;
  if (!read_matrices(in, frame.tangent, tangent_count, frame.dim)) return std::nullopt;
  if (!read_matrices(in, frame.perpendicular, perp_count, frame.dim)) return std::nullopt;
  // Trailing garbage means a corrupt file; rebuild instead of trusting it.
  in.peek();
  if (!in.eof()) return std::nullopt;
  return frame;
}

}  // namespace fockgate
