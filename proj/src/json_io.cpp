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

#include "fockgate/json_io.hpp"

#include <Eigen/Eigenvalues>

namespace fockgate {

using nlohmann::json;

namespace {

json terms_to_json(const std::vector<WeightedKet>& terms) {
  json out = json::array();
  for (const auto& term : terms) {
    out.push_back({{"ket", term.ket},
                   {"re", term.amplitude.real()},
                   {"im", term.amplitude.imag()}});
  }
  return out;
}

json state_json(int modes, int photons, const std::vector<WeightedKet>& terms) {
  return {{"m", modes}, {"n", photons}, {"terms", terms_to_json(terms)}};
}

}  // namespace

json state_to_json(const StateExpression& state) {
  return state_json(state.modes(), state.photons(), state.weighted_kets());
}

json state_to_json(const PureState& state) {
  return state_json(state.modes(), state.photons(), state.nonzero_terms(1e-14));
}

StateExpression state_expression_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("terms"))
    throw DomainError("state JSON needs \"m\", \"n\" and \"terms\"");
  const int modes = j.at("m").get<int>();
  const int photons = j.at("n").get<int>();
  std::vector<StateExpression::RawTerm> raw;
  for (const auto& term : j.at("terms")) {
    StateExpression::RawTerm entry;
    entry.ket = term.at("ket").get<FockVector>();
    entry.coefficient = {term.at("re").get<double>(), term.at("im").get<double>()};
    raw.push_back(std::move(entry));
  }
  StateExpression state = StateExpression::from_raw_terms(std::move(raw));
  if (state.modes() != modes || state.photons() != photons)
    throw ShapeMismatch("state JSON terms disagree with the declared (m, n)");
  return state;
}

PureState pure_state_from_json(const json& j, std::int64_t cap) {
  return state_expression_from_json(j).to_pure_state(cap);
}

json density_to_json(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  json mixture = json::array();
  for (Eigen::Index k = solver.eigenvalues().size() - 1; k >= 0; --k) {
    const double p = solver.eigenvalues()[k];
    if (p < 1e-12) continue;
    const PureState component = PureState::normalized(rho.basis(), solver.eigenvectors().col(k));
    mixture.push_back({{"p", p}, {"state", state_to_json(component)}});
  }
  return {{"m", rho.modes()}, {"n", rho.photons()}, {"mixture", mixture}};
}

DensityMatrix density_from_json(const json& j, std::int64_t cap) {
  if (!looks_like_density_json(j)) throw DomainError("density JSON needs \"mixture\"");
  std::vector<std::pair<double, PureState>> parts;
  for (const auto& entry : j.at("mixture")) {
    parts.emplace_back(entry.at("p").get<double>(),
                       pure_state_from_json(entry.at("state"), cap));
  }
  return DensityMatrix::mixture(parts);
}

bool looks_like_density_json(const json& j) {
  return j.is_object() && j.contains("mixture");
}

json matrix_to_json(const Eigen::MatrixXcd& matrix) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      re_row.push_back(matrix(r, c).real());
      im_row.push_back(matrix(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"rows", matrix.rows()}, {"cols", matrix.cols()}, {"re", re}, {"im", im}};
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Eigen::Index>(re.size()) != rows ||
      static_cast<Eigen::Index>(im.size()) != rows)
    throw DimensionMismatch("matrix JSON row count disagrees with \"rows\"");
  Eigen::MatrixXcd matrix(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& re_row = re.at(static_cast<std::size_t>(r));
    const auto& im_row = im.at(static_cast<std::size_t>(r));
    if (static_cast<Eigen::Index>(re_row.size()) != cols ||
        static_cast<Eigen::Index>(im_row.size()) != cols)
      throw DimensionMismatch("matrix JSON column count disagrees with \"cols\"");
    for (Eigen::Index c = 0; c < cols; ++c) {
      matrix(r, c) = {re_row.at(static_cast<std::size_t>(c)).get<double>(),
                      im_row.at(static_cast<std::size_t>(c)).get<double>()};
    }
  }
  return matrix;
}

json report_to_json(const InvariantReport& report) {
  json reduced = nullptr;
  if (report.reduced_exact && report.reduced_exact->is_rational()) {
    const Rational value = report.reduced_exact->rational();
    reduced = {{"num", boost::multiprecision::numerator(value).convert_to<std::int64_t>()},
               {"den", boost::multiprecision::denominator(value).convert_to<std::int64_t>()}};
  } else if (report.reduced) {
    reduced = *report.reduced;
  }
  return {{"I_t", report.tangent},
          {"I_p", report.perpendicular},
          {"purity", report.purity},
          {"reduced_sum", reduced},
          {"method",
           report.method == InvariantReport::Method::projection ? "projection" : "closed_form"}};
}

json verdict_to_json(const Verdict& verdict) {
  json out = {{"verdict", verdict.forbidden() ? "forbidden" : "inconclusive"}};
  if (verdict.witness) {
    out["witness"] = {{"quantity", verdict.witness->quantity},
                      {"lhs", verdict.witness->lhs},
                      {"rhs", verdict.witness->rhs},
                      {"gap", verdict.witness->gap}};
  }
  return out;
}

}  // namespace fockgate
