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

#include <json.hpp>

#include "fockgate/fock_space.hpp"
#include "fockgate/invariants.hpp"
#include "fockgate/state_parser.hpp"

namespace fockgate {

// Pure state: {"m": int, "n": int, "terms": [{"ket": [ints], "re": f, "im": f}]}
nlohmann::json state_to_json(const StateExpression& state);
nlohmann::json state_to_json(const PureState& state);
StateExpression state_expression_from_json(const nlohmann::json& j);
PureState pure_state_from_json(const nlohmann::json& j, std::int64_t cap = kDefaultDimensionCap);

// Density matrix: {"m", "n", "mixture": [{"p": f, "state": <pure-state>}]}
nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j, std::int64_t cap = kDefaultDimensionCap);
bool looks_like_density_json(const nlohmann::json& j);

// Matrix: {"rows": int, "cols": int, "re": [[f]], "im": [[f]]}
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& matrix);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& j);

// Report: {"I_t", "I_p", "purity", "reduced_sum": {"num","den"}|float|null, "method"}
nlohmann::json report_to_json(const InvariantReport& report);

// Verdict: {"verdict": "forbidden"|"inconclusive", "witness": {...}} with the
// witness omitted when inconclusive.
nlohmann::json verdict_to_json(const Verdict& verdict);

}  // namespace fockgate
