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

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "fockgate/algebra.hpp"
#include "fockgate/exact.hpp"
#include "fockgate/fock_space.hpp"
#include "fockgate/state_parser.hpp"

namespace fockgate {

/// Mode/photon constants of the image-algebra Gram structure:
///   A = <i n_1, i n_1>, B = <i n_1, i n_2> (n >= 2), C = tr n_1 over the
///   basis, C1/C2 the closed-formula coefficients, alpha = A/B.
/// Cross-identities C2 = 2/(A-B) = 2/(B+C) hold for n >= 2.
struct InvariantConstants {
  int modes = 0;
  int photons = 0;
  double A = 0.0;
  double C = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
  std::optional<double> B;      // defined for n >= 2
  std::optional<double> alpha;  // A/B, defined for n >= 2

  double b() const;
  double alpha_value() const;
};

/// Gamma-expression evaluation in log-space. Requires m >= 2, n >= 1.
InvariantConstants constants(int modes, int photons);

/// Direct sums over the enumerated basis: A = sum <n_1^2>, B = sum <n_1 n_2>,
/// C = sum <n_1>. The slow, independent route the closed forms are checked
/// against. B is reported for any n here (it is identically 0 at n = 1).
struct BruteForceConstants {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};
BruteForceConstants constants_brute_force(int modes, int photons,
                                          std::int64_t cap = kDefaultDimensionCap);

/// C1, C2 as exact rationals (factorial form).
std::pair<Rational, Rational> closed_constants_exact(int modes, int photons);

/// Number-sector Gram matrix g (A diagonal, B off-diagonal) and its
/// closed-form inverse. Requires n >= 2.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> gram_number_sector(int modes, int photons);

struct InvariantReport {
  enum class Method { projection, closed_form };

  double tangent = 0.0;        // I_t
  double perpendicular = 0.0;  // I_p
  double purity = 1.0;
  /// Corollary-style reduced sum; available for pure states.
  std::optional<double> reduced;
  std::optional<SqrtSum> reduced_exact;
  Method method = Method::projection;
};

/// I_t and I_p of i*rho by projection onto a full orthonormal frame.
InvariantReport invariants_projection(const DensityMatrix& rho, const OrthonormalFrame& frame);

/// Tangent invariant of a pure state from the closed formula
/// C1 + C2 * sum_{i<j} (<a^dag_i a_j><a^dag_j a_i> - <n_i><n_j>), evaluated
/// from sparse expectations only. Never builds a basis, so it is exempt from
/// the dimension cap.
double tangent_invariant_closed(const StateExpression& state);
double tangent_invariant_closed(const PureState& state);

/// Full closed-path report (purity 1, I_p = 1 - I_t).
InvariantReport invariants_closed(const StateExpression& state);

/// sum_{i<j} (<a^dag_i a_j><a^dag_j a_i> - <n_i><n_j>); reduces to
/// -sum_{i<j} n_i n_j on number-basis kets.
double reduced_sum(const StateExpression& state);
double reduced_sum(const PureState& state);

/// Exact-ring evaluation; nullopt when the expression is not exact.
std::optional<SqrtSum> reduced_sum_exact(const StateExpression& state);

/// Exact expectation helpers behind the reduced criterion.
std::optional<ExactComplex> exact_hopping_expectation(const StateExpression& state, int mode_i,
                                                      int mode_j);

struct Witness {
  std::string quantity;  // "purity" | "I_t" | "reduced_sum"
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  /// Set when the gap was certified in exact arithmetic and is rational.
  std::optional<Rational> exact_gap;
};

struct Verdict {
  enum class Kind { forbidden, inconclusive };
  Kind kind = Kind::inconclusive;
  std::optional<Witness> witness;

  bool forbidden() const { return kind == Kind::forbidden; }
};

struct VerdictOptions {
  /// |a-b| > tolerance * max(1, |a|, |b|) counts as a violation.
  double tolerance = 1e-7;
};

/// Necessary-condition check between two density matrices on the same
/// (m, n): purity first, then the tangent invariant by projection, then the
/// reduced sum when both sides are pure. Never returns "allowed" - a passing
/// pair is Inconclusive.
Verdict transition_verdict(const DensityMatrix& rho_in, const DensityMatrix& rho_out,
                           const OrthonormalFrame& frame, const VerdictOptions& options = {});

/// Pure-state check through the closed formula (cap-exempt). When both
/// expressions are exact the reduced sums are compared in exact arithmetic,
/// certifying the verdict with zero tolerance.
Verdict transition_verdict(const StateExpression& in, const StateExpression& out,
                           const VerdictOptions& options = {});

}  // namespace fockgate
