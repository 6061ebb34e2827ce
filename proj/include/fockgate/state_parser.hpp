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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockgate/exact.hpp"
#include "fockgate/fock_space.hpp"

namespace fockgate {

struct ExpressionTerm {
  FockVector ket;
  /// Normalized amplitude.
  std::complex<double> amplitude;
  /// Pre-normalization coefficient, kept when the whole expression stays in
  /// the exact ring. Normalize by dividing expectation values by the exact
  /// squared norm.
  std::optional<ExactComplex> exact;
};

/// A superposition of number states with one (m, n) across all kets,
/// normalized, with exact coefficients retained where possible. This is the
/// sparse state form: it never touches a FockBasis, so it works at any
/// dimension.
class StateExpression {
 public:
  struct RawTerm {
    FockVector ket;
    std::complex<double> coefficient;
    std::optional<ExactComplex> exact;
  };

  /// Merges duplicate kets, validates shapes, normalizes.
  static StateExpression from_raw_terms(std::vector<RawTerm> raw);
  static StateExpression from_exact_terms(std::vector<std::pair<FockVector, ExactComplex>> terms);
  static StateExpression single_ket(FockVector ket);

  int modes() const { return modes_; }
  int photons() const { return photons_; }
  const std::vector<ExpressionTerm>& terms() const { return terms_; }

  /// True when every coefficient is exact and the squared norm is rational.
  bool is_exact() const { return exact_norm2_.has_value(); }
  const std::optional<Rational>& exact_norm2() const { return exact_norm2_; }
  /// Input norm differed from 1 by more than 1e-9 before normalization.
  bool norm_warning() const { return norm_warning_; }

  std::vector<WeightedKet> weighted_kets() const;
  PureState to_pure_state(std::int64_t cap = kDefaultDimensionCap) const;

 private:
  StateExpression() = default;

  int modes_ = 0;
  int photons_ = 0;
  std::vector<ExpressionTerm> terms_;
  std::optional<Rational> exact_norm2_;
  bool norm_warning_ = false;
};

/// Parses the state grammar:
///
///   expr     := [ '(' sum ')' | sum ] trailing*
///   sum      := ['+'|'-'] term (('+'|'-') term)*
///   term     := [coef '*'?] ket
///   ket      := '|' INT (',' INT)* '>'        (commas optional when every
///                                              occupation is a single digit)
///   coef     := ['-'] factor (('*'|'/') factor | factor)*
///   factor   := INT | NUMBER | INT '/' INT | 'sqrt(' INT ')' | 'i'
///             | '(' coef (('+'|'-') coef)* ')'
///   trailing := '/' (INT | 'sqrt(' INT ')')   (divides the whole expression)
///
/// Whitespace is insignificant. Integer/fraction/sqrt/i coefficients are
/// tracked exactly; decimal NUMBER literals switch the term to floating
/// point.
StateExpression parse_state_expression(std::string_view text);

/// Parse and densify over the canonical basis (subject to the cap).
PureState parse_state(std::string_view text, std::int64_t cap = kDefaultDimensionCap);

/// Mixture text: "prob : expr ; prob : expr ; ...". Probabilities must sum
/// to 1 within 1e-9.
std::vector<std::pair<double, StateExpression>> parse_mixture_components(std::string_view text);
DensityMatrix parse_mixture(std::string_view text, std::int64_t cap = kDefaultDimensionCap);

enum class FormatStyle { exact_when_detected, decimal };

/// Renders a state in the input grammar. parse_state(format_state(psi))
/// equals psi up to a global phase within 1e-9. The exact style canonicalizes
/// the global phase so the first nonzero amplitude is real positive.
std::string format_state(const PureState& psi, FormatStyle style);

}  // namespace fockgate
