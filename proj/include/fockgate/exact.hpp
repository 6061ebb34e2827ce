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
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fockgate/errors.hpp"

namespace fockgate {

using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

/// Finite sum  sum_d q_d * sqrt(d)  over distinct square-free integers d >= 1,
/// with rational coefficients q_d. Closed under +, -, * and under division by
/// a single-radical value, which is all the state grammar can produce. Square
/// roots of distinct square-free integers are linearly independent over Q, so
/// the representation is canonical and equality is exact.
class SqrtSum {
 public:
  SqrtSum() = default;
  SqrtSum(const Rational& q);
  SqrtSum(std::int64_t value);

  /// sqrt(p/q) for a non-negative rational, reduced to canonical form.
  static SqrtSum sqrt_of(const Rational& radicand);

  SqrtSum& operator+=(const SqrtSum& other);
  SqrtSum& operator-=(const SqrtSum& other);
  friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) { return a += b; }
  friend SqrtSum operator-(SqrtSum a, const SqrtSum& b) { return a -= b; }
  friend SqrtSum operator*(const SqrtSum& a, const SqrtSum& b);
  SqrtSum operator-() const;

  /// Exact division. The divisor must be nonzero and consist of a single
  /// radical term q*sqrt(d); general denominators are outside the ring.
  SqrtSum divided_by(const SqrtSum& divisor) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// The rational value; DomainError when irrational terms are present.
  Rational rational() const;
  double to_double() const;

  bool operator==(const SqrtSum& other) const { return terms_ == other.terms_; }
  bool operator!=(const SqrtSum& other) const { return !(*this == other); }

  std::string str() const;

 private:
  void add_term(std::int64_t radicand, const Rational& coeff);

  std::map<std::int64_t, Rational> terms_;  // square-free radicand -> coefficient
};

/// Complex scalar with SqrtSum real and imaginary parts.
struct ExactComplex {
  SqrtSum re;
  SqrtSum im;

  ExactComplex() = default;
  ExactComplex(SqrtSum real, SqrtSum imag) : re(std::move(real)), im(std::move(imag)) {}
  ExactComplex(const Rational& real) : re(real) {}

  static ExactComplex i() { return ExactComplex(SqrtSum(0), SqrtSum(1)); }

  ExactComplex conj() const { return ExactComplex(re, -im); }
  SqrtSum norm2() const { return re * re + im * im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b);
  ExactComplex operator-() const { return ExactComplex(-re, -im); }
  ExactComplex divided_by(const SqrtSum& divisor) const;

  bool operator==(const ExactComplex& o) const { return re == o.re && im == o.im; }

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

}  // namespace fockgate
