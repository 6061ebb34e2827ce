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

#include "fockgate/exact.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace fockgate {

namespace {

// Radicands beyond this are rejected; the grammar only produces small ones.
constexpr std::int64_t kMaxRadicand = 1'000'000'000'000'000;  // 1e15

// Splits d = square * radicand with radicand square-free.
void split_square(std::int64_t d, std::int64_t& square_root, std::int64_t& radicand) {
  square_root = 1;
  radicand = 1;
  for (std::int64_t p = 2; p * p <= d; p += (p == 2 ? 1 : 2)) {
    if (d % p != 0) continue;
    int exponent = 0;
    while (d % p == 0) {
      d /= p;
      ++exponent;
    }
    for (int k = 0; k < exponent / 2; ++k) square_root *= p;
    if (exponent % 2 != 0) radicand *= p;
  }
  radicand *= d;  // leftover prime
}

}  // namespace

double to_double(const Rational& q) { return q.convert_to<double>(); }

SqrtSum::SqrtSum(const Rational& q) {
  if (q != 0) terms_[1] = q;
}

SqrtSum::SqrtSum(std::int64_t value) {
  if (value != 0) terms_[1] = value;
}

SqrtSum SqrtSum::sqrt_of(const Rational& radicand) {
  if (radicand < 0) throw DomainError("square root of a negative rational");
  if (radicand == 0) return SqrtSum();
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(radicand);
  const cpp_int den = boost::multiprecision::denominator(radicand);
  const cpp_int product = num * den;
  if (product > kMaxRadicand) throw DomainError("radicand too large for exact arithmetic");
  std::int64_t square_root = 1;
  std::int64_t reduced = 1;
  split_square(product.convert_to<std::int64_t>(), square_root, reduced);
  // sqrt(num/den) = sqrt(num*den)/den = square_root*sqrt(reduced)/den
  SqrtSum result;
  result.add_term(reduced, Rational(square_root) / Rational(den));
  return result;
}

void SqrtSum::add_term(std::int64_t radicand, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& other) {
  for (const auto& [d, q] : other.terms_) add_term(d, q);
  return *this;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& other) {
  for (const auto& [d, q] : other.terms_) add_term(d, -q);
  return *this;
}

SqrtSum operator*(const SqrtSum& a, const SqrtSum& b) {
  SqrtSum result;
  for (const auto& [da, qa] : a.terms_) {
    for (const auto& [db, qb] : b.terms_) {
      // sqrt(da)*sqrt(db) = g*sqrt((da/g)*(db/g)) with g = gcd; both factors
      // square-free and coprime, so the product radicand is square-free.
      const std::int64_t g = std::gcd(da, db);
      const std::int64_t ra = da / g;
      const std::int64_t rb = db / g;
      if (rb != 0 && ra > kMaxRadicand / rb)
        throw DomainError("radicand too large for exact arithmetic");
      result.add_term(ra * rb, qa * qb * g);
    }
  }
  return result;
}

SqrtSum SqrtSum::operator-() const {
  SqrtSum result;
  for (const auto& [d, q] : terms_) result.terms_[d] = -q;
  return result;
}

SqrtSum SqrtSum::divided_by(const SqrtSum& divisor) const {
  if (divisor.is_zero()) throw DomainError("exact division by zero");
  if (divisor.terms_.size() != 1)
    throw DomainError("exact division only supports single-radical divisors");
  const auto& [d, q] = *divisor.terms_.begin();
  // 1/(q*sqrt(d)) = sqrt(d)/(q*d)
  SqrtSum inverse;
  inverse.add_term(d, Rational(1) / (q * d));
  return *this * inverse;
}

bool SqrtSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SqrtSum::rational() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw DomainError("value has irrational terms");
  return terms_.begin()->second;
}

double SqrtSum::to_double() const {
  double total = 0.0;
  for (const auto& [d, q] : terms_)
    total += fockgate::to_double(q) * std::sqrt(static_cast<double>(d));
  return total;
}

std::string SqrtSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, q] : terms_) {
    if (!first) out << (q >= 0 ? " + " : " - ");
    const Rational mag = first ? q : Rational(boost::multiprecision::abs(q));
    out << mag;
    if (d != 1) out << "*sqrt(" << d << ")";
    first = false;
  }
  return out.str();
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
  return ExactComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

ExactComplex ExactComplex::divided_by(const SqrtSum& divisor) const {
  return ExactComplex(re.divided_by(divisor), im.divided_by(divisor));
}

}  // namespace fockgate
