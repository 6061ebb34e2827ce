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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fockgate {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binomial result would not fit in a signed 64-bit integer.
class OverflowBeyondCap : public Error {
 public:
  using Error::Error;
};

/// Requested Hilbert-space dimension exceeds the configured cap.
class DimensionCapExceeded : public Error {
 public:
  DimensionCapExceeded(std::int64_t dim, std::int64_t cap)
      : Error("Hilbert-space dimension " + std::to_string(dim) +
              " exceeds the configured cap " + std::to_string(cap)),
        dimension(dim),
        cap(cap) {}
  std::int64_t dimension;
  std::int64_t cap;
};

class ModeOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Gram-Schmidt hit a residual below the drop threshold on input that must
/// be linearly independent.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

class CompletionCountMismatch : public Error {
 public:
  using Error::Error;
};

class LogBranchFailure : public Error {
 public:
  using Error::Error;
};

class PhotonNumberMismatch : public Error {
 public:
  using Error::Error;
};

class FrameMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parse failure; carries the byte offset of the offending token and a
/// human-readable list of what would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& expected)
      : Error("syntax error at byte " + std::to_string(offset) + ": expected " + expected),
        offset(offset),
        expected(expected) {}
  std::size_t offset;
  std::string expected;
};

class MixedPhotonNumber : public Error {
 public:
  MixedPhotonNumber(const std::string& first, const std::string& second)
      : Error("kets " + first + " and " + second +
              " have different mode counts or photon numbers"),
        first_ket(first),
        second_ket(second) {}
  std::string first_ket;
  std::string second_ket;
};

class EmptyExpression : public Error {
 public:
  using Error::Error;
};

class ProbabilitySumError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace fockgate
