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
#include <string>

namespace fockgate::cli {

struct RunConfig {
  double tolerance = 1e-7;
  std::int64_t cap = 4096;
  bool json_output = false;
  std::uint64_t seed = 42;
  std::string frame_cache;  // empty = no disk cache
};

/// Runs one of the named demonstration tables (hom, noon, fock-split, bell,
/// ghz-w, appendix). Returns the number of failed rows.
int run_demo(const std::string& name, const RunConfig& config);

}  // namespace fockgate::cli
