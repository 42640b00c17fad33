// Copyright 2026 The certfree Authors.
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
#include <memory>
#include <string>
#include <vector>

#include "certfree/group.hpp"
#include "certfree/hash_suite.hpp"

namespace certfree::bench {

struct BenchOptions {
  std::size_t iterations = 100;
  HashConfig config;
  std::size_t message_size = 32;
  // Seeds the inputs (identities, messages, keys), not the timings.
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::string op;
  double median_us = 0;
  double mean_us = 0;
  double stddev_us = 0;
  // Coefficient of variation, stddev / mean.
  double cv = 0;
  // Group-law counts for a single call; a double multiplication counts
  // as two muls.
  std::uint64_t muls = 0;
  std::uint64_t adds = 0;
  std::size_t bytes = 0;
};

struct BenchReport {
  std::string group;
  HashConfig config;
  std::size_t iterations = 0;
  std::vector<BenchRow> rows;
  std::vector<std::string> warnings;

  const BenchRow* find(const std::string& op) const;
  std::string to_text() const;
  std::string to_json() const;
};

inline constexpr double kNoisyCv = 0.25;
inline constexpr std::size_t kMinIterations = 100;

// Times setup, extract, part_key_gen, user_key_gen, encrypt, decrypt, sign,
// verify and both key-exchange sides. Requires the production group and at
// least kMinIterations iterations (Error(kPrecondition) otherwise).
BenchReport run_bench(const BenchOptions& options, std::shared_ptr<const Group> group);

}  // namespace certfree::bench
