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
#include <span>
#include <utility>

#include "certfree/bytes.hpp"

namespace certfree {

// Caller-supplied randomness. The library never creates an entropy source on
// its own; every randomized operation takes one by reference.
class EntropySource {
 public:
  virtual ~EntropySource() = default;

  // Fills `out` completely or throws Error(kEntropy).
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

// Operating-system CSPRNG (libsodium randombytes).
class SystemEntropy final : public EntropySource {
 public:
  SystemEntropy();
  void fill(std::span<std::uint8_t> out) override;
};

// Deterministic stream expanded from a seed with SHAKE256. Reproducible
// fixtures and tests only; not a substitute for SystemEntropy.
class SeededEntropy final : public EntropySource {
 public:
  explicit SeededEntropy(BytesView seed);
  explicit SeededEntropy(std::uint64_t seed);

  void fill(std::span<std::uint8_t> out) override;

 private:
  void refill();

  Bytes seed_;
  std::uint64_t counter_ = 0;
  Bytes block_;
  std::size_t offset_ = 0;
};

// Replays a fixed byte string, then fails with Error(kEntropy).
class FixedEntropy final : public EntropySource {
 public:
  explicit FixedEntropy(Bytes stream) : stream_(std::move(stream)) {}

  void fill(std::span<std::uint8_t> out) override;
  std::size_t consumed() const { return offset_; }

 private:
  Bytes stream_;
  std::size_t offset_ = 0;
};

}  // namespace certfree
