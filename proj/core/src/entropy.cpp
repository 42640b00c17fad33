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

#include "certfree/entropy.hpp"

#include <sodium.h>

#include <algorithm>

#include "certfree/errors.hpp"
#include "xof.hpp"

namespace certfree {

SystemEntropy::SystemEntropy() {
  if (sodium_init() < 0) throw Error(ErrorCode::kEntropy, "libsodium initialization failed");
}

void SystemEntropy::fill(std::span<std::uint8_t> out) {
  randombytes_buf(out.data(), out.size());
}

SeededEntropy::SeededEntropy(BytesView seed) : seed_(seed.begin(), seed.end()) {}

SeededEntropy::SeededEntropy(std::uint64_t seed) {
  append_u64_le(seed_, seed);
}

void SeededEntropy::refill() {
  block_ = internal::Shake256("CFC-SEEDED-RNG")
               .absorb_u64(seed_.size())
               .absorb(seed_)
               .absorb_u64(counter_++)
               .squeeze(136);
  offset_ = 0;
}

void SeededEntropy::fill(std::span<std::uint8_t> out) {
  std::size_t written = 0;
  while (written < out.size()) {
    if (offset_ == block_.size()) refill();
    std::size_t n = std::min(out.size() - written, block_.size() - offset_);
    std::copy_n(block_.begin() + static_cast<std::ptrdiff_t>(offset_), n, out.begin() + static_cast<std::ptrdiff_t>(written));
    offset_ += n;
    written += n;
  }
}

void FixedEntropy::fill(std::span<std::uint8_t> out) {
  if (out.size() > stream_.size() - offset_) {
    throw Error(ErrorCode::kEntropy, "fixed entropy stream exhausted");
  }
  std::copy_n(stream_.begin() + static_cast<std::ptrdiff_t>(offset_), out.size(), out.begin());
  offset_ += out.size();
}

}  // namespace certfree
