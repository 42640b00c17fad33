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

#include <openssl/evp.h>

#include <cstdint>
#include <memory>
#include <string_view>

#include "certfree/bytes.hpp"

namespace certfree::internal {

// One-shot SHAKE256: absorb any number of fields, then squeeze once.
class Shake256 {
 public:
  Shake256();
  explicit Shake256(std::string_view label) : Shake256() { absorb(as_bytes(label)); }

  Shake256& absorb(BytesView data);
  Shake256& absorb_u16(std::uint16_t v);
  Shake256& absorb_u32(std::uint32_t v);
  Shake256& absorb_u64(std::uint64_t v);

  Bytes squeeze(std::size_t n);
  void squeeze_into(std::span<std::uint8_t> out);

 private:
  struct CtxDeleter {
    void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
  };
  std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx_;
  bool finished_ = false;
};

}  // namespace certfree::internal
