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

#include "xof.hpp"

#include "certfree/errors.hpp"

namespace certfree::internal {

Shake256::Shake256() : ctx_(EVP_MD_CTX_new()) {
  if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_shake256(), nullptr) != 1) {
    throw Error(ErrorCode::kInternal, "SHAKE256 initialization failed");
  }
}

Shake256& Shake256::absorb(BytesView data) {
  if (finished_) throw Error(ErrorCode::kInternal, "SHAKE256 absorb after squeeze");
  if (!data.empty() && EVP_DigestUpdate(ctx_.get(), data.data(), data.size()) != 1) {
    throw Error(ErrorCode::kInternal, "SHAKE256 update failed");
  }
  return *this;
}

Shake256& Shake256::absorb_u16(std::uint16_t v) {
  Bytes b;
  append_u16_le(b, v);
  return absorb(b);
}

Shake256& Shake256::absorb_u32(std::uint32_t v) {
  Bytes b;
  append_u32_le(b, v);
  return absorb(b);
}

Shake256& Shake256::absorb_u64(std::uint64_t v) {
  Bytes b;
  append_u64_le(b, v);
  return absorb(b);
}

Bytes Shake256::squeeze(std::size_t n) {
  Bytes out(n);
  squeeze_into(out);
  return out;
}

void Shake256::squeeze_into(std::span<std::uint8_t> out) {
  if (finished_) throw Error(ErrorCode::kInternal, "SHAKE256 squeezed twice");
  finished_ = true;
  if (out.empty()) return;
  if (EVP_DigestFinalXOF(ctx_.get(), out.data(), out.size()) != 1) {
    throw Error(ErrorCode::kInternal, "SHAKE256 squeeze failed");
  }
}

}  // namespace certfree::internal
