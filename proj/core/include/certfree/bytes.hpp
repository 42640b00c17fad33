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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace certfree {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

inline BytesView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

void append_u16_le(Bytes& out, std::uint16_t v);
void append_u32_le(Bytes& out, std::uint32_t v);
void append_u64_le(Bytes& out, std::uint64_t v);

inline void append(Bytes& out, BytesView data) {
  out.insert(out.end(), data.begin(), data.end());
}

std::string to_hex(BytesView data);
// Throws Error(kFormat) on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

// Bounds-checked little-endian reader. Every read past the end throws
// Error(kFormat).
class ByteReader {
 public:
  explicit ByteReader(BytesView data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16_le();
  std::uint32_t u32_le();
  BytesView take(std::size_t n);
  BytesView rest();

  std::size_t remaining() const { return data_.size() - pos_; }
  // Throws Error(kFormat) if unread bytes remain.
  void expect_end() const;

 private:
  BytesView data_;
  std::size_t pos_ = 0;
};

}  // namespace certfree
