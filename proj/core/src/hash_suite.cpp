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

#include "certfree/hash_suite.hpp"

#include <array>
#include <bit>

#include "certfree/errors.hpp"
#include "xof.hpp"

namespace certfree {

unsigned HashConfig::log2_t() const { return static_cast<unsigned>(std::countr_zero(t)); }

unsigned HashConfig::gamma_bits() const { return k * log2_t(); }

void HashConfig::validate() const {
  if (n_bits != 128 && n_bits != 256) {
    throw Error(ErrorCode::kParameter, "n must be 128 or 256 bits, got " + std::to_string(n_bits));
  }
  if (t < 2 || !std::has_single_bit(t)) {
    throw Error(ErrorCode::kParameter, "t must be a power of two >= 2, got " + std::to_string(t));
  }
  if (k < 1 || k > t) {
    throw Error(ErrorCode::kParameter, "k must satisfy 1 <= k <= t, got k=" + std::to_string(k));
  }
  if (static_cast<std::uint64_t>(k) * log2_t() > kMaxGammaBits) {
    throw Error(ErrorCode::kParameter, "k*log2(t) exceeds " + std::to_string(kMaxGammaBits) + " bits");
  }
}

HashSuite::HashSuite(HashConfig config) : config_(config) { config_.validate(); }

IndexSet HashSuite::indexes_from_stream(BytesView stream, std::uint32_t t, std::uint32_t k) {
  const unsigned width = static_cast<unsigned>(std::countr_zero(t));
  const std::size_t needed_bits = static_cast<std::size_t>(width) * k;
  if (stream.size() * 8 < needed_bits) {
    throw Error(ErrorCode::kInternal, "index stream too short");
  }
  IndexSet out;
  out.gamma_bits = static_cast<unsigned>(needed_bits);
  out.indexes.reserve(k);
  std::size_t bit = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t chunk = 0;
    for (unsigned b = 0; b < width; ++b, ++bit) {
      unsigned v = (stream[bit / 8] >> (7 - bit % 8)) & 1u;
      chunk = chunk << 1 | v;
    }
    out.indexes.push_back(chunk + 1);
  }
  return out;
}

IndexSet HashSuite::h1_indexes(const Group& group, std::string_view id, const GroupPoint& q) const {
  const std::size_t size = (config_.gamma_bits() + 7) / 8;
  Bytes stream = index_stream(group, id, q, size);
  return indexes_from_stream(stream, config_.t, config_.k);
}

Bytes HashSuite::index_stream(const Group& group, std::string_view id, const GroupPoint& q,
                              std::size_t size) const {
  return internal::Shake256("CFC-H1")
      .absorb_u32(config_.t)
      .absorb_u32(config_.k)
      .absorb_u64(id.size())
      .absorb(as_bytes(id))
      .absorb(group.encode_point(q))
      .squeeze(size);
}

Scalar HashSuite::h2(const Group& group, BytesView sigma, BytesView message) const {
  std::array<std::uint8_t, kWideScalarSize> wide{};
  internal::Shake256("CFC-H2")
      .absorb(sigma)
      .absorb_u64(message.size())
      .absorb(message)
      .squeeze_into(wide);
  return group.scalar_from_wide(wide);
}

Bytes HashSuite::h3(const Group& group, const GroupPoint& k) const {
  return internal::Shake256("CFC-H3").absorb(group.encode_point(k)).squeeze(config_.sigma_size());
}

Bytes HashSuite::h4_expand(BytesView sigma, std::size_t size) const {
  return internal::Shake256("CFC-H4").absorb(sigma).squeeze(size);
}

Scalar HashSuite::h5(const Group& group, BytesView message, const GroupPoint& r) const {
  std::array<std::uint8_t, kWideScalarSize> wide{};
  internal::Shake256("CFC-H5")
      .absorb_u64(message.size())
      .absorb(message)
      .absorb(group.encode_point(r))
      .squeeze_into(wide);
  return group.scalar_from_wide(wide);
}

Bytes HashSuite::kdf(const Group& group, const GroupPoint& shared, BytesView transcript) const {
  Bytes transcript_hash = internal::Shake256("CFC-TRANSCRIPT")
                              .absorb_u64(transcript.size())
                              .absorb(transcript)
                              .squeeze(64);
  return internal::Shake256("CFC-KDF")
      .absorb(group.encode_point(shared))
      .absorb(transcript_hash)
      .squeeze(kSessionKeySize);
}

}  // namespace certfree
