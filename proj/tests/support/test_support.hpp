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
#include <map>
#include <optional>
#include <string>

#include "certfree/certfree.hpp"

namespace certfree::testing {

// Oracles with pinned outputs. Unset entries fall through to SHAKE256.
class StubHashSuite : public HashSuite {
 public:
  using HashSuite::HashSuite;

  // Raw H1 stream returned for `id`, whatever Q is.
  std::map<std::string, Bytes> index_streams;
  std::optional<std::uint64_t> fixed_h5;

  Bytes index_stream(const Group& group, std::string_view id, const GroupPoint& q,
                     std::size_t size) const override {
    auto it = index_streams.find(std::string(id));
    if (it == index_streams.end()) return HashSuite::index_stream(group, id, q, size);
    Bytes out = it->second;
    out.resize(size, 0);
    return out;
  }

  Scalar h5(const Group& group, BytesView message, const GroupPoint& r) const override {
    if (fixed_h5) return group.scalar_from_u64(*fixed_h5);
    return HashSuite::h5(group, message, r);
  }
};

inline Bytes bytes_of(std::string_view s) {
  const BytesView v = as_bytes(s);
  return Bytes(v.begin(), v.end());
}

// 64-byte little-endian encoding of `v`: scalar_random on a FixedEntropy
// built from these bytes yields v mod q.
inline Bytes wide_le(std::uint64_t v) {
  Bytes out(kWideScalarSize, 0);
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
  return out;
}

template <class... Values>
FixedEntropy scalar_stream(Values... values) {
  Bytes out;
  (append(out, wide_le(static_cast<std::uint64_t>(values))), ...);
  return FixedEntropy(std::move(out));
}

// Integer value of a mock-group scalar or point.
inline std::uint64_t mock_value(const Scalar& s) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = v << 8 | s.raw()[i];
  return v;
}
inline std::uint64_t mock_value(const GroupPoint& p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = v << 8 | p.raw()[i];
  return v;
}

inline SystemParams mock_params(std::uint32_t t = 64, std::uint32_t k = 4) {
  return SystemParams::create(make_mock_group(), HashConfig{128, t, k});
}

inline SystemParams production_params(std::uint32_t t = 1024, std::uint32_t k = 18) {
  return SystemParams::create(make_ristretto255_group(), HashConfig{128, t, k});
}

// The hand-worked mock fixture: q = 7919, t = 4, k = 2,
// msk v = (3, 5, 7, 11), so mpk V = (3, 5, 7, 11).
struct HandWorkedFixture {
  std::shared_ptr<StubHashSuite> hash;
  SystemParams params;
  KeyAuthority authority;

  HandWorkedFixture()
      : hash(std::make_shared<StubHashSuite>(HashConfig{128, 4, 2})),
        params(make_mock_group(), hash),
        authority(params, make_msk(params), make_mpk(params)) {}

  static MasterSecretKey make_msk(const SystemParams& p) {
    MasterSecretKey msk;
    for (std::uint64_t v : {3, 5, 7, 11}) msk.v.push_back(p.group().scalar_from_u64(v));
    return msk;
  }
  static MasterPublicKey make_mpk(const SystemParams& p) {
    MasterPublicKey mpk;
    for (const Scalar& v : make_msk(p).v) mpk.points.push_back(p.group().mul_base(v));
    return mpk;
  }
};

// H1 streams selecting (1, 3) and (2, 4) when t = 4, k = 2.
inline const Bytes kIndexes13 = {0x20};  // bits 00 10
inline const Bytes kIndexes24 = {0x70};  // bits 01 11

}  // namespace certfree::testing
