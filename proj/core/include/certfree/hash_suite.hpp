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
#include <string_view>
#include <vector>

#include "certfree/bytes.hpp"
#include "certfree/group.hpp"

namespace certfree {

struct HashConfig {
  // Symmetric size n in bits: length of sigma, u, and the H3 output.
  unsigned n_bits = 128;
  // Master key vector length; a power of two.
  std::uint32_t t = 1024;
  // Indexes selected per identity.
  std::uint32_t k = 18;

  unsigned log2_t() const;
  // k * log2(t): bits of H1 output consumed for index selection.
  unsigned gamma_bits() const;
  std::size_t sigma_size() const { return n_bits / 8; }

  // Structural checks only (power-of-two t, 1 <= k <= t, n in {128, 256},
  // gamma within the extraction cap). Throws Error(kParameter).
  void validate() const;

  friend bool operator==(const HashConfig&, const HashConfig&) = default;
};

inline constexpr unsigned kMaxGammaBits = 4096;

// k indexes into the master key vector, 1-based, duplicates allowed.
struct IndexSet {
  std::vector<std::uint32_t> indexes;
  unsigned gamma_bits = 0;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

// The five random oracles plus the session-key KDF, instantiated with
// SHAKE256 under per-oracle ASCII labels "CFC-H1".."CFC-H5".
//
// The oracle methods are virtual so tests can pin outputs; production code
// uses this class as is. Lengths inside hash inputs are u64 little-endian.
class HashSuite {
 public:
  explicit HashSuite(HashConfig config);
  virtual ~HashSuite() = default;

  const HashConfig& config() const { return config_; }

  // H1(ID, Q) split into k consecutive log2(t)-bit chunks, MSB-first within
  // each byte; chunk c selects index c + 1.
  IndexSet h1_indexes(const Group& group, std::string_view id, const GroupPoint& q) const;

  // Raw H1 output: "CFC-H1" || t || k || len(id) || id || enc(Q).
  virtual Bytes index_stream(const Group& group, std::string_view id, const GroupPoint& q,
                             std::size_t size) const;

  // H2(sigma, m), wide-reduced mod q.
  virtual Scalar h2(const Group& group, BytesView sigma, BytesView message) const;
  // H3(K): n bits.
  virtual Bytes h3(const Group& group, const GroupPoint& k) const;
  // H4 keystream. Its first n/8 bytes are H4(sigma) proper.
  virtual Bytes h4_expand(BytesView sigma, std::size_t size) const;
  // H5(m, R), wide-reduced mod q.
  virtual Scalar h5(const Group& group, BytesView message, const GroupPoint& r) const;

  // 32-byte session key from a shared point and a transcript.
  Bytes kdf(const Group& group, const GroupPoint& shared, BytesView transcript) const;

  static IndexSet indexes_from_stream(BytesView stream, std::uint32_t t, std::uint32_t k);

 private:
  HashConfig config_;
};

inline constexpr std::size_t kSessionKeySize = 32;

}  // namespace certfree
