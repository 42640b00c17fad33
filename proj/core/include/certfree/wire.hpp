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

#include <array>
#include <cstdint>
#include <string_view>

#include "certfree/unified.hpp"

namespace certfree::wire {

// Container layout (all integers little-endian):
//
//   offset  size  field
//   0       4     magic "CFC1"
//   4       1     version (1)
//   5       1     kind
//   6       8     params digest
//   14      ...   payload
//
// Payload sizes are fixed by (kind, params) with two exceptions: a
// ciphertext's v runs to the end of the payload, and a credential carries a
// u16-prefixed identity.
enum class Kind : std::uint8_t {
  kParams = 1,
  kMasterPublicKey = 2,
  kMasterSecretKey = 3,
  kCredential = 4,
  kCiphertext = 5,
  kSignature = 6,
  kKexMessage = 7,
  kUserSecret = 8,
  kPartialKey = 9,
  kKexEphemeral = 10,
};

std::string_view kind_name(Kind kind);

inline constexpr std::array<std::uint8_t, 4> kMagic = {'C', 'F', 'C', '1'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kDigestSize = 8;
inline constexpr std::size_t kHeaderSize = 4 + 1 + 1 + kDigestSize;
inline constexpr std::size_t kParamsPayloadSize = 15;
// First payload byte of a master secret key file ('S').
inline constexpr std::uint8_t kSecretSentinel = 0x53;

using Digest = std::array<std::uint8_t, kDigestSize>;

// Truncated SHAKE256 of the params payload.
Digest params_digest(const SystemParams& params);

// Reads magic, version and kind without checking the digest.
Kind peek_kind(BytesView bytes);

Bytes serialize(const SystemParams& params);
// Rebuilds the group and default oracles. The container's digest must
// match its own payload.
SystemParams deserialize_params(BytesView bytes);

Bytes serialize(const SystemParams& params, const MasterPublicKey& mpk);
Bytes serialize(const SystemParams& params, const MasterSecretKey& msk);
Bytes serialize(const SystemParams& params, const UserCredential& cred);
Bytes serialize(const SystemParams& params, const Ciphertext& c);
Bytes serialize(const SystemParams& params, const Signature& sig);
Bytes serialize(const SystemParams& params, const KexMessage& msg);
Bytes serialize(const SystemParams& params, const UserSecret& secret);
Bytes serialize(const SystemParams& params, const PartialKey& key);
Bytes serialize(const SystemParams& params, const KexEphemeral& eph);

// Validates magic, version, kind, digest, exact length and every group
// element. Each failure has its own ErrorCode.
template <class T>
T deserialize(BytesView bytes, const SystemParams& params);

template <> MasterPublicKey deserialize<MasterPublicKey>(BytesView, const SystemParams&);
template <> MasterSecretKey deserialize<MasterSecretKey>(BytesView, const SystemParams&);
template <> UserCredential deserialize<UserCredential>(BytesView, const SystemParams&);
template <> Ciphertext deserialize<Ciphertext>(BytesView, const SystemParams&);
template <> Signature deserialize<Signature>(BytesView, const SystemParams&);
template <> KexMessage deserialize<KexMessage>(BytesView, const SystemParams&);
template <> UserSecret deserialize<UserSecret>(BytesView, const SystemParams&);
template <> PartialKey deserialize<PartialKey>(BytesView, const SystemParams&);
template <> KexEphemeral deserialize<KexEphemeral>(BytesView, const SystemParams&);

// Payload byte counts implied by the parameters (container header excluded).
struct SizeReport {
  std::size_t header = kHeaderSize;
  std::size_t params = kParamsPayloadSize;
  std::size_t point = 0;
  std::size_t scalar = 0;
  std::size_t mpk = 0;
  std::size_t msk = 0;
  std::size_t signature = 0;
  std::size_t kex_message = 0;
  // R || u; the ciphertext payload is this plus the message length.
  std::size_t ciphertext_overhead = 0;
  // domain || x || Q; the credential adds a u16 length and the identity.
  std::size_t credential_core = 0;
  std::size_t user_secret = 0;
  std::size_t partial_key = 0;

  std::size_t ciphertext(std::size_t message_size) const { return ciphertext_overhead + message_size; }
  std::size_t credential(std::size_t id_size) const { return credential_core + 2 + id_size; }
};

SizeReport size_report(const SystemParams& params);

}  // namespace certfree::wire
