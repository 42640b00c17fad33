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
#include <optional>
#include <string_view>

#include "certfree/user_keys.hpp"

namespace certfree {

// c = (R, u, v): R = r*P, u masks sigma (n bits), v masks the message and
// has exactly its length.
struct Ciphertext {
  GroupPoint r;
  Bytes u;
  Bytes v;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct Signature {
  Scalar s;
  Scalar e;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Public half of a key-exchange flow: (M = z*P, Q).
struct KexMessage {
  GroupPoint m;
  GroupPoint q;

  friend bool operator==(const KexMessage&, const KexMessage&) = default;
};

// One-shot ephemeral (z, M = z*P). Move-only; kex_finalize consumes it and
// the scalar is wiped on destruction.
class KexEphemeral {
 public:
  KexEphemeral(Scalar z, GroupPoint m) : z_(z), m_(m) {}
  KexEphemeral(const KexEphemeral&) = delete;
  KexEphemeral& operator=(const KexEphemeral&) = delete;
  KexEphemeral(KexEphemeral&& other) noexcept;
  KexEphemeral& operator=(KexEphemeral&& other) noexcept;
  ~KexEphemeral();

  const Scalar& secret() const { return z_; }
  const GroupPoint& commitment() const { return m_; }
  bool consumed() const { return consumed_; }

 private:
  void wipe();

  Scalar z_;
  GroupPoint m_;
  bool consumed_ = false;
};

enum class KexRole {
  kInitiator,
  kResponder,
  // Transcript order falls back to byte order of the two party records.
  kUnspecified,
};

struct SessionKey {
  GroupPoint shared;
  std::array<std::uint8_t, kSessionKeySize> key{};

  friend bool operator==(const SessionKey&, const SessionKey&) = default;
};

// sigma random, r = H2(sigma, m), R = r*P,
// u = H3(r*(Y + Q)) xor sigma, v = H4(sigma) xor m.
Ciphertext encrypt(const SystemParams& params, const MasterPublicKey& mpk,
                   std::string_view recipient_id, const GroupPoint& recipient_q,
                   BytesView message, EntropySource& rng);

// Recovers sigma and m, then re-derives r and requires r*P == R. Returns
// nullopt on any mismatch; a u of the wrong size is Error(kFormat) instead.
std::optional<Bytes> decrypt(const SystemParams& params, const UserCredential& cred,
                             const Ciphertext& c);

// r random, R = r*P, e = H5(m, R), s = r - e*x.
Signature sign(const SystemParams& params, const UserCredential& cred, BytesView message,
               EntropySource& rng);

// R' = s*P + e*(Y + Q); accepts iff e == H5(m, R').
bool verify(const SystemParams& params, const MasterPublicKey& mpk, std::string_view signer_id,
            const GroupPoint& signer_q, BytesView message, const Signature& sig);

KexEphemeral kex_init(const SystemParams& params, EntropySource& rng);

inline KexMessage kex_message(const KexEphemeral& eph, const UserCredential& cred) {
  return KexMessage{eph.commitment(), cred.q};
}

// K = x*(Y_peer + Q_peer) + z*M_peer, key = KDF(K, transcript). The
// transcript holds both (id, M, Q) records, initiator first. Throws
// Error(kPrecondition) if `eph` was already consumed.
SessionKey kex_finalize(const SystemParams& params, const MasterPublicKey& mpk,
                        const UserCredential& cred, KexEphemeral&& eph,
                        std::string_view peer_id, const KexMessage& peer_msg, KexRole role);

Bytes kex_transcript(const SystemParams& params, std::string_view own_id, const KexMessage& own,
                     std::string_view peer_id, const KexMessage& peer, KexRole role);

}  // namespace certfree
