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

#include "certfree/unified.hpp"

#include <sodium.h>

#include <algorithm>

#include "certfree/errors.hpp"

namespace certfree {

KexEphemeral::KexEphemeral(KexEphemeral&& other) noexcept
    : z_(other.z_), m_(other.m_), consumed_(other.consumed_) {
  other.wipe();
}

KexEphemeral& KexEphemeral::operator=(KexEphemeral&& other) noexcept {
  if (this != &other) {
    wipe();
    z_ = other.z_;
    m_ = other.m_;
    consumed_ = other.consumed_;
    other.wipe();
  }
  return *this;
}

KexEphemeral::~KexEphemeral() { wipe(); }

void KexEphemeral::wipe() {
  sodium_memzero(&z_, sizeof z_);
  consumed_ = true;
}

namespace {

void xor_into(Bytes& target, BytesView mask) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] ^= mask[i];
}

}  // namespace

Ciphertext encrypt(const SystemParams& params, const MasterPublicKey& mpk,
                   std::string_view recipient_id, const GroupPoint& recipient_q,
                   BytesView message, EntropySource& rng) {
  check_identity(recipient_id);
  const Group& g = params.group();
  const HashSuite& h = params.hash();

  Bytes sigma(params.config().sigma_size());
  rng.fill(sigma);
  const Scalar r = h.h2(g, sigma, message);

  Ciphertext c;
  c.r = g.mul_base(r);
  const GroupPoint key_point = public_key_point(params, recipient_id, recipient_q, mpk);
  c.u = h.h3(g, g.mul(r, key_point));
  xor_into(c.u, sigma);
  c.v.assign(message.begin(), message.end());
  xor_into(c.v, h.h4_expand(sigma, message.size()));
  sodium_memzero(sigma.data(), sigma.size());
  return c;
}

std::optional<Bytes> decrypt(const SystemParams& params, const UserCredential& cred,
                             const Ciphertext& c) {
  const Group& g = params.group();
  const HashSuite& h = params.hash();
  if (c.u.size() != params.config().sigma_size()) {
    throw Error(ErrorCode::kFormat, "ciphertext u must be " +
                                        std::to_string(params.config().sigma_size()) + " bytes");
  }

  Bytes sigma = h.h3(g, g.mul(cred.x, c.r));
  xor_into(sigma, c.u);
  Bytes message = c.v;
  xor_into(message, h.h4_expand(sigma, message.size()));
  const Scalar r = h.h2(g, sigma, message);
  const GroupPoint expected = g.mul_base(r);
  sodium_memzero(sigma.data(), sigma.size());

  if (sodium_memcmp(expected.raw().data(), c.r.raw().data(), expected.raw().size()) != 0) {
    sodium_memzero(message.data(), message.size());
    return std::nullopt;
  }
  return message;
}

Signature sign(const SystemParams& params, const UserCredential& cred, BytesView message,
               EntropySource& rng) {
  const Group& g = params.group();
  const Scalar r = g.scalar_random(rng);
  const GroupPoint commitment = g.mul_base(r);
  Signature sig;
  sig.e = params.hash().h5(g, message, commitment);
  sig.s = g.scalar_sub(r, g.scalar_mul(sig.e, cred.x));
  return sig;
}

bool verify(const SystemParams& params, const MasterPublicKey& mpk, std::string_view signer_id,
            const GroupPoint& signer_q, BytesView message, const Signature& sig) {
  check_identity(signer_id);
  const Group& g = params.group();
  const GroupPoint key_point = public_key_point(params, signer_id, signer_q, mpk);
  const GroupPoint commitment = g.double_mul(sig.s, sig.e, key_point);
  return params.hash().h5(g, message, commitment) == sig.e;
}

KexEphemeral kex_init(const SystemParams& params, EntropySource& rng) {
  const Group& g = params.group();
  Scalar z = g.scalar_random(rng);
  return KexEphemeral(z, g.mul_base(z));
}

namespace {

Bytes party_record(const Group& g, std::string_view id, const KexMessage& msg) {
  Bytes out;
  append_u16_le(out, static_cast<std::uint16_t>(id.size()));
  append(out, as_bytes(id));
  append(out, g.encode_point(msg.m));
  append(out, g.encode_point(msg.q));
  return out;
}

}  // namespace

Bytes kex_transcript(const SystemParams& params, std::string_view own_id, const KexMessage& own,
                     std::string_view peer_id, const KexMessage& peer, KexRole role) {
  check_identity(own_id);
  check_identity(peer_id);
  const Group& g = params.group();
  Bytes first = party_record(g, own_id, own);
  Bytes second = party_record(g, peer_id, peer);
  const bool swap = role == KexRole::kResponder ||
                    (role == KexRole::kUnspecified &&
                     std::lexicographical_compare(second.begin(), second.end(), first.begin(),
                                                  first.end()));
  if (swap) std::swap(first, second);
  append(first, second);
  return first;
}

SessionKey kex_finalize(const SystemParams& params, const MasterPublicKey& mpk,
                        const UserCredential& cred, KexEphemeral&& eph,
                        std::string_view peer_id, const KexMessage& peer_msg, KexRole role) {
  KexEphemeral local(std::move(eph));
  if (local.consumed()) throw Error(ErrorCode::kPrecondition, "key-exchange ephemeral already used");
  const Group& g = params.group();

  const GroupPoint peer_key = public_key_point(params, peer_id, peer_msg.q, mpk);
  SessionKey out;
  out.shared = g.add(g.mul(cred.x, peer_key), g.mul(local.secret(), peer_msg.m));

  const Bytes transcript =
      kex_transcript(params, cred.id, kex_message(local, cred), peer_id, peer_msg, role);
  const Bytes key = params.hash().kdf(g, out.shared, transcript);
  std::copy(key.begin(), key.end(), out.key.begin());
  return out;
}

}  // namespace certfree
