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

#include "certfree/wire.hpp"

#include <algorithm>

#include "certfree/errors.hpp"
#include "xof.hpp"

namespace certfree::wire {

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kParams: return "params";
    case Kind::kMasterPublicKey: return "mpk";
    case Kind::kMasterSecretKey: return "msk";
    case Kind::kCredential: return "credential";
    case Kind::kCiphertext: return "ciphertext";
    case Kind::kSignature: return "signature";
    case Kind::kKexMessage: return "kexmsg";
    case Kind::kUserSecret: return "user_secret";
    case Kind::kPartialKey: return "partial_key";
    case Kind::kKexEphemeral: return "kex_ephemeral";
  }
  return "unknown";
}

namespace {

Bytes params_payload(const SystemParams& params) {
  Bytes out;
  const GroupProfile& profile = params.group().profile();
  out.push_back(static_cast<std::uint8_t>(profile.id));
  append_u32_le(out, profile.mock_modulus);
  append_u32_le(out, params.t());
  append_u32_le(out, params.k());
  append_u16_le(out, static_cast<std::uint16_t>(params.n_bits()));
  return out;
}

Digest digest_of_payload(BytesView payload) {
  Digest d{};
  internal::Shake256("CFC-PARAMS").absorb(payload).squeeze_into(d);
  return d;
}

Bytes container(Kind kind, const Digest& digest, BytesView payload) {
  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  out.push_back(static_cast<std::uint8_t>(kind));
  out.insert(out.end(), digest.begin(), digest.end());
  append(out, payload);
  return out;
}

struct Header {
  Kind kind;
  Digest digest;
};

Header read_header(ByteReader& reader) {
  if (reader.remaining() < kHeaderSize) {
    throw Error(ErrorCode::kFormat, "input shorter than the " + std::to_string(kHeaderSize) +
                                        "-byte container header");
  }
  BytesView magic = reader.take(kMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    throw Error(ErrorCode::kBadMagic, "not a CFC1 container");
  }
  const std::uint8_t version = reader.u8();
  if (version != kVersion) {
    throw Error(ErrorCode::kBadVersion, "unsupported container version " + std::to_string(version));
  }
  Header h;
  h.kind = static_cast<Kind>(reader.u8());
  BytesView digest = reader.take(kDigestSize);
  std::copy(digest.begin(), digest.end(), h.digest.begin());
  return h;
}

// Opens a container of the expected kind made under `params`.
ByteReader open(BytesView bytes, Kind expected, const SystemParams& params) {
  ByteReader reader(bytes);
  const Header h = read_header(reader);
  if (h.kind != expected) {
    throw Error(ErrorCode::kKindMismatch, "expected " + std::string(kind_name(expected)) +
                                              ", found " + std::string(kind_name(h.kind)));
  }
  if (h.digest != params_digest(params)) {
    throw Error(ErrorCode::kDigestMismatch,
                std::string(kind_name(expected)) + " was produced under different parameters");
  }
  return reader;
}

GroupPoint read_point(ByteReader& reader, const Group& g) {
  return g.decode_point(reader.take(g.profile().point_size));
}

Scalar read_scalar(ByteReader& reader, const Group& g) {
  return g.decode_scalar(reader.take(g.profile().scalar_size));
}

Domain read_domain(ByteReader& reader) {
  const std::uint8_t d = reader.u8();
  if (d != static_cast<std::uint8_t>(Domain::kIdentityBased) &&
      d != static_cast<std::uint8_t>(Domain::kCertificateless)) {
    throw Error(ErrorCode::kFormat, "unknown domain tag " + std::to_string(d));
  }
  return static_cast<Domain>(d);
}

}  // namespace

Digest params_digest(const SystemParams& params) { return digest_of_payload(params_payload(params)); }

Kind peek_kind(BytesView bytes) {
  ByteReader reader(bytes);
  return read_header(reader).kind;
}

Bytes serialize(const SystemParams& params) {
  const Bytes payload = params_payload(params);
  return container(Kind::kParams, digest_of_payload(payload), payload);
}

SystemParams deserialize_params(BytesView bytes) {
  ByteReader reader(bytes);
  const Header h = read_header(reader);
  if (h.kind != Kind::kParams) {
    throw Error(ErrorCode::kKindMismatch, "expected params, found " + std::string(kind_name(h.kind)));
  }
  BytesView payload = reader.take(kParamsPayloadSize);
  reader.expect_end();
  if (digest_of_payload(payload) != h.digest) {
    throw Error(ErrorCode::kDigestMismatch, "params digest does not match payload");
  }
  ByteReader body(payload);
  const auto group_id = static_cast<GroupId>(body.u8());
  const std::uint32_t modulus = body.u32_le();
  HashConfig config;
  config.t = body.u32_le();
  config.k = body.u32_le();
  config.n_bits = body.u16_le();
  if (group_id == GroupId::kRistretto255 && modulus != 0) {
    throw Error(ErrorCode::kFormat, "ristretto255 params carry a mock modulus");
  }
  return SystemParams::create(make_group(group_id, modulus), config);
}

Bytes serialize(const SystemParams& params, const MasterPublicKey& mpk) {
  if (mpk.points.size() != params.t()) throw Error(ErrorCode::kPrecondition, "mpk size differs from t");
  Bytes payload;
  for (const GroupPoint& p : mpk.points) append(payload, params.group().encode_point(p));
  return container(Kind::kMasterPublicKey, params_digest(params), payload);
}

Bytes serialize(const SystemParams& params, const MasterSecretKey& msk) {
  if (msk.v.size() != params.t()) throw Error(ErrorCode::kPrecondition, "msk size differs from t");
  Bytes payload{kSecretSentinel};
  for (const Scalar& s : msk.v) append(payload, params.group().encode_scalar(s));
  return container(Kind::kMasterSecretKey, params_digest(params), payload);
}

Bytes serialize(const SystemParams& params, const UserCredential& cred) {
  check_identity(cred.id);
  const Group& g = params.group();
  Bytes payload{static_cast<std::uint8_t>(cred.domain)};
  append(payload, g.encode_scalar(cred.x));
  append(payload, g.encode_point(cred.q));
  append_u16_le(payload, static_cast<std::uint16_t>(cred.id.size()));
  append(payload, as_bytes(cred.id));
  return container(Kind::kCredential, params_digest(params), payload);
}

Bytes serialize(const SystemParams& params, const Ciphertext& c) {
  if (c.u.size() != params.config().sigma_size()) {
    throw Error(ErrorCode::kPrecondition, "ciphertext u has the wrong size");
  }
  Bytes payload = params.group().encode_point(c.r);
  append(payload, c.u);
  append(payload, c.v);
  return container(Kind::kCiphertext, params_digest(params), payload);
}

Bytes serialize(const SystemParams& params, const Signature& sig) {
  Bytes payload = params.group().encode_scalar(sig.s);
  append(payload, params.group().encode_scalar(sig.e));
  return container(Kind::kSignature, params_digest(params), payload);
}

Bytes serialize(const SystemParams& params, const KexMessage& msg) {
  Bytes payload = params.group().encode_point(msg.m);
  append(payload, params.group().encode_point(msg.q));
  return container(Kind::kKexMessage, params_digest(params), payload);
}

Bytes serialize(const SystemParams& params, const UserSecret& secret) {
  Bytes payload = params.group().encode_scalar(secret.alpha);
  append(payload, params.group().encode_point(secret.u));
  return container(Kind::kUserSecret, params_digest(params), payload);
}

Bytes serialize(const SystemParams& params, const PartialKey& key) {
  Bytes payload{static_cast<std::uint8_t>(key.domain)};
  append(payload, params.group().encode_scalar(key.secret));
  append(payload, params.group().encode_point(key.q));
  return container(Kind::kPartialKey, params_digest(params), payload);
}

Bytes serialize(const SystemParams& params, const KexEphemeral& eph) {
  if (eph.consumed()) throw Error(ErrorCode::kPrecondition, "ephemeral already consumed");
  Bytes payload = params.group().encode_scalar(eph.secret());
  append(payload, params.group().encode_point(eph.commitment()));
  return container(Kind::kKexEphemeral, params_digest(params), payload);
}

template <>
MasterPublicKey deserialize<MasterPublicKey>(BytesView bytes, const SystemParams& params) {
  ByteReader reader = open(bytes, Kind::kMasterPublicKey, params);
  if (reader.remaining() != static_cast<std::size_t>(params.t()) * params.group().profile().point_size) {
    throw Error(ErrorCode::kFormat, "mpk payload length does not match t");
  }
  MasterPublicKey mpk;
  mpk.points.reserve(params.t());
  for (std::uint32_t i = 0; i < params.t(); ++i) mpk.points.push_back(read_point(reader, params.group()));
  reader.expect_end();
  return mpk;
}

template <>
MasterSecretKey deserialize<MasterSecretKey>(BytesView bytes, const SystemParams& params) {
  ByteReader reader = open(bytes, Kind::kMasterSecretKey, params);
  if (reader.remaining() != 1 + static_cast<std::size_t>(params.t()) * params.group().profile().scalar_size) {
    throw Error(ErrorCode::kFormat, "msk payload length does not match t");
  }
  if (reader.u8() != kSecretSentinel) throw Error(ErrorCode::kFormat, "msk sentinel byte missing");
  MasterSecretKey msk;
  msk.v.reserve(params.t());
  for (std::uint32_t i = 0; i < params.t(); ++i) msk.v.push_back(read_scalar(reader, params.group()));
  reader.expect_end();
  return msk;
}

template <>
UserCredential deserialize<UserCredential>(BytesView bytes, const SystemParams& params) {
  ByteReader reader = open(bytes, Kind::kCredential, params);
  UserCredential cred;
  cred.domain = read_domain(reader);
  cred.x = read_scalar(reader, params.group());
  cred.q = read_point(reader, params.group());
  const std::uint16_t id_size = reader.u16_le();
  BytesView id = reader.take(id_size);
  reader.expect_end();
  if (id.empty()) throw Error(ErrorCode::kFormat, "credential identity is empty");
  cred.id.assign(id.begin(), id.end());
  return cred;
}

template <>
Ciphertext deserialize<Ciphertext>(BytesView bytes, const SystemParams& params) {
  ByteReader reader = open(bytes, Kind::kCiphertext, params);
  Ciphertext c;
  c.r = read_point(reader, params.group());
  BytesView u = reader.take(params.config().sigma_size());
  c.u.assign(u.begin(), u.end());
  BytesView v = reader.rest();
  c.v.assign(v.begin(), v.end());
  return c;
}

template <>
Signature deserialize<Signature>(BytesView bytes, const SystemParams& params) {
  ByteReader reader = open(bytes, Kind::kSignature, params);
  Signature sig;
  sig.s = read_scalar(reader, params.group());
  sig.e = read_scalar(reader, params.group());
  reader.expect_end();
  return sig;
}

template <>
KexMessage deserialize<KexMessage>(BytesView bytes, const SystemParams& params) {
  ByteReader reader = open(bytes, Kind::kKexMessage, params);
  KexMessage msg;
  msg.m = read_point(reader, params.group());
  msg.q = read_point(reader, params.group());
  reader.expect_end();
  return msg;
}

template <>
UserSecret deserialize<UserSecret>(BytesView bytes, const SystemParams& params) {
  ByteReader reader = open(bytes, Kind::kUserSecret, params);
  UserSecret secret;
  secret.alpha = read_scalar(reader, params.group());
  secret.u = read_point(reader, params.group());
  reader.expect_end();
  return secret;
}

template <>
PartialKey deserialize<PartialKey>(BytesView bytes, const SystemParams& params) {
  ByteReader reader = open(bytes, Kind::kPartialKey, params);
  PartialKey key;
  key.domain = read_domain(reader);
  key.secret = read_scalar(reader, params.group());
  key.q = read_point(reader, params.group());
  reader.expect_end();
  return key;
}

template <>
KexEphemeral deserialize<KexEphemeral>(BytesView bytes, const SystemParams& params) {
  ByteReader reader = open(bytes, Kind::kKexEphemeral, params);
  const Scalar z = read_scalar(reader, params.group());
  const GroupPoint m = read_point(reader, params.group());
  reader.expect_end();
  if (!(params.group().mul_base(z) == m)) {
    throw Error(ErrorCode::kFormat, "ephemeral commitment does not match its secret");
  }
  return KexEphemeral(z, m);
}

SizeReport size_report(const SystemParams& params) {
  const GroupProfile& profile = params.group().profile();
  SizeReport r;
  r.point = profile.point_size;
  r.scalar = profile.scalar_size;
  r.mpk = static_cast<std::size_t>(params.t()) * r.point;
  r.msk = 1 + static_cast<std::size_t>(params.t()) * r.scalar;
  r.signature = 2 * r.scalar;
  r.kex_message = 2 * r.point;
  r.ciphertext_overhead = r.point + params.config().sigma_size();
  r.credential_core = 1 + r.scalar + r.point;
  r.user_secret = r.scalar + r.point;
  r.partial_key = 1 + r.scalar + r.point;
  return r;
}

}  // namespace certfree::wire
