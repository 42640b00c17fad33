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

#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "certfree/errors.hpp"
#include "support/test_support.hpp"

namespace certfree {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternal;
}

struct WorldFixture : ::testing::Test {
  void SetUp() override {
    SeededEntropy rng(40);
    auth = std::make_unique<KeyAuthority>(KeyAuthority::setup(make_ristretto255_group(), HashConfig{}, rng));
    secret = user_setup(params(), rng);
    partial = auth->part_key_gen("bob@example.org", secret.u, rng);
    cred = *user_key_gen(params(), "bob@example.org", secret, partial, auth->mpk()).credential;
  }
  const SystemParams& params() const { return auth->params(); }

  std::unique_ptr<KeyAuthority> auth;
  UserSecret secret;
  PartialKey partial;
  UserCredential cred;
};

TEST_F(WorldFixture, EveryKindRoundTrips) {
  SeededEntropy rng(41);
  const SystemParams& p = params();
  const Bytes pb = wire::serialize(p);
  EXPECT_EQ(wire::params_digest(wire::deserialize_params(pb)), wire::params_digest(p));
  EXPECT_EQ(wire::deserialize<MasterPublicKey>(wire::serialize(p, auth->mpk()), p).points, auth->mpk().points);
  EXPECT_EQ(wire::deserialize<MasterSecretKey>(wire::serialize(p, auth->msk()), p).v, auth->msk().v);
  EXPECT_EQ(wire::deserialize<UserSecret>(wire::serialize(p, secret), p), secret);
  EXPECT_EQ(wire::deserialize<PartialKey>(wire::serialize(p, partial), p), partial);
  for (int i = 0; i < 100; ++i) {
    Bytes m(i);
    rng.fill(m);
    const Ciphertext c = encrypt(p, auth->mpk(), cred.id, cred.q, m, rng);
    EXPECT_EQ(wire::deserialize<Ciphertext>(wire::serialize(p, c), p), c);
    const Signature s = sign(p, cred, m, rng);
    EXPECT_EQ(wire::deserialize<Signature>(wire::serialize(p, s), p), s);
    KexEphemeral eph = kex_init(p, rng);
    const KexMessage km = kex_message(eph, cred);
    EXPECT_EQ(wire::deserialize<KexMessage>(wire::serialize(p, km), p), km);
    const KexEphemeral back = wire::deserialize<KexEphemeral>(wire::serialize(p, eph), p);
    EXPECT_EQ(back.secret(), eph.secret());
    EXPECT_EQ(back.commitment(), eph.commitment());
    UserCredential other = cred;
    other.id = "user-" + std::to_string(i);
    EXPECT_EQ(wire::deserialize<UserCredential>(wire::serialize(p, other), p), other);
  }
}

TEST_F(WorldFixture, PayloadSizesMatchReport) {
  const SystemParams& p = params();
  const wire::SizeReport r = wire::size_report(p);
  EXPECT_EQ(r.signature, 64u);
  EXPECT_EQ(r.kex_message, 64u);
  EXPECT_EQ(r.ciphertext_overhead, 48u);
  EXPECT_EQ(r.credential_core, 65u);
  EXPECT_EQ(r.mpk, 32768u);
  SeededEntropy rng(42);
  const Bytes m(100, 7);
  EXPECT_EQ(wire::serialize(p, encrypt(p, auth->mpk(), cred.id, cred.q, m, rng)).size(),
            wire::kHeaderSize + r.ciphertext(100));
  EXPECT_EQ(wire::serialize(p, sign(p, cred, m, rng)).size(), wire::kHeaderSize + r.signature);
  EXPECT_EQ(wire::serialize(p, cred).size(), wire::kHeaderSize + r.credential(cred.id.size()));
  EXPECT_EQ(wire::serialize(p, auth->mpk()).size(), wire::kHeaderSize + r.mpk);
  EXPECT_EQ(wire::serialize(p, auth->msk()).size(), wire::kHeaderSize + r.msk);
  EXPECT_EQ(wire::serialize(p, secret).size(), wire::kHeaderSize + r.user_secret);
  EXPECT_EQ(wire::serialize(p, partial).size(), wire::kHeaderSize + r.partial_key);
  EXPECT_EQ(wire::serialize(p).size(), wire::kHeaderSize + wire::kParamsPayloadSize);
}

TEST(SizeReport, SmallerTableAndMockScaling) {
  const wire::SizeReport small = wire::size_report(testing::production_params(256, 32));
  EXPECT_EQ(small.mpk, 8192u);
  const wire::SizeReport mock = wire::size_report(testing::mock_params(64, 4));
  EXPECT_EQ(mock.point, 2u);
  EXPECT_EQ(mock.signature, 4u);
  EXPECT_EQ(mock.mpk, 128u);
  EXPECT_EQ(mock.ciphertext_overhead, 2u + 16u);
}

TEST_F(WorldFixture, CredentialLayout) {
  const Bytes b = wire::serialize(params(), cred);
  EXPECT_EQ(Bytes(b.begin(), b.begin() + 4), testing::bytes_of("CFC1"));
  EXPECT_EQ(b[4], 1);
  EXPECT_EQ(b[5], static_cast<std::uint8_t>(wire::Kind::kCredential));
  EXPECT_EQ(b[14], static_cast<std::uint8_t>(Domain::kCertificateless));
  EXPECT_EQ(Bytes(b.begin() + 15, b.begin() + 47), params().group().encode_scalar(cred.x));
  EXPECT_EQ(Bytes(b.begin() + 47, b.begin() + 79), params().group().encode_point(cred.q));
  EXPECT_EQ(b[79] | b[80] << 8, static_cast<int>(cred.id.size()));
  EXPECT_EQ(std::string(b.begin() + 81, b.end()), cred.id);
}

TEST_F(WorldFixture, MskCarriesSecretSentinel) {
  const Bytes b = wire::serialize(params(), auth->msk());
  EXPECT_EQ(b[wire::kHeaderSize], wire::kSecretSentinel);
  Bytes bad = b;
  bad[wire::kHeaderSize] = 0;
  EXPECT_EQ(code_of([&] { wire::deserialize<MasterSecretKey>(bad, params()); }), ErrorCode::kFormat);
}

TEST_F(WorldFixture, DistinctErrorCodes) {
  const SystemParams& p = params();
  SeededEntropy rng(43);
  const Signature sig = sign(p, cred, as_bytes("x"), rng);
  const Bytes good = wire::serialize(p, sig);

  Bytes magic = good;
  magic[0] = 'X';
  EXPECT_EQ(code_of([&] { wire::deserialize<Signature>(magic, p); }), ErrorCode::kBadMagic);

  Bytes version = good;
  version[4] = 2;
  EXPECT_EQ(code_of([&] { wire::deserialize<Signature>(version, p); }), ErrorCode::kBadVersion);

  EXPECT_EQ(code_of([&] { wire::deserialize<KexMessage>(good, p); }), ErrorCode::kKindMismatch);

  const SystemParams other = testing::production_params(256, 32);
  EXPECT_EQ(code_of([&] { wire::deserialize<Signature>(good, other); }), ErrorCode::kDigestMismatch);

  Bytes trailing = good;
  trailing.push_back(0);
  EXPECT_EQ(code_of([&] { wire::deserialize<Signature>(trailing, p); }), ErrorCode::kFormat);
  Bytes short_sig(good.begin(), good.end() - 1);
  EXPECT_EQ(code_of([&] { wire::deserialize<Signature>(short_sig, p); }), ErrorCode::kFormat);
  EXPECT_EQ(code_of([&] { wire::deserialize<Signature>(Bytes(good.begin(), good.begin() + 10), p); }),
            ErrorCode::kFormat);

  Bytes high_scalar = good;
  high_scalar[wire::kHeaderSize + 31] = 0xff;
  EXPECT_EQ(code_of([&] { wire::deserialize<Signature>(high_scalar, p); }), ErrorCode::kNonCanonicalScalar);

  KexEphemeral eph = kex_init(p, rng);
  Bytes km = wire::serialize(p, kex_message(eph, cred));
  for (std::size_t i = 0; i < 32; ++i) km[wire::kHeaderSize + i] = 0xff;
  EXPECT_EQ(code_of([&] { wire::deserialize<KexMessage>(km, p); }), ErrorCode::kInvalidPoint);
}

TEST_F(WorldFixture, TruncatedCiphertext) {
  const SystemParams& p = params();
  SeededEntropy rng(44);
  const Ciphertext c = encrypt(p, auth->mpk(), cred.id, cred.q, as_bytes("twelve bytes"), rng);
  const Bytes b = wire::serialize(p, c);
  // Cutting into R or u is a format error.
  const Bytes into_u(b.begin(), b.begin() + wire::kHeaderSize + 40);
  EXPECT_EQ(code_of([&] { wire::deserialize<Ciphertext>(into_u, p); }), ErrorCode::kFormat);
  // Cutting into v leaves a well-formed but shorter ciphertext that fails the FO check.
  const Bytes into_v(b.begin(), b.end() - 3);
  const Ciphertext shorter = wire::deserialize<Ciphertext>(into_v, p);
  EXPECT_FALSE(decrypt(p, cred, shorter));
}

TEST_F(WorldFixture, EveryVersionOtherThanOneIsRejected) {
  const Bytes good = wire::serialize(params(), cred);
  for (int v = 0; v < 256; ++v) {
    if (v == 1) continue;
    Bytes b = good;
    b[4] = static_cast<std::uint8_t>(v);
    EXPECT_EQ(code_of([&] { wire::deserialize<UserCredential>(b, params()); }), ErrorCode::kBadVersion);
  }
}

TEST_F(WorldFixture, SerializationIsInjective) {
  SeededEntropy rng(45);
  std::set<Bytes> sigs, creds, cts;
  for (int i = 0; i < 200; ++i) {
    sigs.insert(wire::serialize(params(), sign(params(), cred, as_bytes("m"), rng)));
    UserCredential c = cred;
    c.id = std::string(static_cast<std::size_t>(i % 7 + 1), static_cast<char>('a' + i / 7));
    creds.insert(wire::serialize(params(), c));
    cts.insert(wire::serialize(params(), encrypt(params(), auth->mpk(), cred.id, cred.q, as_bytes("m"), rng)));
  }
  EXPECT_EQ(sigs.size(), 200u);
  EXPECT_EQ(creds.size(), 200u);
  EXPECT_EQ(cts.size(), 200u);
}

TEST(Params, MockRoundTripAndTamper) {
  const SystemParams p = testing::mock_params(64, 4);
  const Bytes b = wire::serialize(p);
  const SystemParams back = wire::deserialize_params(b);
  EXPECT_EQ(back.group().profile().id, GroupId::kMockPrime);
  EXPECT_EQ(back.group().profile().mock_modulus, 7919u);
  EXPECT_EQ(back.t(), 64u);
  EXPECT_EQ(back.k(), 4u);
  Bytes tampered = b;
  tampered[wire::kHeaderSize + 5] ^= 1;
  EXPECT_EQ(code_of([&] { wire::deserialize_params(tampered); }), ErrorCode::kDigestMismatch);
  EXPECT_EQ(wire::peek_kind(b), wire::Kind::kParams);
}

TEST(Ephemeral, MismatchedCommitmentRejected) {
  const SystemParams p = testing::production_params();
  SeededEntropy rng(46);
  KexEphemeral a = kex_init(p, rng);
  KexEphemeral b = kex_init(p, rng);
  Bytes ba = wire::serialize(p, a);
  const Bytes bb = wire::serialize(p, b);
  std::copy(bb.end() - 32, bb.end(), ba.end() - 32);
  EXPECT_EQ(code_of([&] { wire::deserialize<KexEphemeral>(ba, p); }), ErrorCode::kFormat);
}

}  // namespace
}  // namespace certfree
