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

#include "certfree/user_keys.hpp"

#include <gtest/gtest.h>

#include "certfree/errors.hpp"
#include "support/test_support.hpp"

namespace certfree {
namespace {

using testing::HandWorkedFixture;
using testing::kIndexes13;
using testing::kIndexes24;
using testing::mock_value;
using testing::scalar_stream;

TEST(UserSetup, CommitmentMatchesSecret) {
  const SystemParams params = testing::mock_params();
  FixedEntropy nine = scalar_stream(9);
  const UserSecret s = user_setup(params, nine);
  EXPECT_EQ(mock_value(s.alpha), 9u);
  EXPECT_EQ(mock_value(s.u), 9u);

  const SystemParams prod = testing::production_params();
  SystemEntropy rng;
  const UserSecret a = user_setup(prod, rng);
  const UserSecret b = user_setup(prod, rng);
  EXPECT_EQ(prod.group().mul_base(a.alpha), a.u);
  EXPECT_NE(a.alpha, b.alpha);
}

TEST(DerivePublicPoint, HandSum) {
  HandWorkedFixture f;
  f.hash->index_streams["alice"] = kIndexes13;
  const GroupPoint q = f.params.group().generator();
  const GroupPoint y = derive_public_point(f.params, "alice", q, f.authority.mpk());
  EXPECT_EQ(mock_value(y), 10u);
  EXPECT_EQ(y, derive_public_point(f.params, "alice", q, f.authority.mpk()));
}

TEST(DerivePublicPoint, CostsKMinusOneAdditions) {
  SeededEntropy rng(1);
  const KeyAuthority auth = KeyAuthority::setup(make_ristretto255_group(), HashConfig{}, rng);
  auto counter = std::make_shared<CountingGroup>(make_ristretto255_group());
  const SystemParams counted = auth.params().with_group(counter);
  derive_public_point(counted, "alice", counter->generator(), auth.mpk());
  EXPECT_EQ(counter->counts().additions, 17u);
  counter->reset();
  public_key_point(counted, "alice", counter->generator(), auth.mpk());
  EXPECT_EQ(counter->counts().additions, 18u);
  EXPECT_EQ(counter->counts().muls(), 0u);
}

TEST(DerivePublicPoint, RejectsMismatchedMpk) {
  HandWorkedFixture f;
  MasterPublicKey short_mpk = f.authority.mpk();
  short_mpk.points.pop_back();
  EXPECT_THROW(derive_public_point(f.params, "alice", f.params.group().generator(), short_mpk), Error);
}

TEST(UserKeyGen, HandWorkedContinuation) {
  HandWorkedFixture f;
  f.hash->index_streams["bob"] = kIndexes24;
  const Group& g = f.params.group();
  FixedEntropy alpha_rng = scalar_stream(9);
  const UserSecret secret = user_setup(f.params, alpha_rng);
  FixedEntropy beta_rng = scalar_stream(20);
  const PartialKey partial = f.authority.part_key_gen("bob", secret.u, beta_rng);

  const KeyGenResult result = user_key_gen(f.params, "bob", secret, partial, f.authority.mpk());
  ASSERT_TRUE(result);
  const UserCredential& cred = *result.credential;
  EXPECT_EQ(mock_value(cred.x), 45u);
  EXPECT_EQ(mock_value(cred.q), 29u);
  EXPECT_EQ(cred.domain, Domain::kCertificateless);
  EXPECT_EQ(mock_value(g.mul_base(cred.x)), 45u);
  EXPECT_TRUE(verify_credential(f.params, cred, f.authority.mpk()));
}

TEST(UserKeyGen, ReplacedCommitmentIsRejected) {
  HandWorkedFixture f;
  f.hash->index_streams["bob"] = kIndexes24;
  const Group& g = f.params.group();
  FixedEntropy alpha_rng = scalar_stream(9);
  UserSecret secret = user_setup(f.params, alpha_rng);
  FixedEntropy beta_rng = scalar_stream(20);
  const PartialKey partial = f.authority.part_key_gen("bob", secret.u, beta_rng);

  secret.u = g.add(secret.u, g.generator());
  const KeyGenResult result = user_key_gen(f.params, "bob", secret, partial, f.authority.mpk());
  EXPECT_FALSE(result);
  EXPECT_EQ(result.reject_reason, kBindingCheckFailed);
}

TEST(UserKeyGen, ExhaustiveBindingOverMockGroup) {
  SeededEntropy rng(2);
  const KeyAuthority auth =
      KeyAuthority::setup(testing::mock_params(16, 2), rng, SecurityPolicy::disabled());
  const Group& g = auth.params().group();
  const UserSecret honest = user_setup(auth.params(), rng);
  const PartialKey partial = auth.part_key_gen("carol", honest.u, rng);
  ASSERT_TRUE(user_key_gen(auth.params(), "carol", honest, partial, auth.mpk()));
  int accepted = 0;
  for (std::uint64_t v = 0; v < 7919; ++v) {
    const GroupPoint u = g.mul_base(g.scalar_from_u64(v));
    if (u == honest.u) continue;
    UserSecret replaced = honest;
    replaced.u = u;
    if (user_key_gen(auth.params(), "carol", replaced, partial, auth.mpk())) ++accepted;
  }
  EXPECT_EQ(accepted, 0);
}

TEST(UserKeyGen, HonestProductionUsersAlwaysAccepted) {
  SeededEntropy rng(3);
  const KeyAuthority auth = KeyAuthority::setup(make_ristretto255_group(), HashConfig{}, rng);
  for (int i = 0; i < 100; ++i) {
    const std::string id = "device-" + std::to_string(i);
    const UserSecret s = user_setup(auth.params(), rng);
    const PartialKey p = auth.part_key_gen(id, s.u, rng);
    const KeyGenResult r = user_key_gen(auth.params(), id, s, p, auth.mpk());
    ASSERT_TRUE(r) << id;
    EXPECT_TRUE(verify_credential(auth.params(), *r.credential, auth.mpk()));
  }
}

TEST(UserKeyGen, WrongIdentityRejected) {
  SeededEntropy rng(4);
  const KeyAuthority auth = KeyAuthority::setup(make_ristretto255_group(), HashConfig{}, rng);
  const UserSecret s = user_setup(auth.params(), rng);
  const PartialKey p = auth.part_key_gen("dave", s.u, rng);
  EXPECT_FALSE(user_key_gen(auth.params(), "eve", s, p, auth.mpk()));
}

TEST(UserKeyGen, RequiresCertificatelessPartialKey) {
  HandWorkedFixture f;
  SeededEntropy rng(5);
  const UserSecret s = user_setup(f.params, rng);
  const PartialKey extracted = f.authority.extract("alice", rng);
  try {
    user_key_gen(f.params, "alice", s, extracted, f.authority.mpk());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
  const PartialKey partial = f.authority.part_key_gen("alice", s.u, rng);
  EXPECT_THROW(credential_from_extract("alice", partial), Error);
}

TEST(VerifyCredential, HonestAndTampered) {
  SeededEntropy rng(6);
  const KeyAuthority auth = KeyAuthority::setup(make_ristretto255_group(), HashConfig{}, rng);
  const Group& g = auth.params().group();
  const UserCredential idb = credential_from_extract("alice", auth.extract("alice", rng));
  const UserSecret s = user_setup(auth.params(), rng);
  const UserCredential cl =
      *user_key_gen(auth.params(), "bob", s, auth.part_key_gen("bob", s.u, rng), auth.mpk()).credential;
  EXPECT_TRUE(verify_credential(auth.params(), idb, auth.mpk()));
  EXPECT_TRUE(verify_credential(auth.params(), cl, auth.mpk()));
  UserCredential bumped = idb;
  bumped.x = g.scalar_add(bumped.x, g.scalar_from_u64(1));
  EXPECT_FALSE(verify_credential(auth.params(), bumped, auth.mpk()));
  UserCredential renamed = cl;
  renamed.id = "mallory";
  EXPECT_FALSE(verify_credential(auth.params(), renamed, auth.mpk()));
}

}  // namespace
}  // namespace certfree
