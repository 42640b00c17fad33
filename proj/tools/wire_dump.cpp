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

// Prints hex dumps of every container kind from fixed seeds. The output is
// pasted into docs/wire_format.md; rerunning it must give the same bytes.

#include <cstdio>
#include <string>

#include "certfree/certfree.hpp"

using namespace certfree;

namespace {

void dump(const char* title, BytesView bytes) {
  std::printf("%s (%zu bytes)\n", title, bytes.size());
  for (std::size_t row = 0; row < bytes.size(); row += 16) {
    std::printf("  %04zx ", row);
    for (std::size_t i = row; i < row + 16 && i < bytes.size(); ++i) std::printf(" %02x", bytes[i]);
    std::printf("\n");
  }
  std::printf("\n");
}

void dump_profile(const SystemParams& params, std::uint64_t seed) {
  SeededEntropy rng(seed);
  const KeyAuthority auth = KeyAuthority::setup(params, rng, SecurityPolicy::disabled());
  const UserCredential alice = credential_from_extract("alice", auth.extract("alice", rng));
  const UserSecret secret = user_setup(params, rng);
  const PartialKey partial = auth.part_key_gen("bob", secret.u, rng);
  const UserCredential bob = *user_key_gen(params, "bob", secret, partial, auth.mpk()).credential;
  const KexEphemeral eph = kex_init(params, rng);

  dump("params", wire::serialize(params));
  if (params.t() <= 16) {
    dump("mpk", wire::serialize(params, auth.mpk()));
    dump("msk", wire::serialize(params, auth.msk()));
  }
  dump("credential (IDB, \"alice\")", wire::serialize(params, alice));
  dump("user_secret", wire::serialize(params, secret));
  dump("partial_key (\"bob\")", wire::serialize(params, partial));
  dump("credential (CL, \"bob\")", wire::serialize(params, bob));
  dump("ciphertext (to \"bob\", message \"hi\")",
       wire::serialize(params, encrypt(params, auth.mpk(), "bob", bob.q, as_bytes("hi"), rng)));
  dump("signature (\"alice\", message \"hi\")", wire::serialize(params, sign(params, alice, as_bytes("hi"), rng)));
  dump("kexmsg (\"alice\")", wire::serialize(params, kex_message(eph, alice)));
  dump("kex_ephemeral", wire::serialize(params, eph));
}

}  // namespace

int main() {
  std::printf("== production: ristretto255, t=1024, k=18, n=128, seed 2026\n\n");
  dump_profile(SystemParams::create(make_ristretto255_group(), HashConfig{128, 1024, 18}), 2026);
  std::printf("== mock: q=7919, t=8, k=2, n=128, seed 2026\n\n");
  dump_profile(SystemParams::create(make_mock_group(), HashConfig{128, 8, 2}), 2026);
  return 0;
}
