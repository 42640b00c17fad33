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

#include <optional>
#include <string>
#include <string_view>

#include "certfree/authority.hpp"

namespace certfree {

// CL user secret (alpha, U = alpha*P).
struct UserSecret {
  Scalar alpha;
  GroupPoint u;

  friend bool operator==(const UserSecret&, const UserSecret&) = default;
};

// Final key pair, identical in shape for both domains. Only x is kept: the
// CL inputs w and alpha are not retained once x is formed.
struct UserCredential {
  std::string id;
  GroupPoint q;
  Scalar x;
  Domain domain = Domain::kIdentityBased;

  friend bool operator==(const UserCredential&, const UserCredential&) = default;
};

UserSecret user_setup(const SystemParams& params, EntropySource& rng);

// Y = sum of V_j over H1(id, Q): k - 1 group additions.
GroupPoint derive_public_point(const SystemParams& params, std::string_view id,
                               const GroupPoint& q, const MasterPublicKey& mpk);

// Y + Q, the point every credential's x opens: k group additions.
GroupPoint public_key_point(const SystemParams& params, std::string_view id, const GroupPoint& q,
                            const MasterPublicKey& mpk);

struct KeyGenResult {
  std::optional<UserCredential> credential;
  std::string reject_reason;

  explicit operator bool() const { return credential.has_value(); }
};

inline constexpr std::string_view kBindingCheckFailed = "binding check failed";

// Accepts iff Q - U == w*P - Y, then returns x = w + alpha. A partial key
// issued for a different U (a replaced public key) is rejected with
// kBindingCheckFailed. Throws Error(kPrecondition) for an IDB partial key.
KeyGenResult user_key_gen(const SystemParams& params, std::string_view id,
                          const UserSecret& secret, const PartialKey& partial,
                          const MasterPublicKey& mpk);

// Wraps extraction output as an IDB credential. Throws Error(kPrecondition)
// for a CL partial key.
UserCredential credential_from_extract(std::string_view id, const PartialKey& extracted);

// x*P == Y + Q.
bool verify_credential(const SystemParams& params, const UserCredential& cred,
                       const MasterPublicKey& mpk);

}  // namespace certfree
