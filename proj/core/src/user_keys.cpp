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

#include <vector>

#include "certfree/errors.hpp"

namespace certfree {

UserSecret user_setup(const SystemParams& params, EntropySource& rng) {
  const Group& g = params.group();
  UserSecret s;
  s.alpha = g.scalar_random(rng);
  s.u = g.mul_base(s.alpha);
  return s;
}

namespace {

void check_mpk(const SystemParams& params, const MasterPublicKey& mpk) {
  if (mpk.points.size() != params.t()) {
    throw Error(ErrorCode::kParameter, "mpk has " + std::to_string(mpk.points.size()) +
                                           " points, params expect t=" + std::to_string(params.t()));
  }
}

}  // namespace

GroupPoint derive_public_point(const SystemParams& params, std::string_view id,
                               const GroupPoint& q, const MasterPublicKey& mpk) {
  check_mpk(params, mpk);
  const IndexSet indexes = params.hash().h1_indexes(params.group(), id, q);
  std::vector<GroupPoint> selected;
  selected.reserve(indexes.indexes.size());
  for (std::uint32_t j : indexes.indexes) selected.push_back(mpk.at(j));
  return params.group().multi_add(selected);
}

GroupPoint public_key_point(const SystemParams& params, std::string_view id, const GroupPoint& q,
                            const MasterPublicKey& mpk) {
  return params.group().add(derive_public_point(params, id, q, mpk), q);
}

KeyGenResult user_key_gen(const SystemParams& params, std::string_view id,
                          const UserSecret& secret, const PartialKey& partial,
                          const MasterPublicKey& mpk) {
  check_identity(id);
  if (partial.domain != Domain::kCertificateless) {
    throw Error(ErrorCode::kPrecondition, "user_key_gen needs a certificateless partial key");
  }
  const Group& g = params.group();
  const GroupPoint y = derive_public_point(params, id, partial.q, mpk);
  const GroupPoint w_from_q = g.sub(partial.q, secret.u);
  const GroupPoint w_from_key = g.sub(g.mul_base(partial.secret), y);
  KeyGenResult result;
  if (!(w_from_q == w_from_key)) {
    result.reject_reason = std::string(kBindingCheckFailed);
    return result;
  }
  result.credential = UserCredential{std::string(id), partial.q,
                                     g.scalar_add(partial.secret, secret.alpha),
                                     Domain::kCertificateless};
  return result;
}

UserCredential credential_from_extract(std::string_view id, const PartialKey& extracted) {
  check_identity(id);
  if (extracted.domain != Domain::kIdentityBased) {
    throw Error(ErrorCode::kPrecondition, "only an extracted (IDB) key can be wrapped directly");
  }
  return UserCredential{std::string(id), extracted.q, extracted.secret, Domain::kIdentityBased};
}

bool verify_credential(const SystemParams& params, const UserCredential& cred,
                       const MasterPublicKey& mpk) {
  return params.group().mul_base(cred.x) == public_key_point(params, cred.id, cred.q, mpk);
}

}  // namespace certfree
