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

#include "certfree/authority.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "certfree/errors.hpp"
#include "certfree/user_keys.hpp"

namespace certfree {

std::string_view domain_name(Domain d) {
  switch (d) {
    case Domain::kIdentityBased: return "IDB";
    case Domain::kCertificateless: return "CL";
  }
  return "unknown";
}

SystemParams::SystemParams(std::shared_ptr<const Group> group, std::shared_ptr<const HashSuite> hash)
    : group_(std::move(group)), hash_(std::move(hash)) {
  if (!group_ || !hash_) throw Error(ErrorCode::kPrecondition, "SystemParams needs a group and a hash suite");
}

SystemParams SystemParams::create(std::shared_ptr<const Group> group, HashConfig config) {
  return SystemParams(std::move(group), std::make_shared<const HashSuite>(config));
}

SystemParams SystemParams::with_group(std::shared_ptr<const Group> group) const {
  if (!group || group->profile().id != group_->profile().id ||
      group->profile().mock_modulus != group_->profile().mock_modulus) {
    throw Error(ErrorCode::kPrecondition, "with_group requires the same group profile");
  }
  return SystemParams(std::move(group), hash_);
}

SystemParams SystemParams::with_hash(std::shared_ptr<const HashSuite> hash) const {
  if (!hash || !(hash->config() == config())) {
    throw Error(ErrorCode::kPrecondition, "with_hash requires the same hash configuration");
  }
  return SystemParams(group_, std::move(hash));
}

double security_level(std::uint32_t t, std::uint32_t k, double q_h1_budget) {
  if (t < 2 || !std::has_single_bit(t)) {
    throw Error(ErrorCode::kParameter, "t must be a power of two >= 2");
  }
  if (k < 1 || k > t) throw Error(ErrorCode::kParameter, "k must satisfy 1 <= k <= t");
  if (!(q_h1_budget >= 1.0)) throw Error(ErrorCode::kParameter, "H1 query budget must be >= 1");
  const double gamma = static_cast<double>(k) * std::countr_zero(t);
  const double log2_k_factorial = std::lgamma(static_cast<double>(k) + 1.0) / std::numbers::ln2;
  return gamma - log2_k_factorial - std::log2(q_h1_budget);
}

void SecurityPolicy::check(const HashConfig& config) const {
  config.validate();
  if (!enforce) return;
  if (static_cast<std::uint64_t>(config.t) < static_cast<std::uint64_t>(min_t_over_k) * config.k) {
    throw Error(ErrorCode::kParameter, "t=" + std::to_string(config.t) + " must be at least " +
                                           std::to_string(min_t_over_k) + "*k (k=" +
                                           std::to_string(config.k) + ")");
  }
  const double level = security_level(config.t, config.k, h1_query_budget);
  if (level < min_bits) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "security level %.2f bits for (t=%u, k=%u) is below %.2f",
                  level, config.t, config.k, min_bits);
    throw Error(ErrorCode::kParameter, buf);
  }
}

void check_identity(std::string_view id) {
  if (id.empty()) throw Error(ErrorCode::kPrecondition, "identity must not be empty");
  if (id.size() > 0xffff) throw Error(ErrorCode::kPrecondition, "identity longer than 65535 bytes");
}

KeyAuthority::KeyAuthority(SystemParams params, MasterSecretKey msk, MasterPublicKey mpk)
    : params_(std::move(params)), msk_(std::move(msk)), mpk_(std::move(mpk)) {
  if (msk_.v.size() != params_.t() || mpk_.points.size() != params_.t()) {
    throw Error(ErrorCode::kParameter, "master key vectors must have exactly t entries");
  }
}

KeyAuthority KeyAuthority::setup(std::shared_ptr<const Group> group, HashConfig config,
                                 EntropySource& rng, const SecurityPolicy& policy) {
  policy.check(config);
  return setup(SystemParams::create(std::move(group), config), rng, policy);
}

KeyAuthority KeyAuthority::setup(SystemParams params, EntropySource& rng,
                                 const SecurityPolicy& policy) {
  policy.check(params.config());
  const Group& g = params.group();
  MasterSecretKey msk;
  MasterPublicKey mpk;
  msk.v.reserve(params.t());
  mpk.points.reserve(params.t());
  for (std::uint32_t i = 0; i < params.t(); ++i) {
    msk.v.push_back(g.scalar_random(rng));
    mpk.points.push_back(g.mul_base(msk.v.back()));
  }
  return KeyAuthority(std::move(params), std::move(msk), std::move(mpk));
}

Scalar KeyAuthority::index_sum(const IndexSet& indexes) const {
  const Group& g = params_.group();
  Scalar y;
  for (std::uint32_t j : indexes.indexes) y = g.scalar_add(y, msk_.v.at(j - 1));
  return y;
}

PartialKey KeyAuthority::extract(std::string_view id, EntropySource& rng) const {
  check_identity(id);
  const Group& g = params_.group();
  const Scalar beta = g.scalar_random(rng);
  PartialKey key;
  key.domain = Domain::kIdentityBased;
  key.q = g.mul_base(beta);
  const IndexSet indexes = params_.hash().h1_indexes(g, id, key.q);
  key.secret = g.scalar_add(index_sum(indexes), beta);
  if (!(g.mul_base(key.secret) == public_key_point(params_, id, key.q, mpk_))) {
    throw Error(ErrorCode::kInternal, "extracted key fails x*P == Y + Q");
  }
  return key;
}

PartialKey KeyAuthority::part_key_gen(std::string_view id, const GroupPoint& u,
                                      EntropySource& rng) const {
  check_identity(id);
  const Group& g = params_.group();
  const Scalar beta = g.scalar_random(rng);
  PartialKey key;
  key.domain = Domain::kCertificateless;
  key.q = g.add(u, g.mul_base(beta));
  const IndexSet indexes = params_.hash().h1_indexes(g, id, key.q);
  key.secret = g.scalar_add(index_sum(indexes), beta);
  return key;
}

PartialKey KeyAuthority::part_key_gen(std::string_view id, BytesView u_encoding,
                                      EntropySource& rng) const {
  return part_key_gen(id, params_.group().decode_point(u_encoding), rng);
}

bool KeyAuthority::consistent() const {
  const Group& g = params_.group();
  for (std::size_t i = 0; i < msk_.v.size(); ++i) {
    if (!(g.mul_base(msk_.v[i]) == mpk_.points[i])) return false;
  }
  return true;
}

}  // namespace certfree
