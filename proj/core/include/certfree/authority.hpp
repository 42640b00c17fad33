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

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "certfree/entropy.hpp"
#include "certfree/group.hpp"
#include "certfree/hash_suite.hpp"

namespace certfree {

enum class Domain : std::uint8_t {
  kIdentityBased = 1,
  kCertificateless = 2,
};

std::string_view domain_name(Domain d);

// Group, oracles and (t, k, n): everything both the authority and the users
// must agree on.
class SystemParams {
 public:
  SystemParams(std::shared_ptr<const Group> group, std::shared_ptr<const HashSuite> hash);

  // Default SHAKE256 oracles. Throws Error(kParameter) on a malformed config.
  static SystemParams create(std::shared_ptr<const Group> group, HashConfig config);

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  const HashSuite& hash() const { return *hash_; }
  const std::shared_ptr<const HashSuite>& hash_ptr() const { return hash_; }
  const HashConfig& config() const { return hash_->config(); }
  std::uint32_t t() const { return config().t; }
  std::uint32_t k() const { return config().k; }
  unsigned n_bits() const { return config().n_bits; }

  // Same parameters over a different implementation of the same group, e.g.
  // a CountingGroup wrapper.
  SystemParams with_group(std::shared_ptr<const Group> group) const;
  SystemParams with_hash(std::shared_ptr<const HashSuite> hash) const;

 private:
  std::shared_ptr<const Group> group_;
  std::shared_ptr<const HashSuite> hash_;
};

struct MasterSecretKey {
  std::vector<Scalar> v;
};

struct MasterPublicKey {
  std::vector<GroupPoint> points;

  // 1-based, matching IndexSet.
  const GroupPoint& at(std::uint32_t index) const { return points.at(index - 1); }
};

// Output of extraction (IDB, secret = x) or partial-key generation
// (CL, secret = w).
struct PartialKey {
  Domain domain = Domain::kIdentityBased;
  Scalar secret;
  GroupPoint q;

  friend bool operator==(const PartialKey&, const PartialKey&) = default;
};

// Bits of security against an index-collision forgery:
//   k*log2(t) - log2(k!) - log2(q_h1_budget).
// log2(k!) is evaluated with lgamma, so large k does not overflow.
// Throws Error(kParameter) unless t is a power of two, 1 <= k <= t and
// q_h1_budget >= 1.
double security_level(std::uint32_t t, std::uint32_t k, double q_h1_budget = 1.0);

// Acceptance rule applied by setup on top of HashConfig::validate().
struct SecurityPolicy {
  double min_bits = 127.0;
  double h1_query_budget = 1.0;
  std::uint32_t min_t_over_k = 4;
  bool enforce = true;

  static SecurityPolicy disabled() {
    SecurityPolicy p;
    p.enforce = false;
    return p;
  }

  // Throws Error(kParameter) naming the computed level when rejected.
  void check(const HashConfig& config) const;
};

// PKG / KGC. Holds the master key pair; extraction and partial-key
// generation are const and safe to call concurrently with distinct entropy
// sources.
class KeyAuthority {
 public:
  KeyAuthority(SystemParams params, MasterSecretKey msk, MasterPublicKey mpk);

  static KeyAuthority setup(std::shared_ptr<const Group> group, HashConfig config,
                            EntropySource& rng, const SecurityPolicy& policy = {});
  static KeyAuthority setup(SystemParams params, EntropySource& rng,
                            const SecurityPolicy& policy = {});

  const SystemParams& params() const { return params_; }
  const MasterSecretKey& msk() const { return msk_; }
  const MasterPublicKey& mpk() const { return mpk_; }

  // IDB private key: beta random, Q = beta*P, x = sum(v_j) + beta over
  // H1(id, Q). The result is checked against mpk before it is returned.
  PartialKey extract(std::string_view id, EntropySource& rng) const;

  // CL partial key for the user commitment U: Q = U + beta*P,
  // w = sum(v_j) + beta over H1(id, Q).
  PartialKey part_key_gen(std::string_view id, const GroupPoint& u, EntropySource& rng) const;
  // Same, decoding U first (Error(kFormat) / Error(kInvalidPoint)).
  PartialKey part_key_gen(std::string_view id, BytesView u_encoding, EntropySource& rng) const;

  // V_i == v_i * P for every i.
  bool consistent() const;

 private:
  Scalar index_sum(const IndexSet& indexes) const;

  SystemParams params_;
  MasterSecretKey msk_;
  MasterPublicKey mpk_;
};

// Throws Error(kPrecondition) for an empty identity or one longer than 65535
// bytes (the wire format's u16 length prefix).
void check_identity(std::string_view id);

}  // namespace certfree
