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
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "certfree/bytes.hpp"
#include "certfree/entropy.hpp"

namespace certfree {

inline constexpr std::size_t kMaxEncodedSize = 32;
inline constexpr std::size_t kWideScalarSize = 64;

// Element of Z_q. Stored as the canonical little-endian encoding under the
// group that produced it; bytes beyond the group's scalar size are zero.
class Scalar {
 public:
  using Storage = std::array<std::uint8_t, kMaxEncodedSize>;

  Scalar() = default;
  // `raw` must already be canonical for the owning group. Only group
  // implementations should need this.
  static Scalar from_raw(const Storage& raw) {
    Scalar s;
    s.bytes_ = raw;
    return s;
  }

  const Storage& raw() const { return bytes_; }
  bool is_zero() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Storage bytes_{};
};

// Group element, held in its canonical encoding.
class GroupPoint {
 public:
  using Storage = std::array<std::uint8_t, kMaxEncodedSize>;

  GroupPoint() = default;
  static GroupPoint from_raw(const Storage& raw) {
    GroupPoint p;
    p.bytes_ = raw;
    return p;
  }

  const Storage& raw() const { return bytes_; }

  friend bool operator==(const GroupPoint&, const GroupPoint&) = default;

 private:
  Storage bytes_{};
};

enum class GroupId : std::uint8_t {
  kRistretto255 = 1,
  kMockPrime = 2,
};

struct GroupProfile {
  GroupId id;
  std::string name;
  // Modulus of the mock group; 0 for elliptic-curve groups.
  std::uint32_t mock_modulus = 0;
  std::size_t point_size = 0;
  std::size_t scalar_size = 0;
  std::string order_decimal;
  unsigned order_bits = 0;
};

// Prime-order group written additively, with its scalar field.
//
// The production backend is ristretto255; the mock backend is (Z_q, +) with
// generator 1, small enough that discrete logarithms are found by exhaustive
// search. Every decodable element is a valid group element, including the
// identity.
class Group {
 public:
  virtual ~Group() = default;

  virtual const GroupProfile& profile() const = 0;

  // --- scalars ---
  // Reduces a 512-bit little-endian integer mod q.
  virtual Scalar scalar_from_wide(std::span<const std::uint8_t, kWideScalarSize> wide) const = 0;
  virtual Scalar scalar_from_u64(std::uint64_t v) const = 0;
  virtual Scalar scalar_add(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar scalar_sub(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar scalar_mul(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar scalar_neg(const Scalar& a) const = 0;

  // Uniform scalar: 64 bytes from `rng`, wide-reduced.
  Scalar scalar_random(EntropySource& rng) const;

  // --- points ---
  virtual GroupPoint identity() const = 0;
  virtual GroupPoint generator() const = 0;
  // a * P for the fixed generator P.
  virtual GroupPoint mul_base(const Scalar& a) const = 0;
  virtual GroupPoint mul(const Scalar& a, const GroupPoint& x) const = 0;
  // a * P + b * Y.
  virtual GroupPoint double_mul(const Scalar& a, const Scalar& b, const GroupPoint& y) const = 0;
  virtual GroupPoint add(const GroupPoint& x, const GroupPoint& y) const = 0;
  virtual GroupPoint sub(const GroupPoint& x, const GroupPoint& y) const = 0;

  // Sum of `points` seeded with the first element: n - 1 additions for n
  // points. Empty input yields the identity.
  GroupPoint multi_add(std::span<const GroupPoint> points) const;

  // --- encodings ---
  Bytes encode_point(const GroupPoint& x) const;
  // Throws Error(kFormat) on wrong length, Error(kInvalidPoint) otherwise.
  virtual GroupPoint decode_point(BytesView bytes) const = 0;
  Bytes encode_scalar(const Scalar& a) const;
  // Throws Error(kFormat) on wrong length, Error(kNonCanonicalScalar) if >= q.
  virtual Scalar decode_scalar(BytesView bytes) const = 0;
};

std::shared_ptr<const Group> make_ristretto255_group();
inline constexpr std::uint32_t kDefaultMockModulus = 7919;
// Throws Error(kParameter) unless `modulus` is a prime in [3, 2^31).
std::shared_ptr<const Group> make_mock_group(std::uint32_t modulus = kDefaultMockModulus);
// Rebuilds a group from its serialized identity (params files).
std::shared_ptr<const Group> make_group(GroupId id, std::uint32_t mock_modulus);

struct OpCounts {
  std::uint64_t fixed_base_muls = 0;
  std::uint64_t variable_base_muls = 0;
  std::uint64_t double_muls = 0;
  std::uint64_t additions = 0;  // add and sub

  // Scalar multiplications with a double multiplication counted as two.
  std::uint64_t muls() const { return fixed_base_muls + variable_base_muls + 2 * double_muls; }

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

// Forwards to an inner group and counts group-law operations. Scalar-field
// arithmetic and encodings are not counted. Counters are atomic, so the
// wrapper is usable from several threads, but per-thread attribution is
// the caller's problem.
class CountingGroup final : public Group {
 public:
  explicit CountingGroup(std::shared_ptr<const Group> inner);

  OpCounts counts() const;
  void reset() const;

  const GroupProfile& profile() const override { return inner_->profile(); }
  Scalar scalar_from_wide(std::span<const std::uint8_t, kWideScalarSize> wide) const override;
  Scalar scalar_from_u64(std::uint64_t v) const override;
  Scalar scalar_add(const Scalar& a, const Scalar& b) const override;
  Scalar scalar_sub(const Scalar& a, const Scalar& b) const override;
  Scalar scalar_mul(const Scalar& a, const Scalar& b) const override;
  Scalar scalar_neg(const Scalar& a) const override;
  GroupPoint identity() const override;
  GroupPoint generator() const override;
  GroupPoint mul_base(const Scalar& a) const override;
  GroupPoint mul(const Scalar& a, const GroupPoint& x) const override;
  GroupPoint double_mul(const Scalar& a, const Scalar& b, const GroupPoint& y) const override;
  GroupPoint add(const GroupPoint& x, const GroupPoint& y) const override;
  GroupPoint sub(const GroupPoint& x, const GroupPoint& y) const override;
  GroupPoint decode_point(BytesView bytes) const override;
  Scalar decode_scalar(BytesView bytes) const override;

 private:
  std::shared_ptr<const Group> inner_;
  mutable std::atomic<std::uint64_t> fixed_base_{0};
  mutable std::atomic<std::uint64_t> variable_base_{0};
  mutable std::atomic<std::uint64_t> double_{0};
  mutable std::atomic<std::uint64_t> additions_{0};
};

}  // namespace certfree
