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

#include "certfree/group.hpp"

#include <sodium.h>

#include <algorithm>

#include "certfree/errors.hpp"

namespace certfree {

bool Scalar::is_zero() const {
  return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t b) { return b == 0; });
}

Scalar Group::scalar_random(EntropySource& rng) const {
  std::array<std::uint8_t, kWideScalarSize> wide{};
  rng.fill(wide);
  Scalar s = scalar_from_wide(wide);
  sodium_memzero(wide.data(), wide.size());
  return s;
}

GroupPoint Group::multi_add(std::span<const GroupPoint> points) const {
  if (points.empty()) return identity();
  GroupPoint acc = points.front();
  for (const GroupPoint& p : points.subspan(1)) acc = add(acc, p);
  return acc;
}

Bytes Group::encode_point(const GroupPoint& x) const {
  const auto& raw = x.raw();
  return Bytes(raw.begin(), raw.begin() + profile().point_size);
}

Bytes Group::encode_scalar(const Scalar& a) const {
  const auto& raw = a.raw();
  return Bytes(raw.begin(), raw.begin() + profile().scalar_size);
}

namespace {

void check_length(BytesView bytes, std::size_t expected, const char* what) {
  if (bytes.size() != expected) {
    throw Error(ErrorCode::kFormat, std::string(what) + " encoding must be " +
                                        std::to_string(expected) + " bytes, got " +
                                        std::to_string(bytes.size()));
  }
}

void ensure_sodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw Error(ErrorCode::kInternal, "libsodium initialization failed");
}

// ristretto255 via libsodium. Inputs are always valid encodings (GroupPoint
// is only produced by this class or by decode_point), so a -1 return from
// libsodium's scalarmult can only mean an identity result, which it writes as
// all-zero bytes.
class Ristretto255 final : public Group {
 public:
  Ristretto255() {
    ensure_sodium();
    profile_.id = GroupId::kRistretto255;
    profile_.name = "ristretto255";
    profile_.point_size = crypto_core_ristretto255_BYTES;
    profile_.scalar_size = crypto_core_ristretto255_SCALARBYTES;
    profile_.order_decimal =
        "7237005577332262213973186563042994240857116359379907606001950938285454250989";
    profile_.order_bits = 253;
    Scalar::Storage one{};
    one[0] = 1;
    crypto_scalarmult_ristretto255_base(generator_.data(), one.data());
  }

  const GroupProfile& profile() const override { return profile_; }

  Scalar scalar_from_wide(std::span<const std::uint8_t, kWideScalarSize> wide) const override {
    Scalar::Storage out{};
    crypto_core_ristretto255_scalar_reduce(out.data(), wide.data());
    return Scalar::from_raw(out);
  }

  Scalar scalar_from_u64(std::uint64_t v) const override {
    Scalar::Storage out{};
    for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
    return Scalar::from_raw(out);
  }

  Scalar scalar_add(const Scalar& a, const Scalar& b) const override {
    Scalar::Storage out{};
    crypto_core_ristretto255_scalar_add(out.data(), a.raw().data(), b.raw().data());
    return Scalar::from_raw(out);
  }

  Scalar scalar_sub(const Scalar& a, const Scalar& b) const override {
    Scalar::Storage out{};
    crypto_core_ristretto255_scalar_sub(out.data(), a.raw().data(), b.raw().data());
    return Scalar::from_raw(out);
  }

  Scalar scalar_mul(const Scalar& a, const Scalar& b) const override {
    Scalar::Storage out{};
    crypto_core_ristretto255_scalar_mul(out.data(), a.raw().data(), b.raw().data());
    return Scalar::from_raw(out);
  }

  Scalar scalar_neg(const Scalar& a) const override {
    Scalar::Storage out{};
    crypto_core_ristretto255_scalar_negate(out.data(), a.raw().data());
    return Scalar::from_raw(out);
  }

  GroupPoint identity() const override { return GroupPoint{}; }
  GroupPoint generator() const override { return GroupPoint::from_raw(generator_); }

  GroupPoint mul_base(const Scalar& a) const override {
    GroupPoint::Storage out{};
    if (crypto_scalarmult_ristretto255_base(out.data(), a.raw().data()) != 0) return identity();
    return GroupPoint::from_raw(out);
  }

  GroupPoint mul(const Scalar& a, const GroupPoint& x) const override {
    GroupPoint::Storage out{};
    if (crypto_scalarmult_ristretto255(out.data(), a.raw().data(), x.raw().data()) != 0) {
      return identity();
    }
    return GroupPoint::from_raw(out);
  }

  GroupPoint double_mul(const Scalar& a, const Scalar& b, const GroupPoint& y) const override {
    return add(mul_base(a), mul(b, y));
  }

  GroupPoint add(const GroupPoint& x, const GroupPoint& y) const override {
    GroupPoint::Storage out{};
    if (crypto_core_ristretto255_add(out.data(), x.raw().data(), y.raw().data()) != 0) {
      throw Error(ErrorCode::kInvalidPoint, "ristretto255 addition on invalid operand");
    }
    return GroupPoint::from_raw(out);
  }

  GroupPoint sub(const GroupPoint& x, const GroupPoint& y) const override {
    GroupPoint::Storage out{};
    if (crypto_core_ristretto255_sub(out.data(), x.raw().data(), y.raw().data()) != 0) {
      throw Error(ErrorCode::kInvalidPoint, "ristretto255 subtraction on invalid operand");
    }
    return GroupPoint::from_raw(out);
  }

  GroupPoint decode_point(BytesView bytes) const override {
    check_length(bytes, profile_.point_size, "point");
    if (crypto_core_ristretto255_is_valid_point(bytes.data()) != 1) {
      throw Error(ErrorCode::kInvalidPoint, "bytes are not a canonical ristretto255 element");
    }
    GroupPoint::Storage raw{};
    std::copy(bytes.begin(), bytes.end(), raw.begin());
    return GroupPoint::from_raw(raw);
  }

  Scalar decode_scalar(BytesView bytes) const override {
    check_length(bytes, profile_.scalar_size, "scalar");
    std::array<std::uint8_t, kWideScalarSize> wide{};
    std::copy(bytes.begin(), bytes.end(), wide.begin());
    Scalar reduced = scalar_from_wide(wide);
    if (!std::equal(bytes.begin(), bytes.end(), reduced.raw().begin())) {
      throw Error(ErrorCode::kNonCanonicalScalar, "scalar is not reduced mod the group order");
    }
    return reduced;
  }

 private:
  GroupProfile profile_;
  GroupPoint::Storage generator_{};
};

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// (Z_q, +) with generator 1. Points and scalars are both integers mod q,
// encoded little-endian in the fewest bytes that hold q - 1.
class MockPrimeGroup final : public Group {
 public:
  explicit MockPrimeGroup(std::uint32_t q) : q_(q) {
    if (q < 3 || q >= (1u << 31) || !is_prime(q)) {
      throw Error(ErrorCode::kParameter,
                  "mock group modulus must be a prime in [3, 2^31): " + std::to_string(q));
    }
    std::size_t size = 0;
    for (std::uint32_t v = q - 1; v != 0; v >>= 8) ++size;
    unsigned bits = 0;
    for (std::uint32_t v = q; v != 0; v >>= 1) ++bits;
    profile_.id = GroupId::kMockPrime;
    profile_.name = "mock-" + std::to_string(q);
    profile_.mock_modulus = q;
    profile_.point_size = size;
    profile_.scalar_size = size;
    profile_.order_decimal = std::to_string(q);
    profile_.order_bits = bits;
  }

  const GroupProfile& profile() const override { return profile_; }

  Scalar scalar_from_wide(std::span<const std::uint8_t, kWideScalarSize> wide) const override {
    std::uint64_t acc = 0;
    for (std::size_t i = wide.size(); i-- > 0;) acc = (acc * 256 + wide[i]) % q_;
    return Scalar::from_raw(store(acc));
  }

  Scalar scalar_from_u64(std::uint64_t v) const override { return Scalar::from_raw(store(v % q_)); }

  Scalar scalar_add(const Scalar& a, const Scalar& b) const override {
    return Scalar::from_raw(store((load(a.raw()) + load(b.raw())) % q_));
  }
  Scalar scalar_sub(const Scalar& a, const Scalar& b) const override {
    return Scalar::from_raw(store((load(a.raw()) + q_ - load(b.raw())) % q_));
  }
  Scalar scalar_mul(const Scalar& a, const Scalar& b) const override {
    return Scalar::from_raw(store((load(a.raw()) * load(b.raw())) % q_));
  }
  Scalar scalar_neg(const Scalar& a) const override {
    return Scalar::from_raw(store((q_ - load(a.raw())) % q_));
  }

  GroupPoint identity() const override { return GroupPoint{}; }
  GroupPoint generator() const override { return GroupPoint::from_raw(store(1)); }
  GroupPoint mul_base(const Scalar& a) const override { return GroupPoint::from_raw(a.raw()); }
  GroupPoint mul(const Scalar& a, const GroupPoint& x) const override {
    return GroupPoint::from_raw(store((load(a.raw()) * load(x.raw())) % q_));
  }
  GroupPoint double_mul(const Scalar& a, const Scalar& b, const GroupPoint& y) const override {
    return GroupPoint::from_raw(store((load(a.raw()) + load(b.raw()) * load(y.raw())) % q_));
  }
  GroupPoint add(const GroupPoint& x, const GroupPoint& y) const override {
    return GroupPoint::from_raw(store((load(x.raw()) + load(y.raw())) % q_));
  }
  GroupPoint sub(const GroupPoint& x, const GroupPoint& y) const override {
    return GroupPoint::from_raw(store((load(x.raw()) + q_ - load(y.raw())) % q_));
  }

  GroupPoint decode_point(BytesView bytes) const override {
    check_length(bytes, profile_.point_size, "point");
    std::uint64_t v = load_bytes(bytes);
    if (v >= q_) throw Error(ErrorCode::kInvalidPoint, "mock point out of range");
    return GroupPoint::from_raw(store(v));
  }

  Scalar decode_scalar(BytesView bytes) const override {
    check_length(bytes, profile_.scalar_size, "scalar");
    std::uint64_t v = load_bytes(bytes);
    if (v >= q_) throw Error(ErrorCode::kNonCanonicalScalar, "mock scalar out of range");
    return Scalar::from_raw(store(v));
  }

 private:
  static std::array<std::uint8_t, kMaxEncodedSize> store(std::uint64_t v) {
    std::array<std::uint8_t, kMaxEncodedSize> out{};
    for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
    return out;
  }
  static std::uint64_t load(const std::array<std::uint8_t, kMaxEncodedSize>& raw) {
    return load_bytes(BytesView(raw.data(), 8));
  }
  static std::uint64_t load_bytes(BytesView bytes) {
    std::uint64_t v = 0;
    for (std::size_t i = bytes.size(); i-- > 0;) v = (v << 8) | bytes[i];
    return v;
  }

  std::uint64_t q_;
  GroupProfile profile_;
};

}  // namespace

std::shared_ptr<const Group> make_ristretto255_group() {
  static const auto group = std::make_shared<const Ristretto255>();
  return group;
}

std::shared_ptr<const Group> make_mock_group(std::uint32_t modulus) {
  return std::make_shared<const MockPrimeGroup>(modulus);
}

std::shared_ptr<const Group> make_group(GroupId id, std::uint32_t mock_modulus) {
  switch (id) {
    case GroupId::kRistretto255:
      return make_ristretto255_group();
    case GroupId::kMockPrime:
      return make_mock_group(mock_modulus);
  }
  throw Error(ErrorCode::kParameter,
              "unknown group id " + std::to_string(static_cast<int>(id)));
}

// --- CountingGroup ---

CountingGroup::CountingGroup(std::shared_ptr<const Group> inner) : inner_(std::move(inner)) {}

OpCounts CountingGroup::counts() const {
  return OpCounts{fixed_base_.load(), variable_base_.load(), double_.load(), additions_.load()};
}

void CountingGroup::reset() const {
  fixed_base_ = 0;
  variable_base_ = 0;
  double_ = 0;
  additions_ = 0;
}

Scalar CountingGroup::scalar_from_wide(std::span<const std::uint8_t, kWideScalarSize> wide) const {
  return inner_->scalar_from_wide(wide);
}
Scalar CountingGroup::scalar_from_u64(std::uint64_t v) const { return inner_->scalar_from_u64(v); }
Scalar CountingGroup::scalar_add(const Scalar& a, const Scalar& b) const {
  return inner_->scalar_add(a, b);
}
Scalar CountingGroup::scalar_sub(const Scalar& a, const Scalar& b) const {
  return inner_->scalar_sub(a, b);
}
Scalar CountingGroup::scalar_mul(const Scalar& a, const Scalar& b) const {
  return inner_->scalar_mul(a, b);
}
Scalar CountingGroup::scalar_neg(const Scalar& a) const { return inner_->scalar_neg(a); }

GroupPoint CountingGroup::identity() const { return inner_->identity(); }
GroupPoint CountingGroup::generator() const { return inner_->generator(); }

GroupPoint CountingGroup::mul_base(const Scalar& a) const {
  ++fixed_base_;
  return inner_->mul_base(a);
}
GroupPoint CountingGroup::mul(const Scalar& a, const GroupPoint& x) const {
  ++variable_base_;
  return inner_->mul(a, x);
}
GroupPoint CountingGroup::double_mul(const Scalar& a, const Scalar& b, const GroupPoint& y) const {
  ++double_;
  return inner_->double_mul(a, b, y);
}
GroupPoint CountingGroup::add(const GroupPoint& x, const GroupPoint& y) const {
  ++additions_;
  return inner_->add(x, y);
}
GroupPoint CountingGroup::sub(const GroupPoint& x, const GroupPoint& y) const {
  ++additions_;
  return inner_->sub(x, y);
}
GroupPoint CountingGroup::decode_point(BytesView bytes) const { return inner_->decode_point(bytes); }
Scalar CountingGroup::decode_scalar(BytesView bytes) const { return inner_->decode_scalar(bytes); }

}  // namespace certfree
