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

// Replays full protocol flows on the mock group (Z_q, +) with plain big
// integers and raw SHAKE256. Points are integers mod q with generator 1, so
// a*P is just a. Shares no code with the library.

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "support/bigint_oracle.hpp"

namespace certfree::oracle {

class MockOracle {
 public:
  MockOracle(std::uint64_t q, std::uint32_t t, std::uint32_t k, std::uint32_t n_bits)
      : q_(q), t_(t), k_(k), sigma_size_(n_bits / 8) {
    for (std::uint64_t v = q - 1; v != 0; v >>= 8) ++enc_size_;
  }

  // Random draws in the order the flow consumes them.
  void feed(std::deque<ByteVec> draws) { draws_ = std::move(draws); }

  std::uint64_t random_scalar() { return reduce(next(64)); }
  ByteVec random_bytes(std::size_t n) { return next(n); }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q_ - b) % q_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(BigInt(a) * b % q_);
  }

  ByteVec enc(std::uint64_t v) const { return to_le(BigInt(v), enc_size_); }

  std::vector<std::uint32_t> h1(const std::string& id, std::uint64_t q_point) const {
    ByteVec in;
    put(in, "CFC-H1");
    put_le(in, t_, 4);
    put_le(in, k_, 4);
    put_le(in, id.size(), 8);
    put(in, id);
    put(in, enc(q_point));
    unsigned width = 0;
    while ((1u << width) < t_) ++width;
    const ByteVec stream = shake256(in, (width * k_ + 7) / 8);
    // Read the stream as one big-endian integer and slice off the top bits.
    BigInt all = 0;
    for (std::uint8_t b : stream) all = all << 8 | b;
    const std::size_t spare = stream.size() * 8 - width * k_;
    all >>= spare;
    std::vector<std::uint32_t> out(k_);
    for (std::uint32_t i = k_; i-- > 0;) {
      out[i] = static_cast<std::uint32_t>(all & (t_ - 1)) + 1;
      all >>= width;
    }
    return out;
  }

  std::uint64_t y(const std::vector<std::uint64_t>& mpk, const std::string& id,
                  std::uint64_t q_point) const {
    std::uint64_t sum = 0;
    for (std::uint32_t j : h1(id, q_point)) sum = add(sum, mpk[j - 1]);
    return sum;
  }

  std::uint64_t h2(const ByteVec& sigma, const ByteVec& m) const {
    ByteVec in;
    put(in, "CFC-H2");
    put(in, sigma);
    put_le(in, m.size(), 8);
    put(in, m);
    return reduce(shake256(in, 64));
  }

  ByteVec h3(std::uint64_t point) const {
    ByteVec in;
    put(in, "CFC-H3");
    put(in, enc(point));
    return shake256(in, sigma_size_);
  }

  ByteVec h4(const ByteVec& sigma, std::size_t size) const {
    ByteVec in;
    put(in, "CFC-H4");
    put(in, sigma);
    return shake256(in, size);
  }

  std::uint64_t h5(const ByteVec& m, std::uint64_t r_point) const {
    ByteVec in;
    put(in, "CFC-H5");
    put_le(in, m.size(), 8);
    put(in, m);
    put(in, enc(r_point));
    return reduce(shake256(in, 64));
  }

  ByteVec kdf(std::uint64_t shared, const ByteVec& transcript) const {
    ByteVec th_in;
    put(th_in, "CFC-TRANSCRIPT");
    put_le(th_in, transcript.size(), 8);
    put(th_in, transcript);
    ByteVec in;
    put(in, "CFC-KDF");
    put(in, enc(shared));
    put(in, shake256(th_in, 64));
    return shake256(in, 32);
  }

  ByteVec party_record(const std::string& id, std::uint64_t m, std::uint64_t q_point) const {
    ByteVec out;
    put_le(out, id.size(), 2);
    put(out, id);
    put(out, enc(m));
    put(out, enc(q_point));
    return out;
  }

  std::size_t sigma_size() const { return sigma_size_; }

 private:
  ByteVec next(std::size_t n) {
    if (draws_.empty() || draws_.front().size() != n) throw std::runtime_error("oracle draw mismatch");
    ByteVec out = std::move(draws_.front());
    draws_.pop_front();
    return out;
  }
  std::uint64_t reduce(const ByteVec& wide) const {
    return static_cast<std::uint64_t>(from_le(wide) % q_);
  }

  std::uint64_t q_;
  std::uint32_t t_;
  std::uint32_t k_;
  std::size_t sigma_size_;
  std::size_t enc_size_ = 0;
  std::deque<ByteVec> draws_;
};

}  // namespace certfree::oracle
