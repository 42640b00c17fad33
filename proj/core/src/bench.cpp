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

#include "certfree/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "certfree/errors.hpp"
#include "certfree/wire.hpp"

namespace certfree::bench {

namespace {

struct Fixture {
  SystemParams params;
  KeyAuthority authority;
  UserCredential alice;  // IDB
  UserCredential bob;    // CL
  UserSecret bob_secret;
  PartialKey bob_partial;
  Bytes message;
  Ciphertext to_alice;
  Signature by_alice;
  KexMessage alice_msg;
  KexMessage bob_msg;
};

Fixture make_fixture(const SystemParams& params, const KeyAuthority& base, const BenchOptions& options) {
  SeededEntropy rng(options.seed ^ 0x5eedULL);
  KeyAuthority authority(params, base.msk(), base.mpk());
  Fixture f{params, authority, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  f.alice = credential_from_extract("alice@bench", authority.extract("alice@bench", rng));
  f.bob_secret = user_setup(params, rng);
  f.bob_partial = authority.part_key_gen("bob@bench", f.bob_secret.u, rng);
  f.bob = *user_key_gen(params, "bob@bench", f.bob_secret, f.bob_partial, authority.mpk()).credential;
  f.message.resize(options.message_size);
  rng.fill(f.message);
  f.to_alice = encrypt(params, authority.mpk(), f.alice.id, f.alice.q, f.message, rng);
  f.by_alice = sign(params, f.alice, f.message, rng);
  f.alice_msg = kex_message(kex_init(params, rng), f.alice);
  f.bob_msg = kex_message(kex_init(params, rng), f.bob);
  return f;
}

struct OpSpec {
  std::string name;
  std::size_t bytes;
  std::function<void(const Fixture&, EntropySource&)> run;
};

BenchRow measure(const OpSpec& op, const Fixture& timed, const Fixture& counted,
                 const CountingGroup& counter, std::size_t iterations, EntropySource& rng) {
  std::vector<double> samples;
  samples.reserve(iterations);
  for (std::size_t i = 0; i < iterations; ++i) {
    const auto start = std::chrono::steady_clock::now();
    op.run(timed, rng);
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
  }

  BenchRow row;
  row.op = op.name;
  row.bytes = op.bytes;
  row.mean_us = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
  double ss = 0;
  for (double s : samples) ss += (s - row.mean_us) * (s - row.mean_us);
  row.stddev_us = samples.size() > 1 ? std::sqrt(ss / static_cast<double>(samples.size() - 1)) : 0.0;
  row.cv = row.mean_us > 0 ? row.stddev_us / row.mean_us : 0.0;
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  row.median_us = samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);

  counter.reset();
  op.run(counted, rng);
  const OpCounts counts = counter.counts();
  row.muls = counts.muls();
  row.adds = counts.additions;
  return row;
}

}  // namespace

const BenchRow* BenchReport::find(const std::string& op) const {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const BenchRow& r) { return r.op == op; });
  return it == rows.end() ? nullptr : &*it;
}

BenchReport run_bench(const BenchOptions& options, std::shared_ptr<const Group> group) {
  if (!group || group->profile().id != GroupId::kRistretto255) {
    throw Error(ErrorCode::kPrecondition, "benchmarks run on the production group only");
  }
  if (options.iterations < kMinIterations) {
    throw Error(ErrorCode::kPrecondition,
                "benchmarks need at least " + std::to_string(kMinIterations) + " iterations");
  }

  const SystemParams params = SystemParams::create(group, options.config);
  auto counter = std::make_shared<const CountingGroup>(group);
  const SystemParams counted_params = params.with_group(counter);
  SeededEntropy rng(options.seed);
  const KeyAuthority base = KeyAuthority::setup(params, rng, SecurityPolicy::disabled());
  const Fixture timed = make_fixture(params, base, options);
  const Fixture counted = make_fixture(counted_params, base, options);
  const wire::SizeReport sizes = wire::size_report(params);

  const std::vector<OpSpec> ops = {
      {"setup", sizes.mpk,
       [](const Fixture& f, EntropySource& r) {
         (void)KeyAuthority::setup(f.params, r, SecurityPolicy::disabled());
       }},
      {"extract", sizes.partial_key,
       [](const Fixture& f, EntropySource& r) { (void)f.authority.extract("carol@bench", r); }},
      {"part_key_gen", sizes.partial_key,
       [](const Fixture& f, EntropySource& r) {
         (void)f.authority.part_key_gen("bob@bench", f.bob_secret.u, r);
       }},
      {"user_key_gen", sizes.credential_core,
       [](const Fixture& f, EntropySource&) {
         (void)user_key_gen(f.params, "bob@bench", f.bob_secret, f.bob_partial, f.authority.mpk());
       }},
      {"encrypt", sizes.ciphertext(options.message_size),
       [](const Fixture& f, EntropySource& r) {
         (void)encrypt(f.params, f.authority.mpk(), f.alice.id, f.alice.q, f.message, r);
       }},
      {"decrypt", sizes.ciphertext(options.message_size),
       [](const Fixture& f, EntropySource&) { (void)decrypt(f.params, f.alice, f.to_alice); }},
      {"sign", sizes.signature,
       [](const Fixture& f, EntropySource& r) { (void)sign(f.params, f.alice, f.message, r); }},
      {"verify", sizes.signature,
       [](const Fixture& f, EntropySource&) {
         (void)verify(f.params, f.authority.mpk(), f.alice.id, f.alice.q, f.message, f.by_alice);
       }},
      {"kex_initiator", sizes.kex_message,
       [](const Fixture& f, EntropySource& r) {
         (void)kex_finalize(f.params, f.authority.mpk(), f.alice, kex_init(f.params, r), f.bob.id,
                            f.bob_msg, KexRole::kInitiator);
       }},
      {"kex_responder", sizes.kex_message,
       [](const Fixture& f, EntropySource& r) {
         (void)kex_finalize(f.params, f.authority.mpk(), f.bob, kex_init(f.params, r), f.alice.id,
                            f.alice_msg, KexRole::kResponder);
       }},
  };

  BenchReport report;
  report.group = group->profile().name;
  report.config = options.config;
  report.iterations = options.iterations;
  for (const OpSpec& op : ops) {
    report.rows.push_back(measure(op, timed, counted, *counter, options.iterations, rng));
    const BenchRow& row = report.rows.back();
    if (row.cv > kNoisyCv) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%s: coefficient of variation %.0f%% exceeds %.0f%%",
                    row.op.c_str(), 100 * row.cv, 100 * kNoisyCv);
      report.warnings.emplace_back(buf);
    }
  }
  return report;
}

std::string BenchReport::to_text() const {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "group=%s t=%u k=%u n=%u iterations=%zu\n", group.c_str(),
                config.t, config.k, config.n_bits, iterations);
  out << line;
  std::snprintf(line, sizeof line, "%-14s %12s %12s %7s %6s %6s %8s\n", "op", "median_us",
                "mean_us", "cv", "muls", "adds", "bytes");
  out << line;
  for (const BenchRow& r : rows) {
    std::snprintf(line, sizeof line, "%-14s %12.2f %12.2f %6.1f%% %6llu %6llu %8zu\n",
                  r.op.c_str(), r.median_us, r.mean_us, 100 * r.cv,
                  static_cast<unsigned long long>(r.muls), static_cast<unsigned long long>(r.adds),
                  r.bytes);
    out << line;
  }
  for (const std::string& w : warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::string BenchReport::to_json() const {
  nlohmann::json j;
  j["group"] = group;
  j["t"] = config.t;
  j["k"] = config.k;
  j["n"] = config.n_bits;
  j["iterations"] = iterations;
  j["count_convention"] = "muls = fixed-base + variable-base + 2 * double-scalar; adds = add + sub";
  j["rows"] = nlohmann::json::array();
  for (const BenchRow& r : rows) {
    j["rows"].push_back({{"op", r.op},
                         {"median_us", r.median_us},
                         {"mean_us", r.mean_us},
                         {"stddev_us", r.stddev_us},
                         {"cv", r.cv},
                         {"muls", r.muls},
                         {"adds", r.adds},
                         {"bytes", r.bytes}});
  }
  j["warnings"] = warnings;
  return j.dump(2);
}

}  // namespace certfree::bench
