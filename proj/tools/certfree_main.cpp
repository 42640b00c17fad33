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

// certfree: authority, user and messaging workflows over CFC1 files.

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "certfree/bench.hpp"
#include "certfree/certfree.hpp"

namespace fs = std::filesystem;
using namespace certfree;

namespace {

// Stable exit codes; see docs/cli.md.
enum Exit : int {
  kOk = 0,
  kUsage = 2,
  kBindingRejected = 3,
  kDecryptFailed = 4,
  kBadSignature = 5,
  kBelowThreshold = 6,
  kIo = 7,
  kLibraryBase = 10,
};

int exit_for(ErrorCode code) { return kLibraryBase + static_cast<int>(code); }

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void report(std::string_view code, int exit_code, std::string_view message) {
  std::cerr << "code=" << code << " exit=" << exit_code << " message=" << message << "\n";
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Secrets are created 0600 so they are never briefly world-readable.
void write_file(const std::string& path, BytesView data, bool secret = false) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, secret ? 0600 : 0644);
  if (fd < 0) throw IoError("cannot write " + path);
  if (secret) ::fchmod(fd, 0600);
  std::size_t done = 0;
  while (done < data.size()) {
    const ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n <= 0) {
      ::close(fd);
      throw IoError("short write to " + path);
    }
    done += static_cast<std::size_t>(n);
  }
  if (::close(fd) != 0) throw IoError("cannot close " + path);
}

std::shared_ptr<const Group> profile_group() {
  const char* env = std::getenv("CERTFREE_PROFILE");
  const std::string profile = env ? env : "production";
  if (profile == "production") return make_ristretto255_group();
  if (profile == "mock") return make_mock_group();
  throw Error(ErrorCode::kParameter, "CERTFREE_PROFILE must be production or mock, got " + profile);
}

struct Paths {
  std::string params = "params.cfc";
  std::string mpk = "mpk.cfc";
  std::string msk = "msk.cfc";
};

SystemParams load_params(const Paths& p) { return wire::deserialize_params(read_file(p.params)); }

MasterPublicKey load_mpk(const Paths& p, const SystemParams& params) {
  return wire::deserialize<MasterPublicKey>(read_file(p.mpk), params);
}

KeyAuthority load_authority(const Paths& p) {
  SystemParams params = load_params(p);
  MasterSecretKey msk = wire::deserialize<MasterSecretKey>(read_file(p.msk), params);
  MasterPublicKey mpk = load_mpk(p, params);
  return KeyAuthority(std::move(params), std::move(msk), std::move(mpk));
}

GroupPoint point_from_hex(const SystemParams& params, const std::string& hex) {
  return params.group().decode_point(from_hex(hex));
}

int run(int argc, char** argv) {
  CLI::App app{"certfree: identity-based and certificateless keys over one master key"};
  app.require_subcommand(1);
  Paths paths;
  app.add_option("--params", paths.params, "System parameters file")->capture_default_str();
  app.add_option("--mpk", paths.mpk, "Master public key file")->capture_default_str();
  app.add_option("--msk", paths.msk, "Master secret key file")->capture_default_str();

  SystemEntropy rng;
  std::function<int()> action;

  // setup
  HashConfig setup_config;
  std::string out_dir = ".";
  auto* setup = app.add_subcommand("setup", "Create params, msk and mpk (profile from CERTFREE_PROFILE)");
  setup->add_option("--t", setup_config.t, "Master key size (power of two)")->capture_default_str();
  setup->add_option("--k", setup_config.k, "Indexes per identity")->capture_default_str();
  setup->add_option("--n", setup_config.n_bits, "Sigma length in bits (128 or 256)")->capture_default_str();
  setup->add_option("--out-dir", out_dir, "Directory for params.cfc, msk.cfc, mpk.cfc")->capture_default_str();
  setup->callback([&] {
    action = [&] {
      auto group = profile_group();
      // The mock profile is for test harnesses and has no security to enforce.
      const SecurityPolicy policy = group->profile().id == GroupId::kMockPrime ? SecurityPolicy::disabled()
                                                                               : SecurityPolicy{};
      const KeyAuthority auth = KeyAuthority::setup(group, setup_config, rng, policy);
      fs::create_directories(out_dir);
      const fs::path dir(out_dir);
      write_file((dir / "params.cfc").string(), wire::serialize(auth.params()));
      write_file((dir / "msk.cfc").string(), wire::serialize(auth.params(), auth.msk()), true);
      write_file((dir / "mpk.cfc").string(), wire::serialize(auth.params(), auth.mpk()));
      return int{kOk};
    };
  });

  // extract
  std::string id, out, in, cred_path, q_hex, sig_path, secret_path, partial_path, commitment_hex;
  auto* extract = app.add_subcommand("extract", "Issue an identity-based credential");
  extract->add_option("--id", id, "Identity")->required();
  extract->add_option("--out", out, "Credential file")->required();
  extract->callback([&] {
    action = [&] {
      const KeyAuthority auth = load_authority(paths);
      const UserCredential cred = credential_from_extract(id, auth.extract(id, rng));
      write_file(out, wire::serialize(auth.params(), cred), true);
      return int{kOk};
    };
  });

  auto* user_setup_cmd = app.add_subcommand("user-setup", "Create a certificateless user secret; prints U as hex");
  user_setup_cmd->add_option("--out", out, "User secret file")->required();
  user_setup_cmd->callback([&] {
    action = [&] {
      const SystemParams params = load_params(paths);
      const UserSecret s = user_setup(params, rng);
      write_file(out, wire::serialize(params, s), true);
      std::cout << to_hex(params.group().encode_point(s.u)) << "\n";
      return int{kOk};
    };
  });

  auto* part_key = app.add_subcommand("part-key", "Issue a partial key for a user commitment U");
  part_key->add_option("--id", id, "Identity")->required();
  part_key->add_option("--commitment", commitment_hex, "U as hex, from user-setup")->required();
  part_key->add_option("--out", out, "Partial key file")->required();
  part_key->callback([&] {
    action = [&] {
      const KeyAuthority auth = load_authority(paths);
      const PartialKey key = auth.part_key_gen(id, from_hex(commitment_hex), rng);
      write_file(out, wire::serialize(auth.params(), key), true);
      return int{kOk};
    };
  });

  auto* finalize = app.add_subcommand("finalize", "Check a partial key and form the certificateless credential");
  finalize->add_option("--id", id, "Identity")->required();
  finalize->add_option("--secret", secret_path, "User secret file")->required();
  finalize->add_option("--partial", partial_path, "Partial key file")->required();
  finalize->add_option("--out", out, "Credential file")->required();
  finalize->callback([&] {
    action = [&] {
      const SystemParams params = load_params(paths);
      const MasterPublicKey mpk = load_mpk(paths, params);
      const UserSecret s = wire::deserialize<UserSecret>(read_file(secret_path), params);
      const PartialKey partial = wire::deserialize<PartialKey>(read_file(partial_path), params);
      const KeyGenResult r = user_key_gen(params, id, s, partial, mpk);
      if (!r) {
        report("binding_rejected", kBindingRejected, r.reject_reason);
        return int{kBindingRejected};
      }
      write_file(out, wire::serialize(params, *r.credential), true);
      return int{kOk};
    };
  });

  auto* pubkey = app.add_subcommand("pubkey", "Print a credential's public Q as hex");
  pubkey->add_option("--cred", cred_path, "Credential file")->required();
  pubkey->callback([&] {
    action = [&] {
      const SystemParams params = load_params(paths);
      const UserCredential cred = wire::deserialize<UserCredential>(read_file(cred_path), params);
      std::cout << to_hex(params.group().encode_point(cred.q)) << "\n";
      return int{kOk};
    };
  });

  auto* enc = app.add_subcommand("encrypt", "Encrypt a file to an identity");
  enc->add_option("--to-id", id, "Recipient identity")->required();
  enc->add_option("--to-q", q_hex, "Recipient Q as hex")->required();
  enc->add_option("--in", in, "Plaintext file")->required();
  enc->add_option("--out", out, "Ciphertext file")->required();
  enc->callback([&] {
    action = [&] {
      const SystemParams params = load_params(paths);
      const MasterPublicKey mpk = load_mpk(paths, params);
      const Ciphertext c = encrypt(params, mpk, id, point_from_hex(params, q_hex), read_file(in), rng);
      write_file(out, wire::serialize(params, c));
      return int{kOk};
    };
  });

  auto* dec = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  dec->add_option("--cred", cred_path, "Credential file")->required();
  dec->add_option("--in", in, "Ciphertext file")->required();
  dec->add_option("--out", out, "Plaintext file")->required();
  dec->callback([&] {
    action = [&] {
      const SystemParams params = load_params(paths);
      const UserCredential cred = wire::deserialize<UserCredential>(read_file(cred_path), params);
      const auto m = decrypt(params, cred, wire::deserialize<Ciphertext>(read_file(in), params));
      if (!m) {
        report("decrypt_failed", kDecryptFailed, "ciphertext rejected");
        return int{kDecryptFailed};
      }
      write_file(out, *m, true);
      return int{kOk};
    };
  });

  auto* sign_cmd = app.add_subcommand("sign", "Sign a file");
  sign_cmd->add_option("--cred", cred_path, "Credential file")->required();
  sign_cmd->add_option("--in", in, "Message file")->required();
  sign_cmd->add_option("--out-sig", out, "Signature file")->required();
  sign_cmd->callback([&] {
    action = [&] {
      const SystemParams params = load_params(paths);
      const UserCredential cred = wire::deserialize<UserCredential>(read_file(cred_path), params);
      write_file(out, wire::serialize(params, sign(params, cred, read_file(in), rng)));
      return int{kOk};
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Verify a signature; exit 0 if valid, 5 if not");
  verify_cmd->add_option("--id", id, "Signer identity")->required();
  verify_cmd->add_option("--q", q_hex, "Signer Q as hex")->required();
  verify_cmd->add_option("--in", in, "Message file")->required();
  verify_cmd->add_option("--sig", sig_path, "Signature file")->required();
  verify_cmd->callback([&] {
    action = [&] {
      const SystemParams params = load_params(paths);
      const MasterPublicKey mpk = load_mpk(paths, params);
      const Signature sig = wire::deserialize<Signature>(read_file(sig_path), params);
      if (!verify(params, mpk, id, point_from_hex(params, q_hex), read_file(in), sig)) {
        report("bad_signature", kBadSignature, "signature does not verify");
        return int{kBadSignature};
      }
      return int{kOk};
    };
  });

  std::string eph_path, msg_path, peer_id, peer_msg_path, role_name = "auto";
  auto* kex_init_cmd = app.add_subcommand("kex-init", "Start a key exchange");
  kex_init_cmd->add_option("--cred", cred_path, "Own credential file")->required();
  kex_init_cmd->add_option("--out-msg", msg_path, "Message to send to the peer")->required();
  kex_init_cmd->add_option("--out-eph", eph_path, "Ephemeral secret, consumed by kex-finalize")->required();
  kex_init_cmd->callback([&] {
    action = [&] {
      const SystemParams params = load_params(paths);
      const UserCredential cred = wire::deserialize<UserCredential>(read_file(cred_path), params);
      const KexEphemeral eph = kex_init(params, rng);
      write_file(eph_path, wire::serialize(params, eph), true);
      write_file(msg_path, wire::serialize(params, kex_message(eph, cred)));
      return int{kOk};
    };
  });

  auto* kex_fin = app.add_subcommand("kex-finalize", "Finish a key exchange; writes a 32-byte session key");
  kex_fin->add_option("--cred", cred_path, "Own credential file")->required();
  kex_fin->add_option("--eph", eph_path, "Ephemeral from kex-init (deleted afterwards)")->required();
  kex_fin->add_option("--peer-id", peer_id, "Peer identity")->required();
  kex_fin->add_option("--peer-msg", peer_msg_path, "Peer's kex message file")->required();
  kex_fin->add_option("--role", role_name, "initiator, responder or auto")
      ->check(CLI::IsMember({"initiator", "responder", "auto"}))
      ->capture_default_str();
  kex_fin->add_option("--out", out, "Session key file")->required();
  kex_fin->callback([&] {
    action = [&] {
      const SystemParams params = load_params(paths);
      const MasterPublicKey mpk = load_mpk(paths, params);
      const UserCredential cred = wire::deserialize<UserCredential>(read_file(cred_path), params);
      const KexMessage peer = wire::deserialize<KexMessage>(read_file(peer_msg_path), params);
      KexEphemeral eph = wire::deserialize<KexEphemeral>(read_file(eph_path), params);
      // Remove the ephemeral before using it so it cannot be replayed.
      if (!fs::remove(eph_path)) throw IoError("cannot remove " + eph_path);
      const KexRole role = role_name == "initiator"   ? KexRole::kInitiator
                           : role_name == "responder" ? KexRole::kResponder
                                                      : KexRole::kUnspecified;
      const SessionKey key = kex_finalize(params, mpk, cred, std::move(eph), peer_id, peer, role);
      write_file(out, key.key, true);
      return int{kOk};
    };
  });

  std::uint32_t audit_t = 1024, audit_k = 18;
  double budget_log2 = 0, min_bits = SecurityPolicy{}.min_bits;
  auto* audit = app.add_subcommand("params-audit", "Print the security level of (t, k)");
  audit->add_option("--t", audit_t, "Master key size")->capture_default_str();
  audit->add_option("--k", audit_k, "Indexes per identity")->capture_default_str();
  audit->add_option("--budget-log2", budget_log2, "log2 of the attacker's H1 query budget")->capture_default_str();
  audit->add_option("--min-bits", min_bits, "Exit 6 below this level")->capture_default_str();
  audit->callback([&] {
    action = [&] {
      const double level = security_level(audit_t, audit_k, std::exp2(budget_log2));
      std::printf("%.4f\n", level);
      if (level < min_bits) {
        report("below_threshold", kBelowThreshold,
               "security level " + std::to_string(level) + " < " + std::to_string(min_bits));
        return int{kBelowThreshold};
      }
      return int{kOk};
    };
  });

  bench::BenchOptions bench_options;
  std::string json_path;
  auto* bench_cmd = app.add_subcommand("bench", "Time every operation on the production profile");
  bench_cmd->add_option("--iters", bench_options.iterations, "Iterations per operation (>= 100)")
      ->capture_default_str();
  bench_cmd->add_option("--t", bench_options.config.t, "Master key size")->capture_default_str();
  bench_cmd->add_option("--k", bench_options.config.k, "Indexes per identity")->capture_default_str();
  bench_cmd->add_option("--msg-size", bench_options.message_size, "Message bytes")->capture_default_str();
  bench_cmd->add_option("--json", json_path, "Also write the report as JSON");
  bench_cmd->callback([&] {
    action = [&] {
      const bench::BenchReport report = bench::run_bench(bench_options, make_ristretto255_group());
      std::cout << report.to_text();
      if (!json_path.empty()) {
        const std::string json = report.to_json();
        write_file(json_path, as_bytes(json));
      }
      return int{kOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    report("usage", kUsage, e.what());
    return kUsage;
  }
  return action();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    const int code = exit_for(e.code());
    report(error_code_name(e.code()), code, e.what());
    return code;
  } catch (const IoError& e) {
    report("io", kIo, e.what());
    return kIo;
  } catch (const fs::filesystem_error& e) {
    report("io", kIo, e.what());
    return kIo;
  } catch (const std::exception& e) {
    report("internal", exit_for(ErrorCode::kInternal), e.what());
    return exit_for(ErrorCode::kInternal);
  }
}
