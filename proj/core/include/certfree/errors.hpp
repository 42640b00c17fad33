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

#include <stdexcept>
#include <string>
#include <string_view>

namespace certfree {

// Stable error taxonomy. Decryption failure and key-binding rejection are
// not errors; they are reported as values by the operations themselves.
enum class ErrorCode {
  kFormat,              // wrong length, truncated or trailing bytes
  kInvalidPoint,        // bytes do not encode a group element
  kNonCanonicalScalar,  // scalar encoding >= group order
  kBadMagic,
  kBadVersion,
  kKindMismatch,
  kDigestMismatch,  // artifact was produced under different parameters
  kParameter,       // (t, k, n) or group configuration rejected
  kEntropy,
  kPrecondition,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace certfree
