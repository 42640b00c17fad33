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

#include "certfree/errors.hpp"

namespace certfree {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFormat: return "format";
    case ErrorCode::kInvalidPoint: return "invalid_point";
    case ErrorCode::kNonCanonicalScalar: return "non_canonical_scalar";
    case ErrorCode::kBadMagic: return "bad_magic";
    case ErrorCode::kBadVersion: return "bad_version";
    case ErrorCode::kKindMismatch: return "kind_mismatch";
    case ErrorCode::kDigestMismatch: return "digest_mismatch";
    case ErrorCode::kParameter: return "parameter";
    case ErrorCode::kEntropy: return "entropy";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace certfree
