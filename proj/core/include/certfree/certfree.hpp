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

#include "certfree/authority.hpp"
#include "certfree/bytes.hpp"
#include "certfree/entropy.hpp"
#include "certfree/errors.hpp"
#include "certfree/group.hpp"
#include "certfree/hash_suite.hpp"
#include "certfree/unified.hpp"
#include "certfree/user_keys.hpp"
#include "certfree/wire.hpp"
