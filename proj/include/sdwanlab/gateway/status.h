// Copyright 2026 The sdwanlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SDWANLAB_GATEWAY_STATUS_H_
#define SDWANLAB_GATEWAY_STATUS_H_

#include <string>

#include "sdwanlab/error.h"

namespace sdwanlab::gateway {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// 400 for malformed or invalid input, 404 for unknown ids, 409 for requests
// the current state does not allow, 500 otherwise.
int HttpStatus(ErrorCode code);

// kInvalidArgument is a usage error (exit 2); every other code exits 1.
int ExitCode(ErrorCode code);

// "Code: message" folded onto one line.
std::string OneLine(const Error& error);

}  // namespace sdwanlab::gateway

#endif  // SDWANLAB_GATEWAY_STATUS_H_
