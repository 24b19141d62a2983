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

#include "sdwanlab/gateway/status.h"

namespace sdwanlab::gateway {

int HttpStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kSchedulingInPast:
    case ErrorCode::kSchemaError:
    case ErrorCode::kValidationError:
    case ErrorCode::kDisconnectedArea:
    case ErrorCode::kCompileError:
    case ErrorCode::kUnknownCommand:
      return 400;
    case ErrorCode::kUnknownEndpoint:
    case ErrorCode::kUnknownDevice:
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kNonConvergence:
    case ErrorCode::kUnreachable:
    case ErrorCode::kControllerNotReady:
    case ErrorCode::kSerialNotAllowed:
    case ErrorCode::kDeviceNotSynced:
    case ErrorCode::kPushFailed:
    case ErrorCode::kPermissionDenied:
      return 409;
    case ErrorCode::kInternal:
      return 500;
  }
  return 500;
}

int ExitCode(ErrorCode code) {
  return code == ErrorCode::kInvalidArgument ? kExitUsage : kExitDomain;
}

std::string OneLine(const Error& error) {
  std::string line = std::string(ErrorCodeName(error.code())) + ": ";
  for (char c : std::string(error.what())) {
    if (c == '\n') {
      line += "; ";
    } else if (c != '\r') {
      line += c;
    }
  }
  return line;
}

}  // namespace sdwanlab::gateway
