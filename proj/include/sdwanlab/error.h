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

#ifndef SDWANLAB_ERROR_H_
#define SDWANLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdwanlab {

// Every domain failure raised by the library carries one of these codes. The
// gateway maps each code to exactly one HTTP status and one CLI exit class.
enum class ErrorCode {
  kInvalidArgument,
  kSchedulingInPast,
  kSchemaError,
  kValidationError,
  kDisconnectedArea,
  kNonConvergence,
  kUnreachable,
  kControllerNotReady,
  kSerialNotAllowed,
  kDeviceNotSynced,
  kCompileError,
  kPushFailed,
  kPermissionDenied,
  kUnknownCommand,
  kUnknownEndpoint,
  kUnknownDevice,
  kNotFound,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sdwanlab

#endif  // SDWANLAB_ERROR_H_
