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

#include "sdwanlab/error.h"

namespace sdwanlab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSchedulingInPast: return "SchedulingInPast";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kDisconnectedArea: return "DisconnectedArea";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kControllerNotReady: return "ControllerNotReady";
    case ErrorCode::kSerialNotAllowed: return "SerialNotAllowed";
    case ErrorCode::kDeviceNotSynced: return "DeviceNotSynced";
    case ErrorCode::kCompileError: return "CompileError";
    case ErrorCode::kPushFailed: return "PushFailed";
    case ErrorCode::kPermissionDenied: return "PermissionDenied";
    case ErrorCode::kUnknownCommand: return "UnknownCommand";
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kUnknownDevice: return "UnknownDevice";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Internal";
}

}  // namespace sdwanlab
