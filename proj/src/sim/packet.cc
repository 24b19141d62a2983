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

#include "sdwanlab/sim/packet.h"

#include <sstream>

namespace sdwanlab::sim {

std::string_view PacketKindName(PacketKind kind) {
  switch (kind) {
    case PacketKind::kEchoRequest: return "echo_request";
    case PacketKind::kEchoReply: return "echo_reply";
    case PacketKind::kTtlExceeded: return "ttl_exceeded";
    case PacketKind::kUnreachable: return "unreachable";
  }
  return "unknown";
}

std::string Packet::ToString() const {
  std::ostringstream out;
  out << PacketKindName(kind) << " " << src.ToString() << ">"
      << dst.ToString() << " ttl=" << ttl << " seq=" << seq
      << " size=" << size_bytes;
  return out.str();
}

}  // namespace sdwanlab::sim
