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

#ifndef SDWANLAB_SIM_PACKET_H_
#define SDWANLAB_SIM_PACKET_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "sdwanlab/address.h"
#include "sdwanlab/sim/types.h"

namespace sdwanlab::sim {

enum class PacketKind { kEchoRequest, kEchoReply, kTtlExceeded, kUnreachable };

std::string_view PacketKindName(PacketKind kind);

inline constexpr int kDefaultInitialTtl = 64;

// ICMP-echo-style probe. Error messages (ttl_exceeded, unreachable) keep the
// seq and sent_at of the packet that triggered them.
struct Packet {
  NetAddress src;
  NetAddress dst;
  int ttl = kDefaultInitialTtl;
  int size_bytes = 84;
  int64_t seq = 0;
  double sent_at = 0.0;
  PacketKind kind = PacketKind::kEchoRequest;

  bool is_error() const {
    return kind == PacketKind::kTtlExceeded || kind == PacketKind::kUnreachable;
  }
  std::string ToString() const;

  friend bool operator==(const Packet&, const Packet&) = default;
};

// A packet on the wire, addressed at L2 to one port of its segment.
struct Frame {
  Packet packet;
  PortRef l2_dst;
};

}  // namespace sdwanlab::sim

#endif  // SDWANLAB_SIM_PACKET_H_
