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

#include <algorithm>
#include <limits>
#include <map>

#include "sdwanlab/error.h"
#include "sdwanlab/measurement/measurement.h"

namespace sdwanlab::measurement {

PingReport RunPing(sim::Simulator& sim, const PingCampaign& campaign) {
  if (campaign.count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "count must be at least 1");
  }
  if (campaign.size_bytes < 1) {
    throw Error(ErrorCode::kInvalidArgument, "size must be at least 1 byte");
  }
  if (campaign.src == campaign.dst) {
    throw Error(ErrorCode::kInvalidArgument,
                "source and destination must differ");
  }
  auto address_of = [&](const NodeId& id) {
    const sim::Node* node = sim.network().FindNode(id);
    if (node == nullptr) {
      throw Error(ErrorCode::kUnknownEndpoint, "unknown endpoint " + id.str());
    }
    auto address = node->PrimaryAddress();
    if (!address) {
      throw Error(ErrorCode::kUnknownEndpoint,
                  "endpoint " + id.str() + " has no address");
    }
    return *address;
  };
  const NetAddress src = address_of(campaign.src);
  const NetAddress dst = address_of(campaign.dst);

  sim.Reseed(campaign.seed);
  std::map<int64_t, std::pair<double, int>> replies;  // seq -> (rtt, ttl)
  int token = sim.AddListener(
      [&](const NodeId& at, const sim::Packet& packet, double now) {
        if (at != campaign.src || packet.kind != sim::PacketKind::kEchoReply ||
            packet.src != dst || packet.dst != src) {
          return;
        }
        if (packet.seq < 1 || packet.seq > campaign.count) return;
        replies.emplace(packet.seq, std::make_pair(now - packet.sent_at,
                                                   packet.ttl));
      });

  const double start = sim.now();
  for (int i = 0; i < campaign.count; ++i) {
    sim.events().Schedule(start + i * kPingIntervalMs, [&sim, &campaign, src,
                                                        dst, i] {
      sim::Packet packet;
      packet.src = src;
      packet.dst = dst;
      packet.ttl = sim.settings().initial_ttl;
      packet.size_bytes = campaign.size_bytes;
      packet.seq = i + 1;
      packet.sent_at = sim.now();
      packet.kind = sim::PacketKind::kEchoRequest;
      sim.Send(campaign.src, packet);
    });
  }
  sim.RunUntilIdle();
  sim.RemoveListener(token);

  PingReport report;
  report.src = campaign.src;
  report.dst = campaign.dst;
  report.sent = campaign.count;
  report.received = static_cast<int>(replies.size());
  if (replies.empty()) return report;
  report.min_ms = std::numeric_limits<double>::infinity();
  report.max_ms = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  report.observed_ttl = replies.begin()->second.second;
  for (const auto& [seq, reply] : replies) {
    const auto [rtt, ttl] = reply;
    report.rtts_ms.push_back(rtt);
    report.min_ms = std::min(report.min_ms, rtt);
    report.max_ms = std::max(report.max_ms, rtt);
    sum += rtt;
    if (ttl != report.observed_ttl) report.ttl_stable = false;
  }
  report.avg_ms = sum / report.received;
  return report;
}

}  // namespace sdwanlab::measurement
