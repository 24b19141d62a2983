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

#include "sdwanlab/routing/rib.h"

#include <sstream>
#include <tuple>

namespace sdwanlab::routing {

std::string_view RouteSourceName(RouteSource source) {
  switch (source) {
    case RouteSource::kConnected: return "connected";
    case RouteSource::kStatic: return "static";
    case RouteSource::kEigrpLike: return "eigrp_like";
    case RouteSource::kOspfLike: return "ospf_like";
    case RouteSource::kBgpLike: return "bgp_like";
  }
  return "unknown";
}

int AdminDistance(RouteSource source, bool internal_bgp) {
  switch (source) {
    case RouteSource::kConnected: return 0;
    case RouteSource::kStatic: return 1;
    case RouteSource::kBgpLike: return internal_bgp ? 200 : 20;
    case RouteSource::kEigrpLike: return 90;
    case RouteSource::kOspfLike: return 110;
  }
  return 255;
}

bool RouteEntry::PreferredOver(const RouteEntry& other) const {
  auto key = [](const RouteEntry& e) {
    return std::make_tuple(e.admin_distance, e.metric,
                           e.next_hop.value_or(NetAddress()), e.out_port,
                           e.as_path, static_cast<int>(e.source),
                           e.next_hop_node.value_or(NodeId()));
  };
  return key(*this) < key(other);
}

std::string RouteEntry::ToString() const {
  std::ostringstream out;
  out << prefix.ToString() << " " << RouteSourceName(source) << " ["
      << admin_distance << "/" << metric << "]";
  if (next_hop) {
    out << " via " << next_hop->ToString();
  } else {
    out << " directly connected";
  }
  out << " " << out_port;
  if (!as_path.empty()) {
    out << " as-path";
    for (uint32_t as : as_path) out << " " << as;
  }
  return out.str();
}

void Rib::Offer(const RouteEntry& entry) {
  auto it = entries_.find(entry.prefix);
  if (it == entries_.end()) {
    entries_.emplace(entry.prefix, entry);
  } else if (entry.PreferredOver(it->second)) {
    it->second = entry;
  }
}

const RouteEntry* Rib::Find(const Prefix& prefix) const {
  auto it = entries_.find(prefix);
  return it == entries_.end() ? nullptr : &it->second;
}

const RouteEntry* Rib::Lookup(NetAddress address) const {
  const RouteEntry* best = nullptr;
  for (const auto& [prefix, entry] : entries_) {
    if (!prefix.Contains(address)) continue;
    if (best == nullptr || prefix.length() > best->prefix.length()) {
      best = &entry;
    }
  }
  return best;
}

Rib MergeRib(const NodeId& owner, std::span<const RouteEntry> connected,
             std::span<const RouteEntry> statics,
             std::span<const RouteEntry> igp, std::span<const RouteEntry> bgp) {
  Rib rib(owner);
  for (auto source : {connected, statics, igp, bgp}) {
    for (const auto& entry : source) rib.Offer(entry);
  }
  return rib;
}

}  // namespace sdwanlab::routing
