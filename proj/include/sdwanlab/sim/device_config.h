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

#ifndef SDWANLAB_SIM_DEVICE_CONFIG_H_
#define SDWANLAB_SIM_DEVICE_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdwanlab/address.h"

namespace sdwanlab {

enum class IgpProtocol { kEigrpLike, kOspfLike };

std::string_view IgpProtocolName(IgpProtocol protocol);
std::optional<IgpProtocol> ParseIgpProtocol(std::string_view name);

// VPN 0 is the transport side of an edge; overlay tunnels terminate there.
inline constexpr int kTransportVpn = 0;

struct InterfaceConfig {
  std::string name;
  std::optional<InterfaceAddress> address;
  int vpn = 1;

  friend bool operator==(const InterfaceConfig&,
                         const InterfaceConfig&) = default;
};

struct StaticRouteConfig {
  Prefix prefix;
  NetAddress next_hop;

  friend bool operator==(const StaticRouteConfig&,
                         const StaticRouteConfig&) = default;
};

struct IgpConfig {
  IgpProtocol protocol = IgpProtocol::kOspfLike;
  int area_id = 0;
  // nullopt enables the protocol on every addressed intra-area interface.
  std::optional<std::vector<std::string>> interfaces;
  // Per-interface metric overrides; otherwise the link cost applies.
  std::map<std::string, uint32_t> costs;

  friend bool operator==(const IgpConfig&, const IgpConfig&) = default;
};

struct BgpNeighborConfig {
  NetAddress address;
  uint32_t remote_as = 0;

  friend bool operator==(const BgpNeighborConfig&,
                         const BgpNeighborConfig&) = default;
};

struct BgpConfig {
  uint32_t local_as = 0;
  std::vector<Prefix> originate;
  // nullopt peers automatically with every directly connected speaker and
  // with every same-AS speaker (conventional manually configured routers).
  // Template-managed devices list their neighbors explicitly.
  std::optional<std::vector<BgpNeighborConfig>> neighbors;

  friend bool operator==(const BgpConfig&, const BgpConfig&) = default;
};

// Executable configuration of one device: what a router or edge actually runs.
struct DeviceConfig {
  std::string hostname;
  std::map<std::string, std::string> system;
  std::vector<InterfaceConfig> interfaces;
  std::vector<StaticRouteConfig> static_routes;
  std::vector<IgpConfig> igps;
  std::optional<BgpConfig> bgp;

  const InterfaceConfig* FindInterface(std::string_view name) const;
  InterfaceConfig* FindInterface(std::string_view name);
  const IgpConfig* FindIgp(IgpProtocol protocol) const;

  // Deterministic text rendering; Hash() is computed over it.
  std::string Canonical() const;
  uint64_t Hash() const;

  friend bool operator==(const DeviceConfig&, const DeviceConfig&) = default;
};

}  // namespace sdwanlab

#endif  // SDWANLAB_SIM_DEVICE_CONFIG_H_
