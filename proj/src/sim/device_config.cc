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

#include "sdwanlab/sim/device_config.h"

#include <sstream>

#include "sdwanlab/hash.h"

namespace sdwanlab {

std::string_view IgpProtocolName(IgpProtocol protocol) {
  return protocol == IgpProtocol::kEigrpLike ? "eigrp_like" : "ospf_like";
}

std::optional<IgpProtocol> ParseIgpProtocol(std::string_view name) {
  if (name == "eigrp_like") return IgpProtocol::kEigrpLike;
  if (name == "ospf_like") return IgpProtocol::kOspfLike;
  return std::nullopt;
}

const InterfaceConfig* DeviceConfig::FindInterface(std::string_view name) const {
  for (const auto& iface : interfaces) {
    if (iface.name == name) return &iface;
  }
  return nullptr;
}

InterfaceConfig* DeviceConfig::FindInterface(std::string_view name) {
  for (auto& iface : interfaces) {
    if (iface.name == name) return &iface;
  }
  return nullptr;
}

const IgpConfig* DeviceConfig::FindIgp(IgpProtocol protocol) const {
  for (const auto& igp : igps) {
    if (igp.protocol == protocol) return &igp;
  }
  return nullptr;
}

std::string DeviceConfig::Canonical() const {
  std::ostringstream out;
  out << "hostname " << hostname << "\n";
  for (const auto& [key, value] : system) {
    out << "system " << key << " " << value << "\n";
  }
  for (const auto& iface : interfaces) {
    out << "interface " << iface.name << " vpn " << iface.vpn;
    if (iface.address) out << " address " << iface.address->ToString();
    out << "\n";
  }
  for (const auto& route : static_routes) {
    out << "static " << route.prefix.ToString() << " "
        << route.next_hop.ToString() << "\n";
  }
  for (const auto& igp : igps) {
    out << "igp " << IgpProtocolName(igp.protocol) << " area " << igp.area_id;
    if (igp.interfaces) {
      out << " interfaces";
      for (const auto& name : *igp.interfaces) out << " " << name;
    }
    for (const auto& [name, cost] : igp.costs) {
      out << " cost " << name << "=" << cost;
    }
    out << "\n";
  }
  if (bgp) {
    out << "bgp " << bgp->local_as;
    for (const auto& prefix : bgp->originate) {
      out << " originate " << prefix.ToString();
    }
    if (bgp->neighbors) {
      for (const auto& neighbor : *bgp->neighbors) {
        out << " neighbor " << neighbor.address.ToString() << "="
            << neighbor.remote_as;
      }
    } else {
      out << " auto-peer";
    }
    out << "\n";
  }
  return out.str();
}

uint64_t DeviceConfig::Hash() const { return Fnv1a().Update(Canonical()).digest(); }

}  // namespace sdwanlab
