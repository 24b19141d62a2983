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

#include <map>
#include <set>

#include "sdwanlab/error.h"
#include "sdwanlab/routing/path_vector.h"
#include "sdwanlab/scenario/scenario.h"

namespace sdwanlab::scenario {
namespace {

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kValidationError, message);
}

void ValidateAreas(const ScenarioSpec& spec) {
  std::set<std::string> names;
  std::map<uint32_t, std::string> by_as;
  for (size_t i = 0; i < spec.areas.size(); ++i) {
    const AreaSpec& area = spec.areas[i];
    if (area.name.empty()) Invalid("area with empty name");
    if (!names.insert(area.name).second) Invalid("duplicate area " + area.name);
    if (!routing::IsPrivateAs(area.as_number)) {
      Invalid("area " + area.name + ": AS " + std::to_string(area.as_number) +
              " outside the private range 64512-65535");
    }
    auto [it, inserted] = by_as.emplace(area.as_number, area.name);
    if (!inserted) {
      Invalid("AS " + std::to_string(area.as_number) + " used by both " +
              it->second + " and " + area.name);
    }
    for (size_t j = 0; j < i; ++j) {
      if (spec.areas[j].prefix.Overlaps(area.prefix)) {
        Invalid("area prefixes overlap: " + spec.areas[j].name + " " +
                spec.areas[j].prefix.ToString() + " and " + area.name + " " +
                area.prefix.ToString());
      }
    }
  }
}

void ValidateLinks(const ScenarioSpec& spec,
                   const std::map<NodeId, const sim::Node*>& nodes) {
  std::set<PortRef> used;
  for (const auto& link : spec.links) {
    std::string where = "link " + link.a.ToString() + " - " + link.b.ToString();
    for (const PortRef& end : {link.a, link.b}) {
      if (nodes.count(end.node) == 0) {
        Invalid(where + ": unknown node " + end.node.str());
      }
      if (!used.insert(end).second) {
        Invalid(where + ": port " + end.ToString() + " already linked");
      }
    }
    if (link.a.node == link.b.node) Invalid(where + ": endpoints must differ");
    if (link.latency_ms < 0) Invalid(where + ": negative latency");
    if (link.jitter_ms < 0) Invalid(where + ": negative jitter");
    if (link.loss_pct < 0 || link.loss_pct > 100) {
      Invalid(where + ": loss_pct outside [0,100]");
    }
    if (link.cost < 1) Invalid(where + ": cost must be >= 1");
  }
}

void ValidateNodes(const ScenarioSpec& spec,
                   const std::map<NodeId, const sim::Node*>& nodes) {
  std::map<PortRef, std::string> peer_area;
  for (const auto& link : spec.links) {
    peer_area[link.a] = nodes.at(link.b.node)->area;
    peer_area[link.b] = nodes.at(link.a.node)->area;
  }
  std::map<NetAddress, std::string> owners;
  for (const auto& node : spec.nodes) {
    const std::string who = "node " + node.id.str();
    const AreaSpec* area = spec.FindArea(node.area);
    if (area == nullptr) Invalid(who + ": unknown area " + node.area);
    if (node.processing_delay_ms < 0) Invalid(who + ": negative delay");
    if (node.role == Role::kHost && node.config.interfaces.empty()) {
      Invalid(who + ": hosts need at least one interface");
    }
    for (const auto& iface : node.config.interfaces) {
      if (!iface.address) continue;
      if (node.role == Role::kSwitch) {
        Invalid(who + ": switch interface " + iface.name + " has an address");
      }
      if (iface.address->length > 30) {
        Invalid(who + ": " + iface.name + " subnet too small");
      }
      PortRef port{node.id, iface.name};
      auto peer = peer_area.find(port);
      bool inter_area = peer != peer_area.end() && peer->second != node.area;
      if (!inter_area && !area->prefix.Contains(iface.address->address)) {
        Invalid(who + ": " + iface.name + " address " +
                iface.address->ToString() + " outside area prefix " +
                area->prefix.ToString());
      }
      auto [it, inserted] =
          owners.emplace(iface.address->address, port.ToString());
      if (!inserted) {
        Invalid("address " + iface.address->address.ToString() +
                " assigned to both " + it->second + " and " + port.ToString());
      }
    }
    for (const auto& igp : node.config.igps) {
      if (!node.forwards()) Invalid(who + ": only routers and edges run an IGP");
      bool ospf = igp.protocol == IgpProtocol::kOspfLike;
      if ((area->igp == AreaIgp::kOspfLike && !ospf) ||
          (area->igp == AreaIgp::kEigrpLike && ospf)) {
        Invalid(who + ": runs " + std::string(IgpProtocolName(igp.protocol)) +
                " but area " + area->name + " is " +
                std::string(AreaIgpName(area->igp)));
      }
      if (igp.interfaces) {
        for (const auto& name : *igp.interfaces) {
          if (node.config.FindInterface(name) == nullptr) {
            Invalid(who + ": IGP references unknown interface " + name);
          }
        }
      }
    }
    if (node.config.bgp) {
      if (!node.forwards()) Invalid(who + ": only routers and edges run BGP");
      if (node.config.bgp->local_as != area->as_number) {
        Invalid(who + ": BGP AS " + std::to_string(node.config.bgp->local_as) +
                " differs from area AS " + std::to_string(area->as_number));
      }
    }
  }
}

void ValidateSdwan(const ScenarioSpec& spec,
                   const std::map<NodeId, const sim::Node*>& nodes) {
  std::map<std::string, NodeId> serials;
  for (const auto& node : spec.nodes) {
    if (node.serial.empty()) continue;
    auto [it, inserted] = serials.emplace(node.serial, node.id);
    if (!inserted) {
      Invalid("serial " + node.serial + " used by both " + it->second.str() +
              " and " + node.id.str());
    }
  }
  std::set<std::string> controller_areas;
  for (const auto& node : spec.nodes) {
    if (IsController(node.role)) controller_areas.insert(node.area);
  }
  if (controller_areas.size() > 1) {
    Invalid("SD-WAN controllers must reside in exactly one area");
  }
  if (!spec.sdwan) return;
  const SdwanSpec& sdwan = *spec.sdwan;
  auto expect = [&](const NodeId& id, Role role) {
    auto it = nodes.find(id);
    if (it == nodes.end()) Invalid("sdwan: unknown controller " + id.str());
    if (it->second->role != role) {
      Invalid("sdwan: " + id.str() + " is not a " + std::string(RoleName(role)));
    }
  };
  expect(sdwan.manage, Role::kManage);
  expect(sdwan.bond, Role::kBond);
  expect(sdwan.smart, Role::kSmart);
  if (sdwan.root_key.empty()) Invalid("sdwan: root_key must not be empty");
  for (const auto& entry : sdwan.provisioning) {
    auto it = serials.find(entry.serial);
    if (it == serials.end() || nodes.at(it->second)->role != Role::kEdge) {
      Invalid("sdwan: provisioning serial " + entry.serial +
              " does not belong to an edge");
    }
  }
}

}  // namespace

void Validate(const ScenarioSpec& spec) {
  if (spec.defaults.initial_ttl < 1 || spec.defaults.initial_ttl > 64) {
    Invalid("initial_ttl must lie in [1,64]");
  }
  if (spec.defaults.tunnel_delay_ms < 0) Invalid("negative tunnel delay");
  ValidateAreas(spec);

  std::map<NodeId, const sim::Node*> nodes;
  for (const auto& node : spec.nodes) {
    if (!nodes.emplace(node.id, &node).second) {
      Invalid("duplicate node id " + node.id.str());
    }
  }
  ValidateLinks(spec, nodes);
  ValidateNodes(spec, nodes);

  for (const auto& route : spec.static_routes) {
    if (nodes.count(route.node) == 0) {
      Invalid("static route on unknown node " + route.node.str());
    }
  }
  std::set<std::string> probe_names;
  for (const auto& probe : spec.probes) {
    if (!probe_names.insert(probe.name).second) {
      Invalid("duplicate probe " + probe.name);
    }
    for (const auto& [id, area] :
         {std::pair{probe.src, probe.src_area}, std::pair{probe.dst, probe.dst_area}}) {
      auto it = nodes.find(id);
      if (it == nodes.end()) {
        Invalid("probe " + probe.name + ": unknown node " + id.str());
      }
      if (it->second->area != area) {
        Invalid("probe " + probe.name + ": " + id.str() + " is not in " + area);
      }
    }
    if (probe.src == probe.dst) {
      Invalid("probe " + probe.name + ": source equals destination");
    }
  }
  ValidateSdwan(spec, nodes);
}

}  // namespace sdwanlab::scenario
