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

#include "sdwanlab/sdwan/fabric.h"

#include <algorithm>
#include <sstream>

#include "sdwanlab/error.h"
#include "sdwanlab/hash.h"

namespace sdwanlab::sdwan {
namespace {

std::vector<std::string> Tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string token; in >> token;) tokens.push_back(token);
  return tokens;
}

bool Contains(const std::vector<std::string>& list, const std::string& item) {
  return std::find(list.begin(), list.end(), item) != list.end();
}

[[noreturn]] void BadArgs(const std::string& usage) {
  throw Error(ErrorCode::kInvalidArgument, "usage: " + usage);
}

Prefix ArgPrefix(const std::string& text, const std::string& usage) {
  auto parsed = Prefix::Parse(text);
  if (!parsed) BadArgs(usage);
  return *parsed;
}

NetAddress ArgAddress(const std::string& text, const std::string& usage) {
  auto parsed = NetAddress::Parse(text);
  if (!parsed) BadArgs(usage);
  return *parsed;
}

uint32_t ArgNumber(const std::string& text, const std::string& usage) {
  try {
    size_t used = 0;
    unsigned long value = std::stoul(text, &used);
    if (used != text.size() || value > 0xFFFFFFFFul) BadArgs(usage);
    return static_cast<uint32_t>(value);
  } catch (const std::logic_error&) {
    BadArgs(usage);
  }
}

}  // namespace

const std::vector<std::string>& ReadCommands() {
  static const std::vector<std::string> kRead = {
      "show-routes", "show-interfaces", "show-config",
      "show-bgp",    "show-system",     "show-control-connections"};
  return kRead;
}

const std::vector<std::string>& WriteCommands() {
  static const std::vector<std::string> kWrite = {
      "set-interface",     "delete-interface",    "set-static-route",
      "delete-static-route", "set-hostname",      "set-bgp-neighbor",
      "delete-bgp-neighbor"};
  return kWrite;
}

std::string CertificateToken(std::string_view serial,
                             std::string_view root_key) {
  Fnv1a hash;
  hash.Update("cert\x1f").Update(serial).Update("\x1f").Update(root_key);
  return "cert-" + HexDigest(hash.digest());
}

Fabric::Fabric(sim::Simulator& sim, FabricConfig config)
    : sim_(sim), config_(std::move(config)) {
  for (const NodeId& id : {config_.manage, config_.bond, config_.smart}) {
    const sim::Node& node = sim_.network().node(id);
    if (!IsController(node.role)) {
      throw Error(ErrorCode::kInvalidArgument,
                  id.str() + " is not an SD-WAN controller");
    }
  }
  for (auto& [id, node] : sim_.network().nodes()) {
    if (!IsSdwanRole(node.role)) continue;
    DeviceRecord record;
    record.identity.serial = node.serial.empty() ? id.str() : node.serial;
    record.identity.role = node.role;
    record.node = id;
    record.site = node.area;
    record.state = node.onboarding_state;
    record.mode = node.mode;
    records_.emplace(record.identity.serial, std::move(record));
  }
  // The management platform is the trust root and is up from the start.
  DeviceRecord& manage = RecordFor(config_.manage);
  manage.identity.certificate =
      CertificateToken(manage.identity.serial, config_.root_key);
  SetState(manage, OnboardingState::kSynced);
  Refresh();
}

DeviceRecord& Fabric::RecordFor(const NodeId& node) {
  for (auto& [serial, record] : records_) {
    if (record.node == node) return record;
  }
  throw Error(ErrorCode::kUnknownDevice,
              "no SD-WAN device with id " + node.str());
}

DeviceRecord& Fabric::RecordForSerial(const std::string& serial) {
  auto it = records_.find(serial);
  if (it == records_.end()) {
    throw Error(ErrorCode::kUnknownDevice, "unknown serial " + serial);
  }
  return it->second;
}

void Fabric::SetState(DeviceRecord& record, OnboardingState state) {
  record.state = state;
  sim_.network().node(record.node).onboarding_state = state;
}

void Fabric::Fail(DeviceRecord& record, const std::string& reason) {
  record.failure_reason = reason;
  if (record.state < OnboardingState::kSynced) {
    SetState(record, OnboardingState::kBootstrapped);
  }
}

bool Fabric::ControllersReady() const {
  for (const NodeId& id : {config_.manage, config_.bond, config_.smart}) {
    if (sim_.network().node(id).onboarding_state < OnboardingState::kSynced) {
      return false;
    }
  }
  return true;
}

std::string Fabric::IssueCertificate(const NodeId& device) {
  DeviceRecord& record = RecordFor(device);
  if (record.identity.certificate) return *record.identity.certificate;
  sim_.RecordActivity(config_.manage);
  if (!sim_.Reachable(config_.manage, device)) {
    Fail(record, "unreachable from " + config_.manage.str());
    throw Error(ErrorCode::kUnreachable,
                device.str() + " is unreachable from " + config_.manage.str());
  }
  sim_.RecordActivity(device);
  record.identity.certificate =
      CertificateToken(record.identity.serial, config_.root_key);
  record.failure_reason.clear();
  SetState(record, OnboardingState::kAuthenticating);
  return *record.identity.certificate;
}

void Fabric::Sync(const NodeId& controller) {
  DeviceRecord& record = RecordFor(controller);
  if (!IsController(record.identity.role)) {
    throw Error(ErrorCode::kInvalidArgument,
                controller.str() + " is not a controller; onboard edges instead");
  }
  if (record.state >= OnboardingState::kSynced) return;
  if (!record.identity.certificate) {
    throw Error(ErrorCode::kControllerNotReady,
                controller.str() + " has no certificate");
  }
  if (!sim_.Reachable(config_.manage, controller)) {
    Fail(record, "unreachable during sync");
    throw Error(ErrorCode::kUnreachable,
                controller.str() + " is unreachable during sync");
  }
  sim_.RecordActivity(config_.manage);
  sim_.RecordActivity(controller);
  record.last_sync_ms = sim_.now();
  SetState(record, OnboardingState::kSynced);
  Refresh();
}

void Fabric::UploadAllowlist(std::vector<std::string> serials) {
  if (sim_.network().node(config_.bond).onboarding_state <
      OnboardingState::kSynced) {
    throw Error(ErrorCode::kControllerNotReady,
                config_.bond.str() + " is not synced");
  }
  sim_.RecordActivity(config_.bond);
  sim_.RecordActivity(config_.manage);
  allowlist_ = std::set<std::string>(serials.begin(), serials.end());
}

std::vector<std::string> Fabric::AvailableDevices() const {
  return std::vector<std::string>(allowlist_.begin(), allowlist_.end());
}

DeviceRecord Fabric::OnboardEdge(const std::string& serial) {
  if (!ControllersReady()) {
    throw Error(ErrorCode::kControllerNotReady,
                "controllers are not all synced");
  }
  auto it = records_.find(serial);
  if (allowlist_.count(serial) == 0) {
    if (it != records_.end()) Fail(it->second, "serial not in allowlist");
    throw Error(ErrorCode::kSerialNotAllowed,
                "serial " + serial + " is not in the allowlist");
  }
  DeviceRecord& record = RecordForSerial(serial);
  if (record.identity.role != Role::kEdge) {
    throw Error(ErrorCode::kInvalidArgument, serial + " is not an edge");
  }
  if (record.state >= OnboardingState::kSynced) return record;

  sim_.RecordActivity(config_.bond);
  for (const NodeId& controller : {config_.manage, config_.smart}) {
    if (!sim_.Reachable(controller, record.node)) {
      Fail(record, "unreachable from " + controller.str());
      throw Error(ErrorCode::kUnreachable,
                  record.node.str() + " is unreachable from " +
                      controller.str());
    }
  }
  IssueCertificate(record.node);
  double now = sim_.now();
  connections_.erase(std::remove_if(connections_.begin(), connections_.end(),
                                    [&](const ControlConnection& c) {
                                      return c.edge == record.node;
                                    }),
                     connections_.end());
  for (const NodeId& controller : {config_.manage, config_.smart}) {
    connections_.push_back(ControlConnection{record.node, controller, now, true});
    sim_.RecordActivity(controller);
  }
  sim_.network().node(record.node).overlay_active = true;
  sim_.RefreshOverlay();
  record.allowlisted_at_onboarding = true;
  record.last_sync_ms = now;
  record.failure_reason.clear();
  SetState(record, OnboardingState::kSynced);
  Refresh();
  return record;
}

PushResult Fabric::PushTemplate(
    const templates::DeviceTemplate& tmpl, const std::string& serial,
    const std::map<std::string, std::string>& variables) {
  DeviceRecord& record = RecordForSerial(serial);
  if (record.identity.role != Role::kEdge) {
    throw Error(ErrorCode::kInvalidArgument,
                "templates are pushed to edges only, not " + serial);
  }
  if (record.state < OnboardingState::kSynced) {
    throw Error(ErrorCode::kDeviceNotSynced,
                serial + " is " +
                    std::string(OnboardingStateName(record.state)) +
                    "; onboard it first");
  }
  if (sim_.network().node(config_.smart).onboarding_state <
      OnboardingState::kSynced) {
    throw Error(ErrorCode::kControllerNotReady,
                config_.smart.str() + " is not synced");
  }
  sim_.RecordActivity(config_.manage);
  sim_.RecordActivity(config_.smart);

  templates::CompiledConfig compiled = templates::Compile(tmpl, variables);
  DeviceConfig next = templates::ToDeviceConfig(compiled);

  sim::Node& node = sim_.network().node(record.node);
  auto reject = [&](const std::string& reason) {
    record.failure_reason = "push failed: " + reason;
    throw Error(ErrorCode::kPushFailed, serial + ": " + reason);
  };
  for (const auto& iface : next.interfaces) {
    if (!node.HasPort(iface.name)) reject("no interface " + iface.name);
  }
  if (next.bgp) {
    const sim::AreaInfo* area = sim_.network().FindArea(node.area);
    if (area != nullptr && area->as_number != next.bgp->local_as) {
      reject("AS " + std::to_string(next.bgp->local_as) +
             " does not match site AS " + std::to_string(area->as_number));
    }
  }

  PushResult result;
  result.serial = serial;
  result.template_id = tmpl.id;
  result.previous_hash = node.config.Hash();
  auto previous = pushed_.find(serial);
  result.diff = templates::Diff(previous != pushed_.end()
                                    ? previous->second
                                    : templates::CompiledConfig(),
                                compiled);

  DeviceConfig saved = node.config;
  ManagementMode saved_mode = node.mode;
  auto rollback = [&](const std::string& reason) {
    node.config = saved;
    node.mode = saved_mode;
    try {
      sim_.Converge();
    } catch (const Error&) {
      // The saved configuration converged before; nothing better to do.
    }
    reject(reason);
  };
  node.config = next;
  node.mode = ManagementMode::kTemplateManaged;
  try {
    sim_.Converge();
  } catch (const Error& e) {
    rollback(std::string("routing rejected configuration: ") + e.what());
  }
  for (const NodeId& controller : {config_.manage, config_.smart}) {
    if (!sim_.Reachable(controller, record.node)) {
      rollback("control connection to " + controller.str() + " lost");
    }
  }

  sim_.RecordActivity(record.node);
  pushed_[serial] = compiled;
  record.mode = ManagementMode::kTemplateManaged;
  record.template_id = tmpl.id;
  record.failure_reason.clear();
  record.last_sync_ms = sim_.now();
  SetState(record, OnboardingState::kManaged);
  result.config_hash = node.config.Hash();
  result.compiled = std::move(compiled);
  Refresh();
  return result;
}

std::string Fabric::CliExec(const NodeId& device,
                            std::string_view command_line) {
  std::vector<std::string> tokens = Tokenize(command_line);
  if (tokens.empty()) {
    throw Error(ErrorCode::kUnknownCommand, "empty command");
  }
  sim::Node& node = sim_.network().node(device);
  const std::string& command = tokens.front();
  if (Contains(ReadCommands(), command)) return Show(node, command);
  if (!Contains(WriteCommands(), command)) {
    throw Error(ErrorCode::kUnknownCommand, "unknown command " + command);
  }
  if (node.mode == ManagementMode::kTemplateManaged) {
    throw Error(ErrorCode::kPermissionDenied, std::string(kReadOnlyMessage));
  }
  std::vector<std::string> args(tokens.begin() + 1, tokens.end());
  DeviceConfig saved = node.config;
  ApplyWrite(node, command, args);
  try {
    sim_.Converge();
  } catch (const Error& e) {
    node.config = saved;
    sim_.Converge();
    throw Error(ErrorCode::kInvalidArgument,
                command + " rejected: " + e.what());
  }
  sim_.RecordActivity(device);
  Refresh();
  return "ok";
}

void Fabric::ApplyWrite(sim::Node& node, const std::string& command,
                        const std::vector<std::string>& args) {
  DeviceConfig& config = node.config;
  if (command == "set-interface") {
    const std::string usage = "set-interface <port> <address/len> [vpn]";
    if (args.size() < 2 || args.size() > 3) BadArgs(usage);
    if (!node.HasPort(args[0])) {
      throw Error(ErrorCode::kInvalidArgument, "no port " + args[0]);
    }
    auto address = InterfaceAddress::Parse(args[1]);
    if (!address || address->length > 30) BadArgs(usage);
    InterfaceConfig* iface = config.FindInterface(args[0]);
    if (iface == nullptr) {
      config.interfaces.push_back(InterfaceConfig{args[0], std::nullopt, 1});
      iface = &config.interfaces.back();
    }
    iface->address = address;
    if (args.size() == 3) iface->vpn = static_cast<int>(ArgNumber(args[2], usage));
  } else if (command == "delete-interface") {
    if (args.size() != 1) BadArgs("delete-interface <port>");
    auto it = std::find_if(config.interfaces.begin(), config.interfaces.end(),
                           [&](const InterfaceConfig& i) { return i.name == args[0]; });
    if (it == config.interfaces.end()) {
      throw Error(ErrorCode::kInvalidArgument, "no interface " + args[0]);
    }
    config.interfaces.erase(it);
  } else if (command == "set-static-route") {
    const std::string usage = "set-static-route <prefix> <next-hop>";
    if (args.size() != 2) BadArgs(usage);
    Prefix prefix = ArgPrefix(args[0], usage);
    NetAddress next_hop = ArgAddress(args[1], usage);
    std::erase_if(config.static_routes,
                  [&](const StaticRouteConfig& r) { return r.prefix == prefix; });
    config.static_routes.push_back({prefix, next_hop});
  } else if (command == "delete-static-route") {
    const std::string usage = "delete-static-route <prefix>";
    if (args.size() != 1) BadArgs(usage);
    Prefix prefix = ArgPrefix(args[0], usage);
    size_t removed = std::erase_if(
        config.static_routes,
        [&](const StaticRouteConfig& r) { return r.prefix == prefix; });
    if (removed == 0) {
      throw Error(ErrorCode::kInvalidArgument, "no static route " + args[0]);
    }
  } else if (command == "set-hostname") {
    if (args.size() != 1) BadArgs("set-hostname <name>");
    config.hostname = args[0];
  } else if (command == "set-bgp-neighbor") {
    const std::string usage = "set-bgp-neighbor <address> <remote-as>";
    if (args.size() != 2) BadArgs(usage);
    if (!config.bgp) {
      throw Error(ErrorCode::kInvalidArgument, "bgp is not configured");
    }
    NetAddress address = ArgAddress(args[0], usage);
    uint32_t remote_as = ArgNumber(args[1], usage);
    if (!config.bgp->neighbors) config.bgp->neighbors.emplace();
    std::erase_if(*config.bgp->neighbors, [&](const BgpNeighborConfig& n) {
      return n.address == address;
    });
    config.bgp->neighbors->push_back({address, remote_as});
  } else if (command == "delete-bgp-neighbor") {
    const std::string usage = "delete-bgp-neighbor <address>";
    if (args.size() != 1) BadArgs(usage);
    NetAddress address = ArgAddress(args[0], usage);
    if (!config.bgp || !config.bgp->neighbors ||
        std::erase_if(*config.bgp->neighbors, [&](const BgpNeighborConfig& n) {
          return n.address == address;
        }) == 0) {
      throw Error(ErrorCode::kInvalidArgument, "no bgp neighbor " + args[0]);
    }
  }
}

std::string Fabric::Show(const sim::Node& node,
                         const std::string& command) const {
  std::ostringstream out;
  if (command == "show-routes") {
    const routing::Rib& rib = sim_.RibOf(node.id);
    if (rib.size() == 0) out << "(no routes)\n";
    for (const auto& [prefix, entry] : rib.entries()) {
      out << entry.ToString() << "\n";
    }
  } else if (command == "show-interfaces") {
    for (const auto& port : node.ports) {
      const InterfaceConfig* iface = node.config.FindInterface(port);
      out << port;
      if (iface == nullptr) {
        out << " unconfigured";
      } else {
        out << " vpn " << iface->vpn;
        if (iface->address) out << " " << iface->address->ToString();
      }
      out << "\n";
    }
  } else if (command == "show-config") {
    out << node.config.Canonical();
  } else if (command == "show-bgp") {
    if (!node.config.bgp) {
      out << "bgp not configured\n";
    } else {
      out << "local-as " << node.config.bgp->local_as << "\n";
      if (node.config.bgp->neighbors) {
        for (const auto& n : *node.config.bgp->neighbors) {
          out << "neighbor " << n.address.ToString() << " remote-as "
              << n.remote_as << "\n";
        }
      }
      for (const auto& [prefix, entry] : sim_.RibOf(node.id).entries()) {
        if (entry.source == routing::RouteSource::kBgpLike) {
          out << entry.ToString() << "\n";
        }
      }
    }
  } else if (command == "show-system") {
    out << "hostname " << node.config.hostname << "\n"
        << "role " << RoleName(node.role) << "\n"
        << "site " << node.area << "\n"
        << "mode " << ManagementModeName(node.mode) << "\n"
        << "state " << OnboardingStateName(node.onboarding_state) << "\n";
    if (!node.serial.empty()) out << "serial " << node.serial << "\n";
  } else if (command == "show-control-connections") {
    bool any = false;
    for (const auto& c : connections_) {
      if (c.edge != node.id && c.controller != node.id) continue;
      out << c.edge.str() << " -> " << c.controller.str() << " "
          << (c.alive ? "up" : "down") << "\n";
      any = true;
    }
    if (!any) out << "(no control connections)\n";
  }
  return out.str();
}

std::vector<DeviceRecord> Fabric::Inventory() const {
  std::vector<DeviceRecord> out;
  for (const auto& [serial, record] : records_) {
    if (record.state >= OnboardingState::kSynced) out.push_back(record);
  }
  return out;
}

std::vector<DeviceRecord> Fabric::Records() const {
  std::vector<DeviceRecord> out;
  for (const auto& [serial, record] : records_) out.push_back(record);
  return out;
}

const DeviceRecord* Fabric::FindBySerial(std::string_view serial) const {
  auto it = records_.find(std::string(serial));
  return it == records_.end() ? nullptr : &it->second;
}

const DeviceRecord* Fabric::FindByNode(const NodeId& node) const {
  for (const auto& [serial, record] : records_) {
    if (record.node == node) return &record;
  }
  return nullptr;
}

std::vector<ControlConnection> Fabric::Connections() const {
  return connections_;
}

const templates::CompiledConfig* Fabric::PushedConfig(
    std::string_view serial) const {
  auto it = pushed_.find(std::string(serial));
  return it == pushed_.end() ? nullptr : &it->second;
}

void Fabric::Refresh() {
  for (auto& [serial, record] : records_) {
    record.reachable = record.node == config_.manage ||
                       sim_.Reachable(config_.manage, record.node);
  }
  for (auto& connection : connections_) {
    connection.alive = sim_.Reachable(connection.controller, connection.edge);
  }
}

}  // namespace sdwanlab::sdwan
