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

#ifndef SDWANLAB_SDWAN_FABRIC_H_
#define SDWANLAB_SDWAN_FABRIC_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sdwanlab/sim/simulator.h"
#include "sdwanlab/templates/template.h"

namespace sdwanlab::sdwan {

struct DeviceIdentity {
  std::string serial;
  Role role = Role::kEdge;
  std::optional<std::string> certificate;
};

struct DeviceRecord {
  DeviceIdentity identity;
  NodeId node;
  OnboardingState state = OnboardingState::kBootstrapped;
  bool reachable = false;
  std::string site;
  double last_sync_ms = 0.0;
  std::string failure_reason;
  ManagementMode mode = ManagementMode::kLocal;
  std::optional<std::string> template_id;
  // Whether the serial was allowlisted when the device was onboarded.
  bool allowlisted_at_onboarding = false;
};

struct ControlConnection {
  NodeId edge;
  NodeId controller;
  double established_at = 0.0;
  bool alive = false;
};

struct PushResult {
  std::string serial;
  std::string template_id;
  uint64_t previous_hash = 0;  // DeviceConfig::Hash() before the push
  uint64_t config_hash = 0;    // and after
  templates::CompiledConfig compiled;
  templates::ConfigDiff diff;  // against the previously pushed template, if any
};

struct FabricConfig {
  NodeId manage;
  NodeId bond;
  NodeId smart;
  std::string root_key;
};

inline constexpr std::string_view kReadOnlyMessage =
    "read-only: device is template-managed";

// The published command set, in display order.
const std::vector<std::string>& ReadCommands();
const std::vector<std::string>& WriteCommands();

// Deterministic certificate token bound to (serial, root key).
std::string CertificateToken(std::string_view serial, std::string_view root_key);

// Controller-side view of the overlay. Owns no simulation state: every
// mutation goes through the simulator it wraps, so device-local state and
// the records here move together.
class Fabric {
 public:
  Fabric(sim::Simulator& sim, FabricConfig config);

  sim::Simulator& sim() { return sim_; }
  const FabricConfig& config() const { return config_; }

  // Issues a certificate from manage to `device` (bond, smart or an edge).
  // Throws kUnreachable without an underlay path. Repeated issuance returns
  // the same token.
  std::string IssueCertificate(const NodeId& device);
  // Completes authentication of a certified controller.
  void Sync(const NodeId& controller);

  void UploadAllowlist(std::vector<std::string> serials);
  const std::set<std::string>& allowlist() const { return allowlist_; }
  // Allowlisted serials as manage presents them for onboarding.
  std::vector<std::string> AvailableDevices() const;

  // Throws kControllerNotReady, kSerialNotAllowed, kUnreachable in that
  // order of precedence.
  DeviceRecord OnboardEdge(const std::string& serial);

  // Compiles and applies atomically. Throws kDeviceNotSynced,
  // kControllerNotReady, kCompileError or kPushFailed; on any failure the
  // device keeps its previous configuration.
  PushResult PushTemplate(const templates::DeviceTemplate& tmpl,
                          const std::string& serial,
                          const std::map<std::string, std::string>& variables);

  // Throws kUnknownCommand, kPermissionDenied, kInvalidArgument.
  std::string CliExec(const NodeId& device, std::string_view command_line);

  // Devices in state synced or later, ordered by serial.
  std::vector<DeviceRecord> Inventory() const;
  // Every SD-WAN device, whatever its state.
  std::vector<DeviceRecord> Records() const;
  const DeviceRecord* FindBySerial(std::string_view serial) const;
  const DeviceRecord* FindByNode(const NodeId& node) const;
  std::vector<ControlConnection> Connections() const;
  const templates::CompiledConfig* PushedConfig(std::string_view serial) const;

  // Re-evaluates reachability and connection liveness.
  void Refresh();

 private:
  DeviceRecord& RecordFor(const NodeId& node);
  DeviceRecord& RecordForSerial(const std::string& serial);
  void SetState(DeviceRecord& record, OnboardingState state);
  void Fail(DeviceRecord& record, const std::string& reason);
  bool ControllersReady() const;
  std::string Show(const sim::Node& node, const std::string& command) const;
  void ApplyWrite(sim::Node& node, const std::string& command,
                  const std::vector<std::string>& args);

  sim::Simulator& sim_;
  FabricConfig config_;
  std::map<std::string, DeviceRecord> records_;  // by serial
  std::set<std::string> allowlist_;
  std::vector<ControlConnection> connections_;
  std::map<std::string, templates::CompiledConfig> pushed_;
};

}  // namespace sdwanlab::sdwan

#endif  // SDWANLAB_SDWAN_FABRIC_H_
