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

#ifndef SDWANLAB_SIM_TYPES_H_
#define SDWANLAB_SIM_TYPES_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace sdwanlab {

class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;

 private:
  std::string value_;
};

// One physical port on a node.
struct PortRef {
  NodeId node;
  std::string port;

  std::string ToString() const { return node.str() + ":" + port; }
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

enum class Role { kHost, kSwitch, kRouter, kEdge, kManage, kBond, kSmart };

std::string_view RoleName(Role role);
std::optional<Role> ParseRole(std::string_view name);

inline bool IsController(Role role) {
  return role == Role::kManage || role == Role::kBond || role == Role::kSmart;
}
inline bool IsSdwanRole(Role role) {
  return role == Role::kEdge || IsController(role);
}

enum class ManagementMode { kLocal, kTemplateManaged };

std::string_view ManagementModeName(ManagementMode mode);
std::optional<ManagementMode> ParseManagementMode(std::string_view name);

// Edge/controller lifecycle. Ordering is meaningful: later states compare
// greater.
enum class OnboardingState {
  kUnprovisioned,
  kBootstrapped,
  kAuthenticating,
  kSynced,
  kManaged,
};

std::string_view OnboardingStateName(OnboardingState state);

// Calibration knobs for the synthetic hardware model, per role.
struct HardwareProfile {
  int num_cpus = 1;
  int memory_total_mb = 512;
  double cpu_base_pct = 1.0;
  // Upper bound on the load-driven component added on top of the base.
  double cpu_burst_pct = 1.0;
  // Weight of one decayed unit of activity inside the saturating curve.
  double cpu_event_weight = 0.05;
  double cpu_decay_ms = 10000.0;
  double mem_base_pct = 10.0;
  double mem_per_object_pct = 0.1;
};

}  // namespace sdwanlab

#endif  // SDWANLAB_SIM_TYPES_H_
