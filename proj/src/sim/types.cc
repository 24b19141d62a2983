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

#include "sdwanlab/sim/types.h"

#include <array>

namespace sdwanlab {
namespace {

constexpr std::array<std::pair<Role, std::string_view>, 7> kRoleNames = {{
    {Role::kHost, "host"},
    {Role::kSwitch, "switch"},
    {Role::kRouter, "router"},
    {Role::kEdge, "edge"},
    {Role::kManage, "manage"},
    {Role::kBond, "bond"},
    {Role::kSmart, "smart"},
}};

}  // namespace

std::string_view RoleName(Role role) {
  for (const auto& [value, name] : kRoleNames) {
    if (value == role) return name;
  }
  return "unknown";
}

std::optional<Role> ParseRole(std::string_view name) {
  for (const auto& [value, role_name] : kRoleNames) {
    if (role_name == name) return value;
  }
  return std::nullopt;
}

std::string_view ManagementModeName(ManagementMode mode) {
  return mode == ManagementMode::kLocal ? "local" : "template_managed";
}

std::optional<ManagementMode> ParseManagementMode(std::string_view name) {
  if (name == "local") return ManagementMode::kLocal;
  if (name == "template_managed") return ManagementMode::kTemplateManaged;
  return std::nullopt;
}

std::string_view OnboardingStateName(OnboardingState state) {
  switch (state) {
    case OnboardingState::kUnprovisioned: return "unprovisioned";
    case OnboardingState::kBootstrapped: return "bootstrapped";
    case OnboardingState::kAuthenticating: return "authenticating";
    case OnboardingState::kSynced: return "synced";
    case OnboardingState::kManaged: return "managed";
  }
  return "unknown";
}

}  // namespace sdwanlab
