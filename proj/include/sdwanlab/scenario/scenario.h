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

#ifndef SDWANLAB_SCENARIO_SCENARIO_H_
#define SDWANLAB_SCENARIO_SCENARIO_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdwanlab/address.h"
#include "sdwanlab/sim/network.h"
#include "sdwanlab/sim/simulator.h"

namespace sdwanlab::scenario {

enum class AreaIgp { kEigrpLike, kOspfLike, kMixed };

std::string_view AreaIgpName(AreaIgp igp);

struct AreaSpec {
  std::string name;
  uint32_t as_number = 0;
  Prefix prefix;
  AreaIgp igp = AreaIgp::kOspfLike;
  // Service-provider groups are areas too, so they get an AS and a prefix.
  bool provider = false;
};

struct StaticRouteSpec {
  NodeId node;
  Prefix prefix;
  NetAddress next_hop;
};

// A measured path, named by the areas it joins.
struct ProbeSpec {
  std::string name;
  std::string src_area;
  std::string dst_area;
  NodeId src;
  NodeId dst;
};

struct ProvisioningSpec {
  std::string serial;
  std::string template_path;  // relative to the scenario file
  std::map<std::string, std::string> variables;
};

struct SdwanSpec {
  NodeId manage;
  NodeId bond;
  NodeId smart;
  std::string root_key;
  std::vector<std::string> allowlist;
  bool edge_to_edge_tunnels = false;
  std::vector<ProvisioningSpec> provisioning;
};

struct Defaults {
  int initial_ttl = sim::kDefaultInitialTtl;
  uint64_t seed = 1;
  double tunnel_delay_ms = 1.0;
  std::map<Role, double> processing_delay_ms;
  std::map<Role, HardwareProfile> hardware;
};

Defaults BuiltinDefaults();

struct ScenarioSpec {
  std::string name;
  std::vector<std::string> notes;
  Defaults defaults;
  std::vector<AreaSpec> areas;
  // Nodes carry fully resolved config, delays and hardware profiles.
  std::vector<sim::Node> nodes;
  std::vector<sim::Link> links;
  std::vector<StaticRouteSpec> static_routes;
  std::vector<ProbeSpec> probes;
  std::optional<SdwanSpec> sdwan;
  // Directory of the source file; provisioning paths resolve against it.
  std::filesystem::path base_dir;

  const AreaSpec* FindArea(std::string_view name) const;
  const sim::Node* FindNode(const NodeId& id) const;
  const ProbeSpec* FindProbe(std::string_view name) const;
};

// Parses and validates a scenario document. Throws Error(kSchemaError) with
// the offending field path for shape problems and Error(kValidationError)
// for semantic ones.
ScenarioSpec LoadScenario(std::string_view document,
                          const std::filesystem::path& base_dir = {});

// Accepts a path with or without the .json extension.
ScenarioSpec LoadScenarioFile(const std::filesystem::path& path);
std::filesystem::path ResolveScenarioPath(const std::filesystem::path& path);

// Semantic checks only; LoadScenario already runs them.
void Validate(const ScenarioSpec& spec);

sim::Network BuildNetwork(const ScenarioSpec& spec);

// Instantiates and converges the simulation.
std::unique_ptr<sim::Simulator> Build(const ScenarioSpec& spec);

}  // namespace sdwanlab::scenario

#endif  // SDWANLAB_SCENARIO_SCENARIO_H_
