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

#include "sdwanlab/scenario/scenario.h"

namespace sdwanlab::scenario {

sim::Network BuildNetwork(const ScenarioSpec& spec) {
  sim::Network network;
  for (const auto& area : spec.areas) {
    network.AddArea(
        sim::AreaInfo{area.name, area.provider, area.as_number, area.prefix});
  }
  for (const auto& node : spec.nodes) network.AddNode(node);
  for (const auto& link : spec.links) network.AddLink(link);
  network.Finalize();
  return network;
}

std::unique_ptr<sim::Simulator> Build(const ScenarioSpec& spec) {
  sim::SimSettings settings;
  settings.initial_ttl = spec.defaults.initial_ttl;
  settings.tunnel_delay_ms = spec.defaults.tunnel_delay_ms;
  settings.seed = spec.defaults.seed;
  settings.edge_to_edge_tunnels =
      spec.sdwan.has_value() && spec.sdwan->edge_to_edge_tunnels;
  auto sim = std::make_unique<sim::Simulator>(BuildNetwork(spec), settings);
  sim->Converge();
  return sim;
}

}  // namespace sdwanlab::scenario
