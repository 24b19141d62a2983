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

#include <algorithm>
#include <cmath>

#include "sdwanlab/error.h"
#include "sdwanlab/measurement/measurement.h"

namespace sdwanlab::measurement {

int ManagedObjects(const sim::Simulator& sim, const sdwan::Fabric* fabric,
                   const NodeId& device) {
  const sim::Node& node = sim.network().node(device);
  if (fabric != nullptr) {
    const sdwan::FabricConfig& config = fabric->config();
    if (device == config.manage) {
      int templates = 0;
      for (const auto& record : fabric->Records()) {
        if (fabric->PushedConfig(record.identity.serial) != nullptr) ++templates;
      }
      return static_cast<int>(fabric->Inventory().size()) + templates;
    }
    if (device == config.bond) {
      return static_cast<int>(fabric->allowlist().size());
    }
    if (device == config.smart) {
      int alive = 0;
      for (const auto& c : fabric->Connections()) alive += c.alive ? 1 : 0;
      return alive;
    }
  }
  if (node.role == Role::kSwitch) return 0;
  return static_cast<int>(sim.RibOf(device).size());
}

HardwareSample SampleHardware(const sim::Simulator& sim,
                              const sdwan::Fabric* fabric,
                              const NodeId& device) {
  const sim::Node& node = sim.network().node(device);
  const HardwareProfile& hw = node.hardware;
  sim::NodeActivity activity = sim.ActivityOf(device);
  double load = 0.0;
  if (activity.events > 0 && hw.cpu_decay_ms > 0) {
    double elapsed = std::max(0.0, sim.now() - activity.last_ms);
    load = activity.load * std::exp(-elapsed / hw.cpu_decay_ms);
  }
  HardwareSample sample;
  sample.device = device;
  sample.num_cpus = hw.num_cpus;
  sample.memory_total_mb = hw.memory_total_mb;
  sample.cpu_pct = std::clamp(
      hw.cpu_base_pct +
          hw.cpu_burst_pct * (1.0 - std::exp(-hw.cpu_event_weight * load)),
      0.0, 100.0);
  sample.mem_pct = std::clamp(
      hw.mem_base_pct +
          hw.mem_per_object_pct * ManagedObjects(sim, fabric, device),
      0.0, 100.0);
  sample.at_ms = sim.now();
  return sample;
}

std::vector<HardwareSample> HardwareTable(const sdwan::Lab& lab) {
  std::vector<HardwareSample> table;
  if (!lab.fabric) return table;
  const sdwan::FabricConfig& config = lab.fabric->config();
  for (const NodeId& id : {config.manage, config.bond, config.smart}) {
    table.push_back(SampleHardware(*lab.sim, lab.fabric.get(), id));
  }
  for (const auto& [id, node] : lab.sim->network().nodes()) {
    if (node.role == Role::kEdge) {
      table.push_back(SampleHardware(*lab.sim, lab.fabric.get(), id));
    }
  }
  return table;
}

}  // namespace sdwanlab::measurement
