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

#ifndef SDWANLAB_SDWAN_LAB_H_
#define SDWANLAB_SDWAN_LAB_H_

#include <memory>

#include "sdwanlab/scenario/scenario.h"
#include "sdwanlab/sdwan/fabric.h"
#include "sdwanlab/sim/simulator.h"
#include "sdwanlab/templates/template.h"

namespace sdwanlab::sdwan {

// A built scenario plus, when it declares controllers, its fabric.
struct Lab {
  scenario::ScenarioSpec spec;
  std::unique_ptr<sim::Simulator> sim;
  std::unique_ptr<Fabric> fabric;
};

Lab MakeLab(scenario::ScenarioSpec spec);

// Certifies and syncs vBond and vSmart, then uploads the scenario allowlist.
void BringUpControllers(Lab& lab);

// BringUpControllers, then onboards every allowlisted edge and applies the
// scenario's provisioning templates. A no-op for scenarios without SD-WAN.
void BringUp(Lab& lab);

templates::DeviceTemplate LoadProvisioningTemplate(
    const scenario::ScenarioSpec& spec,
    const scenario::ProvisioningSpec& provisioning);

}  // namespace sdwanlab::sdwan

#endif  // SDWANLAB_SDWAN_LAB_H_
