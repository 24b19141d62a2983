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

#include "sdwanlab/sdwan/lab.h"

namespace sdwanlab::sdwan {

Lab MakeLab(scenario::ScenarioSpec spec) {
  Lab lab;
  lab.spec = std::move(spec);
  lab.sim = scenario::Build(lab.spec);
  if (lab.spec.sdwan) {
    const scenario::SdwanSpec& sdwan = *lab.spec.sdwan;
    lab.fabric = std::make_unique<Fabric>(
        *lab.sim,
        FabricConfig{sdwan.manage, sdwan.bond, sdwan.smart, sdwan.root_key});
  }
  return lab;
}

void BringUpControllers(Lab& lab) {
  if (!lab.fabric) return;
  const scenario::SdwanSpec& sdwan = *lab.spec.sdwan;
  for (const NodeId& controller : {sdwan.bond, sdwan.smart}) {
    lab.fabric->IssueCertificate(controller);
    lab.fabric->Sync(controller);
  }
  lab.fabric->UploadAllowlist(sdwan.allowlist);
}

void BringUp(Lab& lab) {
  if (!lab.fabric) return;
  BringUpControllers(lab);
  for (const std::string& serial : lab.spec.sdwan->allowlist) {
    lab.fabric->OnboardEdge(serial);
  }
  for (const auto& provisioning : lab.spec.sdwan->provisioning) {
    lab.fabric->PushTemplate(LoadProvisioningTemplate(lab.spec, provisioning),
                             provisioning.serial, provisioning.variables);
  }
}

templates::DeviceTemplate LoadProvisioningTemplate(
    const scenario::ScenarioSpec& spec,
    const scenario::ProvisioningSpec& provisioning) {
  std::filesystem::path path = provisioning.template_path;
  if (path.is_relative()) path = spec.base_dir / path;
  return templates::LoadTemplateFile(path.string());
}

}  // namespace sdwanlab::sdwan
