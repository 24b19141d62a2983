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

#ifndef SDWANLAB_GATEWAY_CODEC_H_
#define SDWANLAB_GATEWAY_CODEC_H_

#include "json.hpp"
#include "sdwanlab/measurement/measurement.h"
#include "sdwanlab/routing/rib.h"
#include "sdwanlab/sdwan/fabric.h"

// Wire form of API bodies and stored reports.
namespace sdwanlab::gateway {

nlohmann::json ToJson(const sdwan::DeviceRecord& record);
nlohmann::json ToJson(const sdwan::ControlConnection& connection);
nlohmann::json ToJson(const sdwan::PushResult& result);
nlohmann::json ToJson(const routing::RouteEntry& entry);
nlohmann::json ToJson(const routing::Rib& rib);
nlohmann::json ToJson(const measurement::PingReport& report);
nlohmann::json ToJson(const measurement::HardwareSample& sample);
nlohmann::json ToJson(const measurement::ComparisonReport& report);

}  // namespace sdwanlab::gateway

#endif  // SDWANLAB_GATEWAY_CODEC_H_
