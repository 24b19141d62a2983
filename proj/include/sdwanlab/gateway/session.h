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

#ifndef SDWANLAB_GATEWAY_SESSION_H_
#define SDWANLAB_GATEWAY_SESSION_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sdwanlab/measurement/measurement.h"
#include "sdwanlab/scenario/scenario.h"
#include "sdwanlab/sdwan/lab.h"
#include "sdwanlab/templates/template.h"

namespace sdwanlab::gateway {

// Immutable result of an experiment, stored in its wire form.
struct StoredReport {
  std::string id;
  std::string kind;  // "ping" or "comparison"
  std::string scenario;
  nlohmann::json body;
};

// Everything the CLI and the HTTP API operate on: loaded scenarios, at most
// one running lab per scenario name, registered templates and reports.
class Session {
 public:
  // Loading a scenario whose name is already known replaces it and stops its
  // lab. Returns the scenario name.
  std::string LoadFile(const std::filesystem::path& path);
  std::string Add(scenario::ScenarioSpec spec);
  bool HasScenario(std::string_view name) const;
  const scenario::ScenarioSpec& Scenario(std::string_view name) const;
  std::vector<std::string> ScenarioNames() const;
  // Source file of a scenario, empty when it was added from memory.
  std::filesystem::path SourceOf(std::string_view name) const;

  // (Re)builds the lab and brings up its controllers; with provision also
  // onboards and provisions every allowlisted edge. Becomes the active lab.
  sdwan::Lab& Run(std::string_view name, bool provision = false);
  bool IsRunning(std::string_view name) const;
  // Throws kNotFound when the scenario is not running.
  sdwan::Lab& Lab(std::string_view name);
  const sdwan::Lab& Lab(std::string_view name) const;
  // Empty name selects the active lab.
  std::string ResolveRunning(std::string_view name) const;
  const std::string& active() const { return active_; }

  // Validates and stores; returns false when it replaced a template.
  bool PutTemplate(templates::DeviceTemplate tmpl);
  const templates::DeviceTemplate& Template(std::string_view id) const;
  const std::map<std::string, templates::DeviceTemplate, std::less<>>&
  templates() const {
    return templates_;
  }

  std::string AddPingReport(std::string_view scenario,
                            const measurement::PingReport& report);
  // Uses the report name as id, suffixed with -2, -3... when taken.
  std::string AddComparison(const measurement::ComparisonReport& report);
  const StoredReport& Report(std::string_view id) const;
  const std::map<std::string, StoredReport, std::less<>>& reports() const {
    return reports_;
  }

  // Digest of all observable state; equal before and after any read.
  uint64_t StateHash() const;

 private:
  struct Entry {
    scenario::ScenarioSpec spec;
    std::filesystem::path source;
  };

  std::map<std::string, Entry, std::less<>> scenarios_;
  std::map<std::string, sdwan::Lab, std::less<>> labs_;
  std::string active_;
  std::map<std::string, templates::DeviceTemplate, std::less<>> templates_;
  std::map<std::string, StoredReport, std::less<>> reports_;
  int next_ping_ = 1;
};

}  // namespace sdwanlab::gateway

#endif  // SDWANLAB_GATEWAY_SESSION_H_
