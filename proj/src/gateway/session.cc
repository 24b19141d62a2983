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

#include "sdwanlab/gateway/session.h"

#include <sstream>

#include "sdwanlab/error.h"
#include "sdwanlab/gateway/codec.h"
#include "sdwanlab/hash.h"

namespace sdwanlab::gateway {

std::string Session::LoadFile(const std::filesystem::path& path) {
  std::filesystem::path resolved = scenario::ResolveScenarioPath(path);
  scenario::ScenarioSpec spec = scenario::LoadScenarioFile(resolved);
  std::string name = Add(std::move(spec));
  scenarios_.find(name)->second.source =
      std::filesystem::absolute(resolved).lexically_normal();
  return name;
}

std::string Session::Add(scenario::ScenarioSpec spec) {
  std::string name = spec.name;
  labs_.erase(name);
  if (active_ == name) active_.clear();
  scenarios_.insert_or_assign(name, Entry{std::move(spec), {}});
  return name;
}

bool Session::HasScenario(std::string_view name) const {
  return scenarios_.find(name) != scenarios_.end();
}

const scenario::ScenarioSpec& Session::Scenario(std::string_view name) const {
  auto it = scenarios_.find(name);
  if (it == scenarios_.end()) {
    throw Error(ErrorCode::kNotFound,
                "no scenario named " + std::string(name) + " is loaded");
  }
  return it->second.spec;
}

std::vector<std::string> Session::ScenarioNames() const {
  std::vector<std::string> names;
  for (const auto& [name, entry] : scenarios_) names.push_back(name);
  return names;
}

std::filesystem::path Session::SourceOf(std::string_view name) const {
  auto it = scenarios_.find(name);
  return it == scenarios_.end() ? std::filesystem::path() : it->second.source;
}

sdwan::Lab& Session::Run(std::string_view name, bool provision) {
  sdwan::Lab lab = sdwan::MakeLab(Scenario(name));
  if (provision) {
    sdwan::BringUp(lab);
  } else {
    sdwan::BringUpControllers(lab);
  }
  auto [it, inserted] = labs_.insert_or_assign(std::string(name), std::move(lab));
  active_ = it->first;
  return it->second;
}

bool Session::IsRunning(std::string_view name) const {
  return labs_.find(name) != labs_.end();
}

sdwan::Lab& Session::Lab(std::string_view name) {
  return const_cast<sdwan::Lab&>(std::as_const(*this).Lab(name));
}

const sdwan::Lab& Session::Lab(std::string_view name) const {
  auto it = labs_.find(name);
  if (it == labs_.end()) {
    throw Error(ErrorCode::kNotFound,
                "scenario " + std::string(name) + " is not running");
  }
  return it->second;
}

std::string Session::ResolveRunning(std::string_view name) const {
  if (!name.empty()) {
    Lab(name);
    return std::string(name);
  }
  if (active_.empty()) {
    throw Error(ErrorCode::kNotFound, "no scenario is running");
  }
  return active_;
}

bool Session::PutTemplate(templates::DeviceTemplate tmpl) {
  templates::ValidationReport report = templates::ValidateTemplate(tmpl);
  if (!report.ok()) {
    throw Error(ErrorCode::kValidationError,
                "template " + tmpl.id + ": " + report.ToString());
  }
  std::string id = tmpl.id;
  bool created = templates_.find(id) == templates_.end();
  templates_.insert_or_assign(id, std::move(tmpl));
  return created;
}

const templates::DeviceTemplate& Session::Template(std::string_view id) const {
  auto it = templates_.find(id);
  if (it == templates_.end()) {
    throw Error(ErrorCode::kNotFound, "no template " + std::string(id));
  }
  return it->second;
}

std::string Session::AddPingReport(std::string_view scenario,
                                   const measurement::PingReport& report) {
  std::string id = "ping-" + std::to_string(next_ping_++);
  reports_.emplace(id, StoredReport{id, "ping", std::string(scenario),
                                    ToJson(report)});
  return id;
}

std::string Session::AddComparison(
    const measurement::ComparisonReport& report) {
  std::string id = report.name;
  for (int suffix = 2; reports_.count(id) > 0; ++suffix) {
    id = report.name + "-" + std::to_string(suffix);
  }
  reports_.emplace(id, StoredReport{id, "comparison", report.sdwan_scenario,
                                    ToJson(report)});
  return id;
}

const StoredReport& Session::Report(std::string_view id) const {
  auto it = reports_.find(id);
  if (it == reports_.end()) {
    throw Error(ErrorCode::kNotFound, "no report " + std::string(id));
  }
  return it->second;
}

uint64_t Session::StateHash() const {
  std::ostringstream state;
  state.precision(17);
  state << "active " << active_ << "\n";
  for (const auto& [name, entry] : scenarios_) {
    state << "scenario " << name << " " << entry.source.string() << "\n";
  }
  for (const auto& [name, lab] : labs_) {
    const sim::Simulator& sim = *lab.sim;
    const sim::SimStats& stats = sim.stats();
    state << "lab " << name << " now " << sim.now() << " pending "
          << sim.events().pending() << " stats " << stats.transmitted << " "
          << stats.delivered << " " << stats.lost << " " << stats.ttl_expired
          << " " << stats.no_route << " " << stats.filtered << " trace "
          << sim.trace().size() << "\n";
    for (const auto& [id, node] : sim.network().nodes()) {
      sim::NodeActivity activity = sim.ActivityOf(id);
      state << id.str() << " " << HexDigest(node.config.Hash()) << " "
            << OnboardingStateName(node.onboarding_state) << " "
            << node.overlay_active << " " << ManagementModeName(node.mode)
            << " " << activity.load << " " << activity.last_ms << " "
            << activity.events << "\n";
      for (const auto& [prefix, entry] : sim.RibOf(id).entries()) {
        state << "  " << entry.ToString() << "\n";
      }
    }
    if (lab.fabric != nullptr) {
      for (const auto& record : lab.fabric->Records()) {
        state << ToJson(record).dump() << "\n";
      }
      for (const auto& serial : lab.fabric->allowlist()) {
        state << "allow " << serial << "\n";
      }
      for (const auto& connection : lab.fabric->Connections()) {
        state << ToJson(connection).dump() << "\n";
      }
      for (const auto& record : lab.fabric->Records()) {
        if (const auto* pushed =
                lab.fabric->PushedConfig(record.identity.serial)) {
          state << "pushed " << record.identity.serial << " "
                << pushed->hash_hex() << "\n";
        }
      }
    }
  }
  for (const auto& [id, tmpl] : templates_) {
    state << "template " << templates::TemplateToJson(tmpl).dump() << "\n";
  }
  for (const auto& [id, report] : reports_) {
    state << "report " << id << " " << report.body.dump() << "\n";
  }
  state << "next " << next_ping_ << "\n";
  return Fnv1a().Update(state.str()).digest();
}

}  // namespace sdwanlab::gateway
