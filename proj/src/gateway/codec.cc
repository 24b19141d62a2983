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

#include "sdwanlab/gateway/codec.h"

#include "sdwanlab/hash.h"

namespace sdwanlab::gateway {

using nlohmann::json;

json ToJson(const sdwan::DeviceRecord& record) {
  json out = {
      {"serial", record.identity.serial},
      {"node", record.node.str()},
      {"role", RoleName(record.identity.role)},
      {"state", OnboardingStateName(record.state)},
      {"reachable", record.reachable},
      {"site", record.site},
      {"mode", ManagementModeName(record.mode)},
      {"certified", record.identity.certificate.has_value()},
      {"last_sync_ms", record.last_sync_ms},
      {"template_id", nullptr},
      {"failure_reason", record.failure_reason},
  };
  if (record.template_id) out["template_id"] = *record.template_id;
  return out;
}

json ToJson(const sdwan::ControlConnection& connection) {
  return {{"edge", connection.edge.str()},
          {"controller", connection.controller.str()},
          {"established_at_ms", connection.established_at},
          {"alive", connection.alive}};
}

namespace {

json DirectivesToJson(const std::vector<templates::Directive>& directives) {
  json out = json::array();
  for (const auto& directive : directives) {
    out.push_back({{"path", directive.path()}, {"value", directive.value}});
  }
  return out;
}

}  // namespace

json ToJson(const sdwan::PushResult& result) {
  json changed = json::array();
  for (const auto& change : result.diff.changed) {
    changed.push_back({{"path", templates::Directive{change.key, ""}.path()},
                       {"old", change.old_value},
                       {"new", change.new_value}});
  }
  return {{"serial", result.serial},
          {"template_id", result.template_id},
          {"previous_hash", HexDigest(result.previous_hash)},
          {"config_hash", HexDigest(result.config_hash)},
          {"compiled_hash", result.compiled.hash_hex()},
          {"directives", DirectivesToJson(result.compiled.directives)},
          {"diff",
           {{"added", DirectivesToJson(result.diff.added)},
            {"removed", DirectivesToJson(result.diff.removed)},
            {"changed", changed},
            {"empty", result.diff.empty()}}}};
}

json ToJson(const routing::RouteEntry& entry) {
  json out = {{"prefix", entry.prefix.ToString()},
              {"source", routing::RouteSourceName(entry.source)},
              {"admin_distance", entry.admin_distance},
              {"metric", entry.metric},
              {"out_port", entry.out_port},
              {"next_hop", nullptr},
              {"as_path", entry.as_path}};
  if (entry.next_hop) out["next_hop"] = entry.next_hop->ToString();
  return out;
}

json ToJson(const routing::Rib& rib) {
  json routes = json::array();
  for (const auto& [prefix, entry] : rib.entries()) {
    routes.push_back(ToJson(entry));
  }
  return {{"device", rib.owner().str()}, {"routes", routes}};
}

json ToJson(const measurement::PingReport& report) {
  json out = {{"src", report.src.str()},
              {"dst", report.dst.str()},
              {"sent", report.sent},
              {"received", report.received},
              {"ttl", nullptr},
              {"ttl_stable", report.ttl_stable},
              {"min_ms", report.min_ms},
              {"max_ms", report.max_ms},
              {"avg_ms", report.avg_ms}};
  if (report.observed_ttl >= 0) out["ttl"] = report.observed_ttl;
  return out;
}

json ToJson(const measurement::HardwareSample& sample) {
  return {{"device", sample.device.str()},
          {"num_cpus", sample.num_cpus},
          {"memory_total_mb", sample.memory_total_mb},
          {"cpu_pct", sample.cpu_pct},
          {"mem_pct", sample.mem_pct},
          {"at_ms", sample.at_ms}};
}

json ToJson(const measurement::ComparisonReport& report) {
  json paths = json::array();
  for (const auto& path : report.paths) {
    paths.push_back({{"name", path.name},
                     {"src_area", path.src_area},
                     {"dst_area", path.dst_area},
                     {"traditional", ToJson(path.traditional)},
                     {"sdwan", ToJson(path.sdwan)},
                     {"avg_ratio", path.avg_ratio},
                     {"avg_delta_ms", path.avg_delta_ms},
                     {"ttl_delta", path.ttl_delta}});
  }
  json hardware = json::array();
  for (const auto& sample : report.hardware) hardware.push_back(ToJson(sample));
  return {{"name", report.name},
          {"traditional_scenario", report.traditional_scenario},
          {"sdwan_scenario", report.sdwan_scenario},
          {"count", report.count},
          {"size_bytes", report.size_bytes},
          {"seed", report.seed},
          {"paths", paths},
          {"hardware", hardware}};
}

}  // namespace sdwanlab::gateway
