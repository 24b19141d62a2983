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

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sdwanlab/error.h"
#include "sdwanlab/scenario/scenario.h"

namespace sdwanlab::scenario {
namespace {

using nlohmann::json;

[[noreturn]] void SchemaFail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, path + ": " + what);
}

// A JSON value together with its location in the document.
class Field {
 public:
  Field(const json& value, std::string path)
      : value_(value), path_(std::move(path)) {}

  const json& value() const { return value_; }
  const std::string& path() const { return path_; }

  Field operator[](const std::string& key) const {
    return Field(value_.at(key), path_ + "." + key);
  }
  Field at(size_t i) const {
    return Field(value_.at(i), path_ + "[" + std::to_string(i) + "]");
  }

  bool has(const std::string& key) const {
    return value_.is_object() && value_.contains(key) &&
           !value_.at(key).is_null();
  }

  const Field& Object(std::initializer_list<std::string_view> allowed) const {
    if (!value_.is_object()) SchemaFail(path_, "expected object");
    for (const auto& [key, unused] : value_.items()) {
      bool known = false;
      for (auto name : allowed) known = known || key == name;
      if (!known) SchemaFail(path_ + "." + key, "unknown field");
    }
    return *this;
  }

  Field Require(const std::string& key) const {
    if (!has(key)) SchemaFail(path_ + "." + key, "required field missing");
    return (*this)[key];
  }

  std::vector<Field> Array() const {
    if (!value_.is_array()) SchemaFail(path_, "expected array");
    std::vector<Field> out;
    for (size_t i = 0; i < value_.size(); ++i) out.push_back(at(i));
    return out;
  }

  std::string String() const {
    if (!value_.is_string()) SchemaFail(path_, "expected string");
    return value_.get<std::string>();
  }

  double Number() const {
    if (!value_.is_number()) SchemaFail(path_, "expected number");
    return value_.get<double>();
  }

  int64_t Integer() const {
    if (!value_.is_number_integer()) SchemaFail(path_, "expected integer");
    return value_.get<int64_t>();
  }

  bool Bool() const {
    if (!value_.is_boolean()) SchemaFail(path_, "expected boolean");
    return value_.get<bool>();
  }

  Prefix AsPrefix() const {
    auto parsed = Prefix::Parse(String());
    if (!parsed) SchemaFail(path_, "expected canonical prefix like 10.1.0.0/16");
    return *parsed;
  }

  NetAddress AsAddress() const {
    auto parsed = NetAddress::Parse(String());
    if (!parsed) SchemaFail(path_, "expected address like 10.1.0.1");
    return *parsed;
  }

  InterfaceAddress AsInterfaceAddress() const {
    auto parsed = InterfaceAddress::Parse(String());
    if (!parsed) SchemaFail(path_, "expected interface address like 10.1.0.1/24");
    return *parsed;
  }

  NodeId AsNodeId() const {
    std::string id = String();
    if (id.empty()) SchemaFail(path_, "empty identifier");
    return NodeId(id);
  }

 private:
  const json& value_;
  std::string path_;
};

std::vector<std::string> Strings(const Field& field) {
  std::vector<std::string> out;
  for (const Field& item : field.Array()) out.push_back(item.String());
  return out;
}

Role ReadRole(const Field& field) {
  auto role = ParseRole(field.String());
  if (!role) {
    SchemaFail(field.path(),
               "expected one of host, switch, router, edge, manage, bond, smart");
  }
  return *role;
}

AreaIgp ReadAreaIgp(const Field& field) {
  std::string name = field.String();
  if (name == "eigrp_like") return AreaIgp::kEigrpLike;
  if (name == "ospf_like") return AreaIgp::kOspfLike;
  if (name == "mixed") return AreaIgp::kMixed;
  SchemaFail(field.path(), "expected eigrp_like, ospf_like or mixed");
}

void ReadHardware(const Field& field, HardwareProfile& hw) {
  field.Object({"num_cpus", "memory_total_mb", "cpu_base_pct", "cpu_burst_pct",
                "cpu_event_weight", "cpu_decay_ms", "mem_base_pct",
                "mem_per_object_pct"});
  if (field.has("num_cpus")) hw.num_cpus = field["num_cpus"].Integer();
  if (field.has("memory_total_mb")) {
    hw.memory_total_mb = field["memory_total_mb"].Integer();
  }
  if (field.has("cpu_base_pct")) hw.cpu_base_pct = field["cpu_base_pct"].Number();
  if (field.has("cpu_burst_pct")) {
    hw.cpu_burst_pct = field["cpu_burst_pct"].Number();
  }
  if (field.has("cpu_event_weight")) {
    hw.cpu_event_weight = field["cpu_event_weight"].Number();
  }
  if (field.has("cpu_decay_ms")) hw.cpu_decay_ms = field["cpu_decay_ms"].Number();
  if (field.has("mem_base_pct")) hw.mem_base_pct = field["mem_base_pct"].Number();
  if (field.has("mem_per_object_pct")) {
    hw.mem_per_object_pct = field["mem_per_object_pct"].Number();
  }
}

void ReadDefaults(const Field& field, Defaults& defaults) {
  field.Object({"initial_ttl", "seed", "tunnel_delay_ms", "processing_delay_ms",
                "hardware"});
  if (field.has("initial_ttl")) {
    defaults.initial_ttl = static_cast<int>(field["initial_ttl"].Integer());
  }
  if (field.has("seed")) {
    int64_t seed = field["seed"].Integer();
    if (seed < 0) SchemaFail(field.path() + ".seed", "must be non-negative");
    defaults.seed = static_cast<uint64_t>(seed);
  }
  if (field.has("tunnel_delay_ms")) {
    defaults.tunnel_delay_ms = field["tunnel_delay_ms"].Number();
  }
  if (field.has("processing_delay_ms")) {
    Field delays = field["processing_delay_ms"];
    if (!delays.value().is_object()) SchemaFail(delays.path(), "expected object");
    for (const auto& [key, unused] : delays.value().items()) {
      Field entry = delays[key];
      auto role = ParseRole(key);
      if (!role) SchemaFail(entry.path(), "unknown role");
      defaults.processing_delay_ms[*role] = entry.Number();
    }
  }
  if (field.has("hardware")) {
    Field hardware = field["hardware"];
    if (!hardware.value().is_object()) {
      SchemaFail(hardware.path(), "expected object");
    }
    for (const auto& [key, unused] : hardware.value().items()) {
      Field entry = hardware[key];
      auto role = ParseRole(key);
      if (!role) SchemaFail(entry.path(), "unknown role");
      ReadHardware(entry, defaults.hardware[*role]);
    }
  }
}

IgpConfig ReadIgp(const Field& field) {
  field.Object({"protocol", "area_id", "interfaces", "costs"});
  IgpConfig igp;
  Field protocol = field.Require("protocol");
  auto parsed = ParseIgpProtocol(protocol.String());
  if (!parsed) SchemaFail(protocol.path(), "expected eigrp_like or ospf_like");
  igp.protocol = *parsed;
  if (field.has("area_id")) {
    igp.area_id = static_cast<int>(field["area_id"].Integer());
  }
  if (field.has("interfaces")) igp.interfaces = Strings(field["interfaces"]);
  if (field.has("costs")) {
    Field costs = field["costs"];
    if (!costs.value().is_object()) SchemaFail(costs.path(), "expected object");
    for (const auto& [key, unused] : costs.value().items()) {
      int64_t cost = costs[key].Integer();
      if (cost < 1) SchemaFail(costs.path() + "." + key, "cost must be >= 1");
      igp.costs[key] = static_cast<uint32_t>(cost);
    }
  }
  return igp;
}

BgpConfig ReadBgp(const Field& field) {
  field.Object({"local_as", "originate", "neighbors"});
  BgpConfig bgp;
  bgp.local_as = static_cast<uint32_t>(field.Require("local_as").Integer());
  if (field.has("originate")) {
    for (const Field& item : field["originate"].Array()) {
      bgp.originate.push_back(item.AsPrefix());
    }
  }
  if (field.has("neighbors")) {
    bgp.neighbors.emplace();
    for (const Field& item : field["neighbors"].Array()) {
      item.Object({"address", "remote_as"});
      bgp.neighbors->push_back(BgpNeighborConfig{
          item.Require("address").AsAddress(),
          static_cast<uint32_t>(item.Require("remote_as").Integer())});
    }
  }
  return bgp;
}

sim::Node ReadNode(const Field& field, const Defaults& defaults) {
  field.Object({"id", "role", "area", "hostname", "interfaces", "gateway",
                "igp", "bgp", "serial", "processing_delay_ms", "hardware",
                "system"});
  sim::Node node;
  node.id = field.Require("id").AsNodeId();
  node.role = ReadRole(field.Require("role"));
  node.area = field.Require("area").String();
  node.config.hostname =
      field.has("hostname") ? field["hostname"].String() : node.id.str();
  if (field.has("interfaces")) {
    for (const Field& item : field["interfaces"].Array()) {
      item.Object({"name", "address", "vpn"});
      InterfaceConfig iface;
      iface.name = item.Require("name").String();
      if (item.has("address")) {
        iface.address = item["address"].AsInterfaceAddress();
      }
      if (item.has("vpn")) iface.vpn = static_cast<int>(item["vpn"].Integer());
      if (node.config.FindInterface(iface.name) != nullptr) {
        SchemaFail(item.path(), "duplicate interface " + iface.name);
      }
      node.ports.push_back(iface.name);
      node.config.interfaces.push_back(std::move(iface));
    }
  }
  if (field.has("gateway")) {
    node.config.static_routes.push_back(StaticRouteConfig{
        *Prefix::Parse("0.0.0.0/0"), field["gateway"].AsAddress()});
  }
  if (field.has("igp")) {
    for (const Field& item : field["igp"].Array()) {
      IgpConfig igp = ReadIgp(item);
      if (node.config.FindIgp(igp.protocol) != nullptr) {
        SchemaFail(item.path(), "protocol configured twice");
      }
      node.config.igps.push_back(std::move(igp));
    }
  }
  if (field.has("bgp")) node.config.bgp = ReadBgp(field["bgp"]);
  if (field.has("serial")) node.serial = field["serial"].String();
  if (field.has("system")) {
    Field system = field["system"];
    if (!system.value().is_object()) SchemaFail(system.path(), "expected object");
    for (const auto& [key, unused] : system.value().items()) {
      node.config.system[key] = system[key].String();
    }
  }

  auto delay = defaults.processing_delay_ms.find(node.role);
  node.processing_delay_ms =
      delay != defaults.processing_delay_ms.end() ? delay->second : 0.1;
  if (field.has("processing_delay_ms")) {
    node.processing_delay_ms = field["processing_delay_ms"].Number();
  }
  auto hw = defaults.hardware.find(node.role);
  if (hw != defaults.hardware.end()) node.hardware = hw->second;
  if (field.has("hardware")) ReadHardware(field["hardware"], node.hardware);

  if (IsSdwanRole(node.role)) {
    node.onboarding_state = OnboardingState::kBootstrapped;
  }
  return node;
}

PortRef ReadEndpoint(const Field& field) {
  std::string text = field.String();
  auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    SchemaFail(field.path(), "expected \"node:port\"");
  }
  return PortRef{NodeId(text.substr(0, colon)), text.substr(colon + 1)};
}

sim::Link ReadLink(const Field& field) {
  field.Object({"a", "b", "latency_ms", "jitter_ms", "loss_pct", "cost"});
  sim::Link link;
  link.a = ReadEndpoint(field.Require("a"));
  link.b = ReadEndpoint(field.Require("b"));
  if (field.has("latency_ms")) link.latency_ms = field["latency_ms"].Number();
  if (field.has("jitter_ms")) link.jitter_ms = field["jitter_ms"].Number();
  if (field.has("loss_pct")) link.loss_pct = field["loss_pct"].Number();
  if (field.has("cost")) {
    int64_t cost = field["cost"].Integer();
    if (cost < 1) SchemaFail(field.path() + ".cost", "cost must be >= 1");
    link.cost = static_cast<uint32_t>(cost);
  }
  return link;
}

SdwanSpec ReadSdwan(const Field& field) {
  field.Object({"controllers", "root_key", "allowlist", "edge_to_edge_tunnels",
                "provisioning"});
  SdwanSpec sdwan;
  Field controllers = field.Require("controllers");
  controllers.Object({"manage", "bond", "smart"});
  sdwan.manage = controllers.Require("manage").AsNodeId();
  sdwan.bond = controllers.Require("bond").AsNodeId();
  sdwan.smart = controllers.Require("smart").AsNodeId();
  sdwan.root_key = field.Require("root_key").String();
  if (field.has("allowlist")) sdwan.allowlist = Strings(field["allowlist"]);
  if (field.has("edge_to_edge_tunnels")) {
    sdwan.edge_to_edge_tunnels = field["edge_to_edge_tunnels"].Bool();
  }
  if (field.has("provisioning")) {
    for (const Field& item : field["provisioning"].Array()) {
      item.Object({"serial", "template", "variables"});
      ProvisioningSpec entry;
      entry.serial = item.Require("serial").String();
      entry.template_path = item.Require("template").String();
      if (item.has("variables")) {
        Field vars = item["variables"];
        if (!vars.value().is_object()) SchemaFail(vars.path(), "expected object");
        for (const auto& [key, unused] : vars.value().items()) {
          entry.variables[key] = vars[key].String();
        }
      }
      sdwan.provisioning.push_back(std::move(entry));
    }
  }
  return sdwan;
}

}  // namespace

std::string_view AreaIgpName(AreaIgp igp) {
  switch (igp) {
    case AreaIgp::kEigrpLike: return "eigrp_like";
    case AreaIgp::kOspfLike: return "ospf_like";
    case AreaIgp::kMixed: return "mixed";
  }
  return "unknown";
}

Defaults BuiltinDefaults() {
  Defaults defaults;
  for (Role role : {Role::kHost, Role::kSwitch, Role::kRouter, Role::kEdge,
                    Role::kManage, Role::kBond, Role::kSmart}) {
    defaults.processing_delay_ms[role] = 0.1;
    defaults.hardware[role] = HardwareProfile();
  }
  return defaults;
}

const AreaSpec* ScenarioSpec::FindArea(std::string_view area) const {
  for (const auto& a : areas) {
    if (a.name == area) return &a;
  }
  return nullptr;
}

const sim::Node* ScenarioSpec::FindNode(const NodeId& id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

const ProbeSpec* ScenarioSpec::FindProbe(std::string_view probe) const {
  for (const auto& p : probes) {
    if (p.name == probe) return &p;
  }
  return nullptr;
}

ScenarioSpec LoadScenario(std::string_view document,
                          const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchemaError, std::string("$: ") + e.what());
  }
  Field top(root, "$");
  top.Object({"name", "notes", "defaults", "areas", "nodes", "links",
              "static_routes", "probes", "sdwan"});

  ScenarioSpec spec;
  spec.base_dir = base_dir;
  spec.name = top.Require("name").String();
  if (top.has("notes")) spec.notes = Strings(top["notes"]);
  spec.defaults = BuiltinDefaults();
  if (top.has("defaults")) ReadDefaults(top["defaults"], spec.defaults);

  if (top.has("areas")) {
    for (const Field& item : top["areas"].Array()) {
      item.Object({"name", "as_number", "prefix", "igp", "kind"});
      AreaSpec area;
      area.name = item.Require("name").String();
      int64_t as = item.Require("as_number").Integer();
      if (as < 0 || as > 0xFFFFFFFFll) {
        SchemaFail(item.path() + ".as_number", "out of range");
      }
      area.as_number = static_cast<uint32_t>(as);
      area.prefix = item.Require("prefix").AsPrefix();
      area.igp = ReadAreaIgp(item.Require("igp"));
      if (item.has("kind")) {
        std::string kind = item["kind"].String();
        if (kind != "enterprise" && kind != "provider") {
          SchemaFail(item.path() + ".kind", "expected enterprise or provider");
        }
        area.provider = kind == "provider";
      }
      spec.areas.push_back(std::move(area));
    }
  }

  if (top.has("nodes")) {
    for (const Field& item : top["nodes"].Array()) {
      spec.nodes.push_back(ReadNode(item, spec.defaults));
    }
  }

  if (top.has("links")) {
    for (const Field& item : top["links"].Array()) {
      sim::Link link = ReadLink(item);
      // Switch ports (and unconfigured router ports) come into existence by
      // being linked.
      for (const PortRef& end : {link.a, link.b}) {
        for (auto& node : spec.nodes) {
          if (node.id == end.node && !node.HasPort(end.port)) {
            node.ports.push_back(end.port);
          }
        }
      }
      spec.links.push_back(std::move(link));
    }
  }

  if (top.has("static_routes")) {
    for (const Field& item : top["static_routes"].Array()) {
      item.Object({"node", "prefix", "next_hop"});
      spec.static_routes.push_back(StaticRouteSpec{
          item.Require("node").AsNodeId(), item.Require("prefix").AsPrefix(),
          item.Require("next_hop").AsAddress()});
    }
  }

  if (top.has("probes")) {
    for (const Field& item : top["probes"].Array()) {
      item.Object({"name", "src_area", "dst_area", "src", "dst"});
      spec.probes.push_back(ProbeSpec{
          item.Require("name").String(), item.Require("src_area").String(),
          item.Require("dst_area").String(), item.Require("src").AsNodeId(),
          item.Require("dst").AsNodeId()});
    }
  }

  if (top.has("sdwan")) spec.sdwan = ReadSdwan(top["sdwan"]);

  Validate(spec);

  for (const auto& route : spec.static_routes) {
    for (auto& node : spec.nodes) {
      if (node.id == route.node) {
        node.config.static_routes.push_back(
            StaticRouteConfig{route.prefix, route.next_hop});
      }
    }
  }
  return spec;
}

std::filesystem::path ResolveScenarioPath(const std::filesystem::path& path) {
  if (std::filesystem::is_regular_file(path)) return path;
  std::filesystem::path with_ext = path;
  with_ext += ".json";
  if (std::filesystem::is_regular_file(with_ext)) return with_ext;
  throw Error(ErrorCode::kNotFound, "scenario file not found: " + path.string());
}

ScenarioSpec LoadScenarioFile(const std::filesystem::path& path) {
  std::filesystem::path resolved = ResolveScenarioPath(path);
  std::ifstream in(resolved);
  if (!in) {
    throw Error(ErrorCode::kNotFound, "cannot read " + resolved.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return LoadScenario(buffer.str(), resolved.parent_path());
}

}  // namespace sdwanlab::scenario
