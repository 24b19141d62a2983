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

#include "sdwanlab/templates/template.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "sdwanlab/error.h"
#include "sdwanlab/hash.h"

namespace sdwanlab::templates {
namespace {

using nlohmann::json;

enum class ParamType {
  kString,
  kInteger,
  kAddress,
  kInterfaceAddress,
  kStringList,
  kPrefixList,
  kCostMap,
  kNeighborList,
  kPrefix,
};

struct ParamSpec {
  const char* name;
  ParamType type;
  bool required;
};

const std::vector<ParamSpec>& ParamsFor(FeatureKind kind) {
  static const std::map<FeatureKind, std::vector<ParamSpec>> kParams = {
      {FeatureKind::kSystem,
       {{"host-name", ParamType::kString, true},
        {"system-id", ParamType::kAddress, true},
        {"site-id", ParamType::kInteger, true}}},
      {FeatureKind::kInterface,
       {{"name", ParamType::kString, true},
        {"vpn-id", ParamType::kInteger, true},
        {"address", ParamType::kInterfaceAddress, false}}},
      {FeatureKind::kRoutingStatic,
       {{"prefix", ParamType::kPrefix, true},
        {"next-hop", ParamType::kAddress, true}}},
      {FeatureKind::kRoutingOspf,
       {{"area-id", ParamType::kInteger, true},
        {"interfaces", ParamType::kStringList, true},
        {"costs", ParamType::kCostMap, false}}},
      {FeatureKind::kRoutingBgp,
       {{"local-as", ParamType::kInteger, true},
        {"neighbors", ParamType::kNeighborList, false},
        {"advertise", ParamType::kPrefixList, false}}},
  };
  return kParams.at(kind);
}

// Collects ${name} references. Returns false on an unterminated or empty
// reference.
bool CollectRefs(const std::string& text, std::set<std::string>& refs) {
  size_t pos = 0;
  while ((pos = text.find("${", pos)) != std::string::npos) {
    size_t end = text.find('}', pos + 2);
    if (end == std::string::npos || end == pos + 2) return false;
    refs.insert(text.substr(pos + 2, end - pos - 2));
    pos = end + 1;
  }
  return true;
}

bool CollectRefs(const json& value, std::set<std::string>& refs) {
  if (value.is_string()) return CollectRefs(value.get<std::string>(), refs);
  bool ok = true;
  if (value.is_array() || value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (value.is_object()) ok = CollectRefs(key, refs) && ok;
      ok = CollectRefs(item, refs) && ok;
    }
  }
  return ok;
}

bool HasRefs(const json& value) {
  std::set<std::string> refs;
  return !CollectRefs(value, refs) || !refs.empty();
}

std::string Substitute(const std::string& text,
                       const std::map<std::string, std::string>& vars) {
  std::string out;
  size_t pos = 0;
  while (true) {
    size_t start = text.find("${", pos);
    if (start == std::string::npos) break;
    size_t end = text.find('}', start + 2);
    out += text.substr(pos, start - pos);
    out += vars.at(text.substr(start + 2, end - start - 2));
    pos = end + 1;
  }
  return out + text.substr(pos);
}

json Substitute(const json& value,
                const std::map<std::string, std::string>& vars) {
  if (value.is_string()) return Substitute(value.get<std::string>(), vars);
  if (value.is_array()) {
    json out = json::array();
    for (const auto& item : value) out.push_back(Substitute(item, vars));
    return out;
  }
  if (value.is_object()) {
    json out = json::object();
    for (const auto& [key, item] : value.items()) {
      out[Substitute(key, vars)] = Substitute(item, vars);
    }
    return out;
  }
  return value;
}

std::optional<int64_t> ParseInteger(std::string_view text) {
  int64_t value = 0;
  if (text.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<int64_t> AsInteger(const json& value) {
  if (value.is_number_integer()) return value.get<int64_t>();
  if (value.is_string()) return ParseInteger(value.get<std::string>());
  return std::nullopt;
}

bool IsTypedString(const json& value, VariableType type);

// Error message when `value` does not fit `type`; elements still holding
// variable references are skipped when `skip_refs` is set.
std::optional<std::string> CheckValue(ParamType type, const json& value,
                                      bool skip_refs) {
  if (skip_refs && value.is_string() && HasRefs(value)) return std::nullopt;
  auto typed = [&](VariableType t, const char* what) -> std::optional<std::string> {
    if (IsTypedString(value, t)) return std::nullopt;
    return std::string("malformed ") + what + " " + value.dump();
  };
  switch (type) {
    case ParamType::kString:
      if (value.is_string() && !value.get<std::string>().empty()) {
        return std::nullopt;
      }
      return "expected non-empty string, got " + value.dump();
    case ParamType::kInteger:
      if (auto v = AsInteger(value); v && *v >= 0) return std::nullopt;
      return "expected non-negative integer, got " + value.dump();
    case ParamType::kAddress:
      return typed(VariableType::kIpv4Address, "address");
    case ParamType::kInterfaceAddress:
      return typed(VariableType::kIpv4Interface, "interface address");
    case ParamType::kPrefix:
      return typed(VariableType::kIpv4Prefix, "prefix");
    case ParamType::kStringList:
    case ParamType::kPrefixList: {
      if (!value.is_array()) return "expected list, got " + value.dump();
      ParamType element = type == ParamType::kStringList ? ParamType::kString
                                                         : ParamType::kPrefix;
      for (const auto& item : value) {
        if (auto error = CheckValue(element, item, skip_refs)) return error;
      }
      return std::nullopt;
    }
    case ParamType::kCostMap: {
      if (!value.is_object()) return "expected object, got " + value.dump();
      for (const auto& [key, item] : value.items()) {
        if (auto error = CheckValue(ParamType::kInteger, item, skip_refs)) {
          return "cost for " + key + ": " + *error;
        }
        if (auto v = AsInteger(item); v && *v < 1) {
          return "cost for " + key + " must be >= 1";
        }
      }
      return std::nullopt;
    }
    case ParamType::kNeighborList: {
      if (!value.is_array()) return "expected list, got " + value.dump();
      for (const auto& item : value) {
        if (!item.is_object() || !item.contains("address") ||
            !item.contains("remote-as") || item.size() != 2) {
          return "neighbor needs exactly address and remote-as: " + item.dump();
        }
        if (auto error = CheckValue(ParamType::kAddress, item["address"],
                                    skip_refs)) {
          return error;
        }
        if (auto error = CheckValue(ParamType::kInteger, item["remote-as"],
                                    skip_refs)) {
          return error;
        }
      }
      return std::nullopt;
    }
  }
  return "unsupported parameter type";
}

bool IsTypedString(const json& value, VariableType type) {
  if (type == VariableType::kInteger) {
    auto v = AsInteger(value);
    return v.has_value();
  }
  if (!value.is_string()) return false;
  const std::string text = value.get<std::string>();
  switch (type) {
    case VariableType::kString: return true;
    case VariableType::kInteger: return false;
    case VariableType::kIpv4Address: return NetAddress::Parse(text).has_value();
    case VariableType::kIpv4Interface: {
      auto parsed = InterfaceAddress::Parse(text);
      return parsed.has_value() && parsed->length <= 30;
    }
    case VariableType::kIpv4Prefix: return Prefix::Parse(text).has_value();
  }
  return false;
}

std::string Str(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string IntStr(const json& value) { return std::to_string(*AsInteger(value)); }

}  // namespace

std::string_view FeatureKindName(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kSystem: return "system";
    case FeatureKind::kInterface: return "interface";
    case FeatureKind::kRoutingStatic: return "routing_static";
    case FeatureKind::kRoutingOspf: return "routing_ospf";
    case FeatureKind::kRoutingBgp: return "routing_bgp";
  }
  return "unknown";
}

std::optional<FeatureKind> ParseFeatureKind(std::string_view name) {
  for (FeatureKind kind :
       {FeatureKind::kSystem, FeatureKind::kInterface,
        FeatureKind::kRoutingStatic, FeatureKind::kRoutingOspf,
        FeatureKind::kRoutingBgp}) {
    if (FeatureKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view VariableTypeName(VariableType type) {
  switch (type) {
    case VariableType::kString: return "string";
    case VariableType::kInteger: return "integer";
    case VariableType::kIpv4Address: return "ipv4-address";
    case VariableType::kIpv4Interface: return "ipv4-interface";
    case VariableType::kIpv4Prefix: return "ipv4-prefix";
  }
  return "unknown";
}

std::optional<VariableType> ParseVariableType(std::string_view name) {
  for (VariableType type :
       {VariableType::kString, VariableType::kInteger,
        VariableType::kIpv4Address, VariableType::kIpv4Interface,
        VariableType::kIpv4Prefix}) {
    if (VariableTypeName(type) == name) return type;
  }
  return std::nullopt;
}

DeviceTemplate ParseTemplate(std::string_view document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchemaError, std::string("$: ") + e.what());
  }
  auto fail = [](const std::string& path, const std::string& what) {
    throw Error(ErrorCode::kSchemaError, path + ": " + what);
  };
  if (!root.is_object()) fail("$", "expected object");
  for (const auto& [key, unused] : root.items()) {
    if (key != "id" && key != "name" && key != "variables" &&
        key != "features") {
      fail("$." + key, "unknown field");
    }
  }
  DeviceTemplate tmpl;
  if (!root.contains("id") || !root["id"].is_string()) {
    fail("$.id", "expected string");
  }
  tmpl.id = root["id"].get<std::string>();
  if (root.contains("name")) {
    if (!root["name"].is_string()) fail("$.name", "expected string");
    tmpl.name = root["name"].get<std::string>();
  }
  if (root.contains("variables")) {
    const json& vars = root["variables"];
    if (!vars.is_object()) fail("$.variables", "expected object");
    for (const auto& [name, type] : vars.items()) {
      auto parsed = type.is_string()
                        ? ParseVariableType(type.get<std::string>())
                        : std::nullopt;
      if (!parsed) {
        fail("$.variables." + name,
             "expected one of string, integer, ipv4-address, ipv4-interface, "
             "ipv4-prefix");
      }
      tmpl.variables[name] = *parsed;
    }
  }
  if (root.contains("features")) {
    const json& features = root["features"];
    if (!features.is_array()) fail("$.features", "expected array");
    for (size_t i = 0; i < features.size(); ++i) {
      std::string path = "$.features[" + std::to_string(i) + "]";
      const json& item = features[i];
      if (!item.is_object()) fail(path, "expected object");
      for (const auto& [key, unused] : item.items()) {
        if (key != "kind" && key != "parameters") {
          fail(path + "." + key, "unknown field");
        }
      }
      auto kind = item.contains("kind") && item["kind"].is_string()
                      ? ParseFeatureKind(item["kind"].get<std::string>())
                      : std::nullopt;
      if (!kind) {
        fail(path + ".kind",
             "expected one of system, interface, routing_static, "
             "routing_ospf, routing_bgp");
      }
      FeatureSpec feature{*kind, json::object()};
      if (item.contains("parameters")) {
        if (!item["parameters"].is_object()) {
          fail(path + ".parameters", "expected object");
        }
        feature.parameters = item["parameters"];
      }
      tmpl.features.push_back(std::move(feature));
    }
  }
  return tmpl;
}

DeviceTemplate LoadTemplateFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot read template " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseTemplate(buffer.str());
}

json TemplateToJson(const DeviceTemplate& tmpl) {
  json out = json::object();
  out["id"] = tmpl.id;
  out["name"] = tmpl.name;
  json vars = json::object();
  for (const auto& [name, type] : tmpl.variables) {
    vars[name] = std::string(VariableTypeName(type));
  }
  out["variables"] = vars;
  json features = json::array();
  for (const auto& feature : tmpl.features) {
    features.push_back({{"kind", std::string(FeatureKindName(feature.kind))},
                        {"parameters", feature.parameters}});
  }
  out["features"] = features;
  return out;
}

std::string ValidationReport::ToString() const {
  std::string out;
  for (const auto& finding : findings) {
    if (!out.empty()) out += "; ";
    if (finding.feature >= 0) {
      out += "feature " + std::to_string(finding.feature) + ": ";
    }
    out += finding.message;
  }
  return out;
}

ValidationReport ValidateTemplate(const DeviceTemplate& tmpl) {
  ValidationReport report;
  auto add = [&](int feature, std::string message) {
    report.findings.push_back(Finding{feature, std::move(message)});
  };
  if (tmpl.id.empty()) add(-1, "template id must not be empty");

  std::map<FeatureKind, int> counts;
  std::set<std::string> interfaces;
  for (size_t i = 0; i < tmpl.features.size(); ++i) {
    const int index = static_cast<int>(i);
    const FeatureSpec& feature = tmpl.features[i];
    ++counts[feature.kind];
    const auto& specs = ParamsFor(feature.kind);
    for (const auto& [key, value] : feature.parameters.items()) {
      bool known = std::any_of(specs.begin(), specs.end(),
                               [&](const ParamSpec& s) { return key == s.name; });
      if (!known) add(index, "unknown parameter " + key);
    }
    for (const ParamSpec& spec : specs) {
      if (!feature.parameters.contains(spec.name)) {
        if (spec.required) add(index, std::string("missing parameter ") + spec.name);
        continue;
      }
      const json& value = feature.parameters[spec.name];
      std::set<std::string> refs;
      if (!CollectRefs(value, refs)) {
        add(index, std::string(spec.name) + ": malformed variable reference");
        continue;
      }
      for (const auto& ref : refs) {
        if (tmpl.variables.count(ref) == 0) {
          add(index, "undeclared variable ${" + ref + "}");
        }
      }
      if (auto error = CheckValue(spec.type, value, true)) {
        add(index, std::string(spec.name) + ": " + *error);
      }
    }
    if (feature.kind == FeatureKind::kInterface &&
        feature.parameters.contains("name") &&
        feature.parameters["name"].is_string() &&
        !HasRefs(feature.parameters["name"])) {
      std::string name = feature.parameters["name"].get<std::string>();
      if (!interfaces.insert(name).second) {
        add(index, "duplicate interface " + name);
      }
    }
  }
  if (counts[FeatureKind::kSystem] == 0) add(-1, "missing system feature");
  if (counts[FeatureKind::kSystem] > 1) add(-1, "more than one system feature");
  if (counts[FeatureKind::kRoutingOspf] > 1) {
    add(-1, "more than one routing_ospf feature");
  }
  if (counts[FeatureKind::kRoutingBgp] > 1) {
    add(-1, "more than one routing_bgp feature");
  }
  return report;
}

std::string Directive::path() const {
  std::string out;
  for (const auto& segment : key) {
    if (!out.empty()) out += "/";
    out += segment;
  }
  return out;
}

std::string CompiledConfig::hash_hex() const { return HexDigest(hash); }

uint64_t HashDirectives(const std::vector<Directive>& directives) {
  std::vector<Directive> sorted = directives;
  std::sort(sorted.begin(), sorted.end());
  Fnv1a hash;
  for (const auto& directive : sorted) {
    for (const auto& segment : directive.key) hash.Update(segment).Update("\x1f");
    hash.Update("=").Update(directive.value).Update("\n");
  }
  return hash.digest();
}

CompiledConfig Compile(const DeviceTemplate& tmpl,
                       const std::map<std::string, std::string>& variables) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kCompileError, what);
  };
  ValidationReport report = ValidateTemplate(tmpl);
  if (!report.ok()) fail("template " + tmpl.id + " is invalid: " + report.ToString());
  for (const auto& [name, type] : tmpl.variables) {
    auto it = variables.find(name);
    if (it == variables.end()) fail("unbound variable " + name);
    if (!IsTypedString(json(it->second), type)) {
      fail("type mismatch: " + name + " expects " +
           std::string(VariableTypeName(type)) + ", got \"" + it->second + "\"");
    }
  }
  for (const auto& [name, value] : variables) {
    if (tmpl.variables.count(name) == 0) fail("undeclared variable " + name);
  }

  std::vector<Directive> system, interfaces, routing;
  std::set<std::string> seen_interfaces;
  for (size_t i = 0; i < tmpl.features.size(); ++i) {
    const FeatureSpec& feature = tmpl.features[i];
    json params = Substitute(feature.parameters, variables);
    for (const ParamSpec& spec : ParamsFor(feature.kind)) {
      if (!params.contains(spec.name)) continue;
      if (auto error = CheckValue(spec.type, params[spec.name], false)) {
        fail("feature " + std::to_string(i) + " (" +
             std::string(FeatureKindName(feature.kind)) + ") " + spec.name +
             ": " + *error);
      }
    }
    switch (feature.kind) {
      case FeatureKind::kSystem:
        system.push_back({{"system", "host-name"}, Str(params["host-name"])});
        system.push_back({{"system", "system-id"}, Str(params["system-id"])});
        system.push_back({{"system", "site-id"}, IntStr(params["site-id"])});
        break;
      case FeatureKind::kInterface: {
        std::string name = Str(params["name"]);
        if (!seen_interfaces.insert(name).second) {
          fail("duplicate interface " + name);
        }
        interfaces.push_back({{"interface", name, "vpn"}, IntStr(params["vpn-id"])});
        if (params.contains("address")) {
          interfaces.push_back({{"interface", name, "address"},
                                Str(params["address"])});
        }
        break;
      }
      case FeatureKind::kRoutingStatic:
        routing.push_back({{"routing", "static", Str(params["prefix"]), "next-hop"},
                           Str(params["next-hop"])});
        break;
      case FeatureKind::kRoutingOspf:
        routing.push_back({{"routing", "ospf", "area-id"}, IntStr(params["area-id"])});
        for (const auto& name : params["interfaces"]) {
          routing.push_back(
              {{"routing", "ospf", "interface", Str(name), "enabled"}, "true"});
        }
        if (params.contains("costs")) {
          for (const auto& [name, cost] : params["costs"].items()) {
            routing.push_back(
                {{"routing", "ospf", "interface", name, "cost"}, IntStr(cost)});
          }
        }
        break;
      case FeatureKind::kRoutingBgp:
        routing.push_back({{"routing", "bgp", "local-as"}, IntStr(params["local-as"])});
        if (params.contains("neighbors")) {
          for (const auto& neighbor : params["neighbors"]) {
            routing.push_back({{"routing", "bgp", "neighbor",
                                Str(neighbor["address"]), "remote-as"},
                               IntStr(neighbor["remote-as"])});
          }
        }
        if (params.contains("advertise")) {
          for (const auto& prefix : params["advertise"]) {
            routing.push_back(
                {{"routing", "bgp", "advertise", Str(prefix)}, "true"});
          }
        }
        break;
    }
  }

  CompiledConfig compiled;
  compiled.template_id = tmpl.id;
  for (auto* group : {&system, &interfaces, &routing}) {
    compiled.directives.insert(compiled.directives.end(), group->begin(),
                               group->end());
  }
  compiled.hash = HashDirectives(compiled.directives);
  return compiled;
}

ConfigDiff Diff(const CompiledConfig& old_config,
                const CompiledConfig& new_config) {
  std::map<std::vector<std::string>, std::string> before, after;
  for (const auto& d : old_config.directives) before[d.key] = d.value;
  for (const auto& d : new_config.directives) after[d.key] = d.value;
  ConfigDiff diff;
  for (const auto& [key, value] : before) {
    auto it = after.find(key);
    if (it == after.end()) {
      diff.removed.push_back({key, value});
    } else if (it->second != value) {
      diff.changed.push_back({key, value, it->second});
    }
  }
  for (const auto& [key, value] : after) {
    if (before.count(key) == 0) diff.added.push_back({key, value});
  }
  return diff;
}

DeviceConfig ToDeviceConfig(const CompiledConfig& compiled) {
  auto fail = [](const Directive& d) {
    throw Error(ErrorCode::kCompileError,
                "cannot apply directive " + d.path() + "=" + d.value);
  };
  DeviceConfig config;
  std::optional<IgpConfig> ospf;
  for (const Directive& d : compiled.directives) {
    const auto& k = d.key;
    if (k.size() == 2 && k[0] == "system") {
      if (k[1] == "host-name") {
        config.hostname = d.value;
      } else {
        config.system[k[1]] = d.value;
      }
    } else if (k.size() == 3 && k[0] == "interface") {
      InterfaceConfig* iface = config.FindInterface(k[1]);
      if (iface == nullptr) {
        config.interfaces.push_back(InterfaceConfig{k[1], std::nullopt, 1});
        iface = &config.interfaces.back();
      }
      if (k[2] == "vpn") {
        iface->vpn = static_cast<int>(*ParseInteger(d.value));
      } else if (k[2] == "address") {
        auto address = InterfaceAddress::Parse(d.value);
        if (!address) fail(d);
        iface->address = address;
      } else {
        fail(d);
      }
    } else if (k.size() == 4 && k[0] == "routing" && k[1] == "static") {
      auto prefix = Prefix::Parse(k[2]);
      auto next_hop = NetAddress::Parse(d.value);
      if (!prefix || !next_hop) fail(d);
      config.static_routes.push_back({*prefix, *next_hop});
    } else if (k.size() >= 3 && k[0] == "routing" && k[1] == "ospf") {
      if (!ospf) {
        ospf.emplace();
        ospf->protocol = IgpProtocol::kOspfLike;
        ospf->interfaces.emplace();
      }
      if (k.size() == 3 && k[2] == "area-id") {
        ospf->area_id = static_cast<int>(*ParseInteger(d.value));
      } else if (k.size() == 5 && k[2] == "interface" && k[4] == "enabled") {
        ospf->interfaces->push_back(k[3]);
      } else if (k.size() == 5 && k[2] == "interface" && k[4] == "cost") {
        ospf->costs[k[3]] = static_cast<uint32_t>(*ParseInteger(d.value));
      } else {
        fail(d);
      }
    } else if (k.size() >= 3 && k[0] == "routing" && k[1] == "bgp") {
      if (!config.bgp) {
        config.bgp.emplace();
        config.bgp->neighbors.emplace();
      }
      if (k.size() == 3 && k[2] == "local-as") {
        config.bgp->local_as = static_cast<uint32_t>(*ParseInteger(d.value));
      } else if (k.size() == 5 && k[2] == "neighbor" && k[4] == "remote-as") {
        auto address = NetAddress::Parse(k[3]);
        if (!address) fail(d);
        config.bgp->neighbors->push_back(
            {*address, static_cast<uint32_t>(*ParseInteger(d.value))});
      } else if (k.size() == 4 && k[2] == "advertise") {
        auto prefix = Prefix::Parse(k[3]);
        if (!prefix) fail(d);
        config.bgp->originate.push_back(*prefix);
      } else {
        fail(d);
      }
    } else {
      fail(d);
    }
  }
  if (ospf) config.igps.push_back(*ospf);
  return config;
}

}  // namespace sdwanlab::templates
