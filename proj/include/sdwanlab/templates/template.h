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

#ifndef SDWANLAB_TEMPLATES_TEMPLATE_H_
#define SDWANLAB_TEMPLATES_TEMPLATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sdwanlab/sim/device_config.h"

namespace sdwanlab::templates {

enum class FeatureKind {
  kSystem,
  kInterface,
  kRoutingStatic,
  kRoutingOspf,
  kRoutingBgp,
};

std::string_view FeatureKindName(FeatureKind kind);
std::optional<FeatureKind> ParseFeatureKind(std::string_view name);

enum class VariableType {
  kString,
  kInteger,
  kIpv4Address,
  kIpv4Interface,
  kIpv4Prefix,
};

std::string_view VariableTypeName(VariableType type);
std::optional<VariableType> ParseVariableType(std::string_view name);

// Kind-specific parameters stay as a JSON tree until compile time, when
// ${name} references are substituted and every value is type-checked.
struct FeatureSpec {
  FeatureKind kind = FeatureKind::kSystem;
  nlohmann::json parameters = nlohmann::json::object();
};

struct DeviceTemplate {
  std::string id;
  std::string name;
  std::vector<FeatureSpec> features;
  std::map<std::string, VariableType> variables;
};

// Throws Error(kSchemaError) on documents that are not template-shaped.
// Semantic problems are left to ValidateTemplate.
DeviceTemplate ParseTemplate(std::string_view document);
DeviceTemplate LoadTemplateFile(const std::string& path);
nlohmann::json TemplateToJson(const DeviceTemplate& tmpl);

struct Finding {
  int feature = -1;  // index into features, -1 for template-level findings
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  std::string ToString() const;
};

ValidationReport ValidateTemplate(const DeviceTemplate& tmpl);

// One leaf of the compiled configuration, e.g. {"system","host-name"} = "E40".
struct Directive {
  std::vector<std::string> key;
  std::string value;

  std::string path() const;  // slash-joined key
  friend auto operator<=>(const Directive&, const Directive&) = default;
};

struct CompiledConfig {
  std::string template_id;
  // Ordered system, then interfaces, then routing.
  std::vector<Directive> directives;
  uint64_t hash = 0;

  std::string hash_hex() const;
};

// Throws Error(kCompileError) for invalid templates, unbound or undeclared
// variables and values of the wrong type.
CompiledConfig Compile(const DeviceTemplate& tmpl,
                       const std::map<std::string, std::string>& variables);

uint64_t HashDirectives(const std::vector<Directive>& directives);

struct DirectiveChange {
  std::vector<std::string> key;
  std::string old_value;
  std::string new_value;
};

struct ConfigDiff {
  std::vector<Directive> added;
  std::vector<Directive> removed;
  std::vector<DirectiveChange> changed;

  bool empty() const {
    return added.empty() && removed.empty() && changed.empty();
  }
  size_t size() const { return added.size() + removed.size() + changed.size(); }
};

ConfigDiff Diff(const CompiledConfig& old_config,
                const CompiledConfig& new_config);

// Executable device configuration described by the directives. Throws
// Error(kCompileError) for directives it cannot interpret.
DeviceConfig ToDeviceConfig(const CompiledConfig& compiled);

}  // namespace sdwanlab::templates

#endif  // SDWANLAB_TEMPLATES_TEMPLATE_H_
