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
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "json.hpp"
#include "sdwanlab/error.h"
#include "sdwanlab/templates/template.h"
#include "support/oracles.h"

namespace sdwanlab::templates {
namespace {

using nlohmann::json;

std::string TemplatePath(const std::string& name) {
  return (testing::SourceDir() / "templates" / (name + ".json")).string();
}

std::map<std::string, std::string> Branch3Variables() {
  return {{"hostname", "E40"},         {"system_ip", "10.4.255.1"},
          {"site_id", "40"},           {"wan_ip", "10.4.0.2/30"},
          {"lan_ip", "10.4.1.1/24"},   {"sp_peer", "10.4.0.1"}};
}

DeviceTemplate Minimal() {
  return ParseTemplate(R"({
    "id": "t",
    "variables": {"name": "string", "sid": "integer"},
    "features": [
      {"kind": "system", "parameters": {"host-name": "${name}", "system-id": "1.1.1.1", "site-id": "${sid}"}},
      {"kind": "interface", "parameters": {"name": "eth0", "vpn-id": 0, "address": "192.0.2.1/30"}}
    ]
  })");
}

ErrorCode CompileErrorCode(const DeviceTemplate& tmpl,
                           const std::map<std::string, std::string>& vars,
                           std::string* message = nullptr) {
  try {
    Compile(tmpl, vars);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(Parse, ReadsCanonicalTemplates) {
  for (const char* name : {"branch3", "branch4"}) {
    DeviceTemplate tmpl = LoadTemplateFile(TemplatePath(name));
    EXPECT_EQ(tmpl.features.size(), 5u) << name;
    EXPECT_EQ(tmpl.variables.size(), 6u) << name;
    EXPECT_TRUE(ValidateTemplate(tmpl).ok()) << ValidateTemplate(tmpl).ToString();
  }
}

TEST(Parse, RoundTripsThroughJson) {
  DeviceTemplate tmpl = LoadTemplateFile(TemplatePath("branch3"));
  DeviceTemplate again = ParseTemplate(TemplateToJson(tmpl).dump());
  EXPECT_EQ(TemplateToJson(again), TemplateToJson(tmpl));
}

TEST(Parse, SchemaErrorsNameTheField) {
  struct Case {
    const char* document;
    const char* path;
  };
  const Case cases[] = {
      {R"([])", "$"},
      {R"({"name": "x"})", "$.id"},
      {R"({"id": "x", "colour": 1})", "$.colour"},
      {R"({"id": "x", "variables": {"v": "float"}})", "$.variables.v"},
      {R"({"id": "x", "features": [{"kind": "routing_rip"}]})", "$.features[0].kind"},
      {R"({"id": "x", "features": [{"kind": "system", "extra": 1}]})", "$.features[0].extra"},
      {R"({"id": "x", "features": [{"kind": "system", "parameters": []}]})",
       "$.features[0].parameters"},
      {R"({"id": )", "$"},
  };
  for (const auto& c : cases) {
    try {
      ParseTemplate(c.document);
      ADD_FAILURE() << c.document;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSchemaError);
      EXPECT_EQ(std::string(e.what()).rfind(c.path, 0), 0u) << e.what();
    }
  }
}

TEST(Validate, ReportsEveryProblemWithItsFeature) {
  DeviceTemplate tmpl = ParseTemplate(R"({
    "id": "bad",
    "variables": {"x": "string"},
    "features": [
      {"kind": "interface", "parameters": {"name": "eth0", "vpn-id": -1, "speed": 10}},
      {"kind": "interface", "parameters": {"name": "eth0", "vpn-id": 1, "address": "${y}"}},
      {"kind": "routing_static", "parameters": {"prefix": "10.0.0.0/33"}},
      {"kind": "routing_ospf", "parameters": {"area-id": 0, "interfaces": ["eth0"], "costs": {"eth0": 0}}},
      {"kind": "routing_bgp", "parameters": {"local-as": 1, "neighbors": [{"address": "10.0.0.1"}]}},
      {"kind": "routing_bgp", "parameters": {"local-as": 2, "advertise": "10.0.0.0/8"}}
    ]
  })");
  ValidationReport report = ValidateTemplate(tmpl);
  std::multiset<int> by_feature;
  for (const auto& finding : report.findings) by_feature.insert(finding.feature);
  EXPECT_EQ(by_feature.count(0), 2u);  // vpn-id, speed
  EXPECT_EQ(by_feature.count(1), 2u);  // undeclared ${y}, duplicate eth0
  EXPECT_EQ(by_feature.count(2), 2u);  // prefix, missing next-hop
  EXPECT_EQ(by_feature.count(3), 1u);
  EXPECT_EQ(by_feature.count(4), 1u);
  EXPECT_EQ(by_feature.count(5), 1u);
  // Template level: no system feature, two routing_bgp features.
  EXPECT_EQ(by_feature.count(-1), 2u);
  EXPECT_NE(report.ToString().find("undeclared variable ${y}"), std::string::npos);
}

TEST(Validate, MalformedReferenceIsAFinding) {
  DeviceTemplate tmpl = Minimal();
  tmpl.features[0].parameters["host-name"] = "${name";
  EXPECT_FALSE(ValidateTemplate(tmpl).ok());
  tmpl.features[0].parameters["host-name"] = "${}";
  EXPECT_FALSE(ValidateTemplate(tmpl).ok());
}

TEST(Compile, CanonicalBranch3ProducesExpectedDirectives) {
  CompiledConfig compiled =
      Compile(LoadTemplateFile(TemplatePath("branch3")), Branch3Variables());
  std::map<std::string, std::string> got;
  for (const auto& d : compiled.directives) got[d.path()] = d.value;
  const std::map<std::string, std::string> expected = {
      {"system/host-name", "E40"},
      {"system/system-id", "10.4.255.1"},
      {"system/site-id", "40"},
      {"interface/eth0/vpn", "0"},
      {"interface/eth0/address", "10.4.0.2/30"},
      {"interface/eth1/vpn", "1"},
      {"interface/eth1/address", "10.4.1.1/24"},
      {"routing/ospf/area-id", "0"},
      {"routing/ospf/interface/eth1/enabled", "true"},
      {"routing/bgp/local-as", "65004"},
      {"routing/bgp/neighbor/10.4.0.1/remote-as", "65020"},
      {"routing/bgp/advertise/10.4.0.0/16", "true"},
  };
  EXPECT_EQ(got, expected);
  EXPECT_EQ(compiled.directives.size(), expected.size());
  EXPECT_EQ(compiled.directives.front().key.front(), "system");
  EXPECT_EQ(compiled.template_id, "branch3-border");
}

TEST(Compile, UnboundVariable) {
  auto vars = Branch3Variables();
  vars.erase("lan_ip");
  std::string message;
  EXPECT_EQ(CompileErrorCode(LoadTemplateFile(TemplatePath("branch3")), vars, &message),
            ErrorCode::kCompileError);
  EXPECT_NE(message.find("lan_ip"), std::string::npos);
}

TEST(Compile, UndeclaredVariable) {
  auto vars = Branch3Variables();
  vars["colour"] = "blue";
  EXPECT_EQ(CompileErrorCode(LoadTemplateFile(TemplatePath("branch3")), vars),
            ErrorCode::kCompileError);
}

TEST(Compile, TypeMismatches) {
  const DeviceTemplate tmpl = LoadTemplateFile(TemplatePath("branch3"));
  const std::vector<std::pair<std::string, std::string>> bad = {
      {"site_id", "forty"},        {"system_ip", "10.4.255.1/32"},
      {"system_ip", "10.4.256.1"}, {"wan_ip", "10.4.0.2"},
      {"wan_ip", "10.4.0.2/31"},   {"sp_peer", "peer"},
  };
  for (const auto& [name, value] : bad) {
    auto vars = Branch3Variables();
    vars[name] = value;
    std::string message;
    EXPECT_EQ(CompileErrorCode(tmpl, vars, &message), ErrorCode::kCompileError)
        << name << "=" << value;
    EXPECT_NE(message.find(name), std::string::npos) << message;
  }
}

TEST(Compile, SubstitutedValueIsCheckedAgainstTheParameter) {
  // A string variable placed where an address is required.
  DeviceTemplate tmpl = Minimal();
  tmpl.variables["peer"] = VariableType::kString;
  tmpl.features.push_back(
      {FeatureKind::kRoutingStatic,
       json{{"prefix", "0.0.0.0/0"}, {"next-hop", "${peer}"}}});
  ASSERT_TRUE(ValidateTemplate(tmpl).ok());
  EXPECT_EQ(CompileErrorCode(tmpl, {{"name", "a"}, {"sid", "1"}, {"peer", "nowhere"}}),
            ErrorCode::kCompileError);
  EXPECT_NO_THROW(Compile(tmpl, {{"name", "a"}, {"sid", "1"}, {"peer", "192.0.2.2"}}));
}

TEST(Compile, InvalidTemplateIsACompileError) {
  DeviceTemplate tmpl = Minimal();
  tmpl.features.erase(tmpl.features.begin());
  EXPECT_EQ(CompileErrorCode(tmpl, {{"name", "a"}, {"sid", "1"}}),
            ErrorCode::kCompileError);
}

TEST(Compile, DeterministicAndSensitiveToValues) {
  const DeviceTemplate tmpl = LoadTemplateFile(TemplatePath("branch3"));
  CompiledConfig a = Compile(tmpl, Branch3Variables());
  CompiledConfig b = Compile(tmpl, Branch3Variables());
  EXPECT_EQ(a.hash, b.hash);
  EXPECT_EQ(a.directives, b.directives);
  EXPECT_EQ(a.hash_hex().size(), 16u);
  auto vars = Branch3Variables();
  vars["hostname"] = "E41";
  EXPECT_NE(Compile(tmpl, vars).hash, a.hash);
}

std::vector<Directive> RandomDirectives(std::mt19937_64& rng) {
  std::vector<Directive> out;
  std::uniform_int_distribution<int> count(0, 12), pick(0, 5);
  std::set<std::vector<std::string>> keys;
  for (int i = count(rng); i > 0; --i) {
    std::vector<std::string> key = {"k" + std::to_string(pick(rng)),
                                    "s" + std::to_string(pick(rng))};
    if (!keys.insert(key).second) continue;
    out.push_back({key, "v" + std::to_string(pick(rng))});
  }
  return out;
}

TEST(Hash, IndependentOfDirectiveOrder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Directive> directives = RandomDirectives(rng);
    uint64_t expected = HashDirectives(directives);
    std::shuffle(directives.begin(), directives.end(), rng);
    EXPECT_EQ(HashDirectives(directives), expected);
  }
}

// Applying a diff to the old directive set must reproduce the new one.
TEST(Diff, ApplyingTheDiffReproducesTheTarget) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    CompiledConfig before, after;
    before.directives = RandomDirectives(rng);
    after.directives = RandomDirectives(rng);
    ConfigDiff diff = Diff(before, after);

    std::map<std::vector<std::string>, std::string> state;
    for (const auto& d : before.directives) state[d.key] = d.value;
    for (const auto& d : diff.removed) {
      ASSERT_EQ(state.at(d.key), d.value);
      state.erase(d.key);
    }
    for (const auto& c : diff.changed) {
      ASSERT_EQ(state.at(c.key), c.old_value);
      ASSERT_NE(c.old_value, c.new_value);
      state[c.key] = c.new_value;
    }
    for (const auto& d : diff.added) {
      ASSERT_EQ(state.count(d.key), 0u);
      state[d.key] = d.value;
    }
    std::map<std::vector<std::string>, std::string> target;
    for (const auto& d : after.directives) target[d.key] = d.value;
    EXPECT_EQ(state, target);
    EXPECT_EQ(diff.empty(), before.directives.size() == after.directives.size() &&
                                HashDirectives(before.directives) ==
                                    HashDirectives(after.directives));
    EXPECT_TRUE(Diff(after, after).empty());
  }
}

TEST(DeviceConfig, CanonicalBranch3BecomesABorderRouter) {
  DeviceConfig config =
      ToDeviceConfig(Compile(LoadTemplateFile(TemplatePath("branch3")), Branch3Variables()));
  EXPECT_EQ(config.hostname, "E40");
  ASSERT_NE(config.FindInterface("eth0"), nullptr);
  EXPECT_EQ(config.FindInterface("eth0")->vpn, 0);
  EXPECT_EQ(config.FindInterface("eth1")->address->ToString(), "10.4.1.1/24");
  ASSERT_EQ(config.igps.size(), 1u);
  EXPECT_EQ(config.igps[0].protocol, IgpProtocol::kOspfLike);
  ASSERT_TRUE(config.igps[0].interfaces.has_value());
  EXPECT_EQ(*config.igps[0].interfaces, std::vector<std::string>{"eth1"});
  ASSERT_TRUE(config.bgp.has_value());
  EXPECT_EQ(config.bgp->local_as, 65004u);
  ASSERT_EQ(config.bgp->neighbors->size(), 1u);
  EXPECT_EQ((*config.bgp->neighbors)[0].remote_as, 65020u);
  ASSERT_EQ(config.bgp->originate.size(), 1u);
  EXPECT_EQ(config.bgp->originate[0].ToString(), "10.4.0.0/16");
}

TEST(DeviceConfig, UnknownDirectiveIsRejected) {
  CompiledConfig compiled;
  compiled.directives = {{{"routing", "rip", "enabled"}, "true"}};
  EXPECT_THROW(ToDeviceConfig(compiled), Error);
}

}  // namespace
}  // namespace sdwanlab::templates
