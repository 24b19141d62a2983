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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "sdwanlab/error.h"
#include "sdwanlab/scenario/scenario.h"
#include "sdwanlab/sdwan/fabric.h"
#include "sdwanlab/sdwan/lab.h"
#include "sdwanlab/templates/template.h"
#include "support/oracles.h"

namespace sdwanlab::sdwan {
namespace {

constexpr char kE40Serial[] = "VEDGE-40-0001";

Lab FreshLab() {
  return MakeLab(scenario::LoadScenarioFile(testing::CanonicalScenario("sdwan")));
}

Lab ProvisionedLab() {
  Lab lab = FreshLab();
  BringUp(lab);
  return lab;
}

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

const scenario::ProvisioningSpec& ProvisioningFor(const Lab& lab,
                                                  const std::string& serial) {
  for (const auto& p : lab.spec.sdwan->provisioning) {
    if (p.serial == serial) return p;
  }
  throw Error(ErrorCode::kNotFound, serial);
}

PushResult PushCanonical(Lab& lab, const std::string& serial) {
  const auto& p = ProvisioningFor(lab, serial);
  return lab.fabric->PushTemplate(LoadProvisioningTemplate(lab.spec, p), serial,
                                  p.variables);
}

uint64_t ConfigHash(Lab& lab, const char* node) {
  return lab.sim->network().node(NodeId(node)).config.Hash();
}

bool DataCentreKnowsBranch3(const Lab& lab) {
  auto prefix = *Prefix::Parse("10.4.0.0/16");
  for (const char* id : {"DC-R1", "DC-R2"}) {
    if (lab.sim->RibOf(NodeId(id)).Find(prefix) == nullptr) return false;
  }
  return true;
}

std::string RandomSerial(std::mt19937_64& rng) {
  static const char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-";
  std::uniform_int_distribution<int> length(1, 20), pick(0, sizeof(kAlphabet) - 2);
  std::string out;
  for (int i = length(rng); i > 0; --i) out += kAlphabet[pick(rng)];
  return out;
}

TEST(Certificates, DeterministicPerSerialAndRoot) {
  EXPECT_EQ(CertificateToken("A", "root"), CertificateToken("A", "root"));
  EXPECT_NE(CertificateToken("A", "root"), CertificateToken("B", "root"));
  EXPECT_NE(CertificateToken("A", "root"), CertificateToken("A", "other"));
}

TEST(Fabric, ManagerStartsSyncedAndOthersBootstrapped) {
  Lab lab = FreshLab();
  for (const auto& record : lab.fabric->Records()) {
    if (record.node == lab.spec.sdwan->manage) {
      EXPECT_EQ(record.state, OnboardingState::kSynced);
      EXPECT_TRUE(record.identity.certificate.has_value());
    } else {
      EXPECT_EQ(record.state, OnboardingState::kBootstrapped) << record.node.str();
    }
  }
  ASSERT_EQ(lab.fabric->Inventory().size(), 1u);
}

TEST(Fabric, ControllerBringUpOrder) {
  Lab lab = FreshLab();
  const NodeId smart = lab.spec.sdwan->smart;
  EXPECT_EQ(CodeOf([&] { lab.fabric->Sync(smart); }), ErrorCode::kControllerNotReady);
  EXPECT_EQ(CodeOf([&] { lab.fabric->UploadAllowlist({kE40Serial}); }),
            ErrorCode::kControllerNotReady);
  EXPECT_EQ(CodeOf([&] { lab.fabric->Sync(NodeId("E40")); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { lab.fabric->IssueCertificate(NodeId("DC-R1")); }),
            ErrorCode::kUnknownDevice);
  std::string token = lab.fabric->IssueCertificate(smart);
  EXPECT_EQ(lab.fabric->IssueCertificate(smart), token);
  EXPECT_EQ(lab.fabric->FindByNode(smart)->state, OnboardingState::kAuthenticating);
  lab.fabric->Sync(smart);
  EXPECT_EQ(lab.fabric->FindByNode(smart)->state, OnboardingState::kSynced);
}

TEST(Onboarding, ErrorPrecedence) {
  Lab lab = FreshLab();
  // Controllers not ready beats an unknown serial.
  EXPECT_EQ(CodeOf([&] { lab.fabric->OnboardEdge("NOPE"); }),
            ErrorCode::kControllerNotReady);
  BringUpControllers(lab);
  EXPECT_EQ(CodeOf([&] { lab.fabric->OnboardEdge("NOPE"); }),
            ErrorCode::kSerialNotAllowed);

  // Cut E40 off, then check that an allowlist miss still wins over reachability.
  lab.fabric->CliExec(NodeId("E40"), "delete-interface eth0");
  lab.fabric->UploadAllowlist({});
  EXPECT_EQ(CodeOf([&] { lab.fabric->OnboardEdge(kE40Serial); }),
            ErrorCode::kSerialNotAllowed);
  lab.fabric->UploadAllowlist({kE40Serial});
  EXPECT_EQ(CodeOf([&] { lab.fabric->OnboardEdge(kE40Serial); }),
            ErrorCode::kUnreachable);
  const DeviceRecord* record = lab.fabric->FindBySerial(kE40Serial);
  EXPECT_EQ(record->state, OnboardingState::kBootstrapped);
  EXPECT_FALSE(record->failure_reason.empty());

  lab.fabric->CliExec(NodeId("E40"), "set-interface eth0 10.4.0.2/30 0");
  DeviceRecord onboarded = lab.fabric->OnboardEdge(kE40Serial);
  EXPECT_EQ(onboarded.state, OnboardingState::kSynced);
  EXPECT_TRUE(onboarded.failure_reason.empty());
  EXPECT_TRUE(lab.sim->network().node(NodeId("E40")).overlay_active);
}

TEST(Onboarding, NonAllowlistedSerialsNeverJoin) {
  Lab lab = FreshLab();
  BringUpControllers(lab);
  const std::set<std::string> allowed(lab.spec.sdwan->allowlist.begin(),
                                      lab.spec.sdwan->allowlist.end());
  std::vector<std::string> probes = {"VEDGE-50-0001", "vedge-40-0001",
                                     "VEDGE-40-0001 ", ""};
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) probes.push_back(RandomSerial(rng));

  // Narrow the allowlist so a real edge serial is also outside it.
  lab.fabric->UploadAllowlist({kE40Serial});
  for (const auto& serial : probes) {
    if (serial == kE40Serial) continue;
    EXPECT_EQ(CodeOf([&] { lab.fabric->OnboardEdge(serial); }),
              ErrorCode::kSerialNotAllowed)
        << serial;
  }
  for (const auto& record : lab.fabric->Inventory()) {
    if (record.identity.role == Role::kEdge) {
      ADD_FAILURE() << record.identity.serial << " reached the inventory";
    }
  }
  EXPECT_FALSE(lab.sim->network().node(NodeId("E50")).overlay_active);
  EXPECT_EQ(lab.fabric->Connections().size(), 0u);
}

TEST(Onboarding, EveryInventoriedEdgeWasAllowlisted) {
  Lab lab = ProvisionedLab();
  int edges = 0;
  for (const auto& record : lab.fabric->Inventory()) {
    if (record.identity.role != Role::kEdge) continue;
    ++edges;
    EXPECT_TRUE(record.allowlisted_at_onboarding);
    EXPECT_EQ(lab.fabric->allowlist().count(record.identity.serial), 1u);
    EXPECT_TRUE(record.identity.certificate.has_value());
  }
  EXPECT_EQ(edges, 2);
}

TEST(Onboarding, EachEdgeHoldsLiveControlConnections) {
  Lab lab = ProvisionedLab();
  std::map<NodeId, std::set<NodeId>> peers;
  for (const auto& c : lab.fabric->Connections()) {
    EXPECT_TRUE(c.alive);
    peers[c.edge].insert(c.controller);
  }
  const std::set<NodeId> expected = {lab.spec.sdwan->manage, lab.spec.sdwan->smart};
  EXPECT_EQ(peers[NodeId("E40")], expected);
  EXPECT_EQ(peers[NodeId("E50")], expected);
}

TEST(Push, RequiresSyncedDevice) {
  Lab lab = FreshLab();
  BringUpControllers(lab);
  EXPECT_EQ(CodeOf([&] { PushCanonical(lab, kE40Serial); }), ErrorCode::kDeviceNotSynced);
  EXPECT_EQ(CodeOf([&] {
              lab.fabric->PushTemplate(templates::DeviceTemplate(), "NOPE", {});
            }),
            ErrorCode::kUnknownDevice);
}

TEST(Push, TurnsTheEdgeIntoABorderRouter) {
  Lab lab = FreshLab();
  BringUpControllers(lab);
  lab.fabric->OnboardEdge(kE40Serial);
  EXPECT_FALSE(DataCentreKnowsBranch3(lab));
  EXPECT_FALSE(lab.sim->Reachable(NodeId("vManage"), NodeId("B3-H1")));

  PushResult result = PushCanonical(lab, kE40Serial);
  EXPECT_NE(result.previous_hash, result.config_hash);
  EXPECT_EQ(result.config_hash, ConfigHash(lab, "E40"));
  EXPECT_EQ(result.diff.added.size(), result.compiled.directives.size());
  EXPECT_TRUE(DataCentreKnowsBranch3(lab));
  EXPECT_TRUE(lab.sim->Reachable(NodeId("vManage"), NodeId("B3-H1")));

  const DeviceRecord* record = lab.fabric->FindBySerial(kE40Serial);
  EXPECT_EQ(record->state, OnboardingState::kManaged);
  EXPECT_EQ(record->mode, ManagementMode::kTemplateManaged);
  EXPECT_EQ(record->template_id, "branch3-border");
  ASSERT_NE(lab.fabric->PushedConfig(kE40Serial), nullptr);
  EXPECT_EQ(lab.fabric->PushedConfig(kE40Serial)->hash, result.compiled.hash);
}

TEST(Push, RepeatedPushIsANoOp) {
  Lab lab = ProvisionedLab();
  uint64_t before = ConfigHash(lab, "E40");
  PushResult again = PushCanonical(lab, kE40Serial);
  EXPECT_TRUE(again.diff.empty());
  EXPECT_EQ(again.previous_hash, before);
  EXPECT_EQ(again.config_hash, before);
}

TEST(Push, ChangedVariableShowsUpInTheDiff) {
  Lab lab = ProvisionedLab();
  const auto& p = ProvisioningFor(lab, kE40Serial);
  auto vars = p.variables;
  vars["hostname"] = "E40-renamed";
  PushResult result = lab.fabric->PushTemplate(LoadProvisioningTemplate(lab.spec, p),
                                               kE40Serial, vars);
  ASSERT_EQ(result.diff.size(), 1u);
  ASSERT_EQ(result.diff.changed.size(), 1u);
  EXPECT_EQ(result.diff.changed[0].new_value, "E40-renamed");
}

class FailedPush : public ::testing::Test {
 protected:
  void SetUp() override {
    lab_ = FreshLab();
    BringUpControllers(lab_);
    lab_.fabric->OnboardEdge(kE40Serial);
    const auto& p = ProvisioningFor(lab_, kE40Serial);
    tmpl_ = LoadProvisioningTemplate(lab_.spec, p);
    vars_ = p.variables;
    hash_ = ConfigHash(lab_, "E40");
  }

  void ExpectUntouched() {
    EXPECT_EQ(ConfigHash(lab_, "E40"), hash_);
    const DeviceRecord* record = lab_.fabric->FindBySerial(kE40Serial);
    EXPECT_EQ(record->state, OnboardingState::kSynced);
    EXPECT_EQ(record->mode, ManagementMode::kLocal);
    EXPECT_EQ(lab_.sim->network().node(NodeId("E40")).mode, ManagementMode::kLocal);
    EXPECT_EQ(lab_.fabric->PushedConfig(kE40Serial), nullptr);
    EXPECT_FALSE(DataCentreKnowsBranch3(lab_));
  }

  ErrorCode Push() {
    return CodeOf([&] { lab_.fabric->PushTemplate(tmpl_, kE40Serial, vars_); });
  }

  Lab lab_;
  templates::DeviceTemplate tmpl_;
  std::map<std::string, std::string> vars_;
  uint64_t hash_ = 0;
};

TEST_F(FailedPush, CompileError) {
  vars_.erase("lan_ip");
  EXPECT_EQ(Push(), ErrorCode::kCompileError);
  ExpectUntouched();
}

TEST_F(FailedPush, WrongSiteAs) {
  tmpl_.features.back().parameters["local-as"] = 65005;
  EXPECT_EQ(Push(), ErrorCode::kPushFailed);
  ExpectUntouched();
  EXPECT_NE(lab_.fabric->FindBySerial(kE40Serial)->failure_reason.find("push failed"),
            std::string::npos);
}

TEST_F(FailedPush, MissingPort) {
  tmpl_.features[2].parameters["name"] = "eth7";
  EXPECT_EQ(Push(), ErrorCode::kPushFailed);
  ExpectUntouched();
}

TEST_F(FailedPush, ConfigurationThatCutsTheControlPlane) {
  vars_["wan_ip"] = "10.4.0.6/30";
  vars_["sp_peer"] = "10.4.0.5";
  EXPECT_EQ(Push(), ErrorCode::kPushFailed);
  ExpectUntouched();
}

std::string SampleArgs(const std::string& command) {
  if (command == "set-interface") return " eth1 10.4.9.1/24";
  if (command == "delete-interface") return " eth1";
  if (command == "set-static-route") return " 10.99.0.0/16 10.4.0.1";
  if (command == "delete-static-route") return " 10.2.0.0/16";
  if (command == "set-hostname") return " rogue";
  if (command == "set-bgp-neighbor") return " 10.4.0.1 65020";
  if (command == "delete-bgp-neighbor") return " 10.4.0.1";
  return "";
}

TEST(Lockdown, EveryWriteIsDeniedOnManagedEdges) {
  Lab lab = ProvisionedLab();
  for (const char* edge : {"E40", "E50"}) {
    const uint64_t hash = ConfigHash(lab, edge);
    for (const auto& command : WriteCommands()) {
      for (const std::string& args : {std::string(), SampleArgs(command), std::string(" x y z")}) {
        try {
          lab.fabric->CliExec(NodeId(edge), command + args);
          ADD_FAILURE() << edge << ": " << command << args << " was accepted";
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kPermissionDenied) << command << args;
          EXPECT_EQ(std::string(e.what()), std::string(kReadOnlyMessage));
        }
      }
    }
    for (const auto& command : ReadCommands()) {
      EXPECT_NO_THROW(lab.fabric->CliExec(NodeId(edge), command)) << command;
    }
    EXPECT_EQ(ConfigHash(lab, edge), hash);
  }
}

TEST(Lockdown, UnmanagedDevicesAcceptWrites) {
  Lab lab = FreshLab();
  EXPECT_EQ(lab.fabric->CliExec(NodeId("E40"), "set-hostname edge40"), "ok");
  EXPECT_EQ(lab.sim->network().node(NodeId("E40")).config.hostname, "edge40");
}

TEST(Cli, CommandErrors) {
  Lab lab = FreshLab();
  EXPECT_EQ(CodeOf([&] { lab.fabric->CliExec(NodeId("E40"), "reboot"); }),
            ErrorCode::kUnknownCommand);
  EXPECT_EQ(CodeOf([&] { lab.fabric->CliExec(NodeId("E40"), ""); }),
            ErrorCode::kUnknownCommand);
  EXPECT_EQ(CodeOf([&] { lab.fabric->CliExec(NodeId("E40"), "set-interface eth9 1.2.3.4/24"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { lab.fabric->CliExec(NodeId("E40"), "set-hostname"); }),
            ErrorCode::kInvalidArgument);
  std::string routes = lab.fabric->CliExec(NodeId("E40"), "show-routes");
  EXPECT_NE(routes.find("10.2.0.0/16"), std::string::npos) << routes;
}

TEST(Inventory, RecordsMirrorDeviceState) {
  for (bool provision : {false, true}) {
    Lab lab = FreshLab();
    if (provision) BringUp(lab); else BringUpControllers(lab);
    std::set<std::string> serials;
    for (const auto& record : lab.fabric->Records()) {
      const sim::Node& node = lab.sim->network().node(record.node);
      EXPECT_EQ(record.state, node.onboarding_state) << record.node.str();
      EXPECT_EQ(record.mode, node.mode) << record.node.str();
      EXPECT_TRUE(serials.insert(record.identity.serial).second);
      EXPECT_EQ(lab.fabric->FindByNode(record.node)->identity.serial,
                record.identity.serial);
    }
    EXPECT_EQ(serials.size(), 5u);
    auto inventory = lab.fabric->Inventory();
    EXPECT_TRUE(std::is_sorted(inventory.begin(), inventory.end(),
                               [](const DeviceRecord& a, const DeviceRecord& b) {
                                 return a.identity.serial < b.identity.serial;
                               }));
    for (const auto& record : inventory) {
      EXPECT_GE(record.state, OnboardingState::kSynced);
      EXPECT_TRUE(record.reachable) << record.node.str();
    }
    EXPECT_EQ(inventory.size(), provision ? 5u : 3u);
  }
}

TEST(Lab, TraditionalScenarioHasNoFabric) {
  Lab lab = MakeLab(scenario::LoadScenarioFile(testing::CanonicalScenario("traditional")));
  EXPECT_EQ(lab.fabric, nullptr);
  EXPECT_NO_THROW(BringUp(lab));
}

}  // namespace
}  // namespace sdwanlab::sdwan
