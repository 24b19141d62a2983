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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>

#include "httplib.h"
#include "json.hpp"
#include "sdwanlab/error.h"
#include "sdwanlab/gateway/api.h"
#include "sdwanlab/gateway/cli.h"
#include "sdwanlab/gateway/session.h"
#include "sdwanlab/gateway/status.h"
#include "support/oracles.h"

namespace sdwanlab::gateway {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const ErrorCode kAllCodes[] = {
    ErrorCode::kInvalidArgument,    ErrorCode::kSchedulingInPast,
    ErrorCode::kSchemaError,        ErrorCode::kValidationError,
    ErrorCode::kDisconnectedArea,   ErrorCode::kNonConvergence,
    ErrorCode::kUnreachable,        ErrorCode::kControllerNotReady,
    ErrorCode::kSerialNotAllowed,   ErrorCode::kDeviceNotSynced,
    ErrorCode::kCompileError,       ErrorCode::kPushFailed,
    ErrorCode::kPermissionDenied,   ErrorCode::kUnknownCommand,
    ErrorCode::kUnknownEndpoint,    ErrorCode::kUnknownDevice,
    ErrorCode::kNotFound,           ErrorCode::kInternal,
};

fs::path TempDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("sdwanlab_gateway_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string ScenarioPath(const std::string& name) {
  return testing::CanonicalScenario(name).string();
}

std::string TemplatePath(const std::string& name) {
  return (testing::SourceDir() / "templates" / (name + ".json")).string();
}

TEST(Status, EveryCodeHasOneStatusAndExitClass) {
  for (ErrorCode code : kAllCodes) {
    int status = HttpStatus(code);
    EXPECT_TRUE(status == 400 || status == 404 || status == 409 || status == 500)
        << ErrorCodeName(code);
    int exit = ExitCode(code);
    EXPECT_TRUE(exit == kExitDomain || exit == kExitUsage) << ErrorCodeName(code);
  }
  EXPECT_EQ(HttpStatus(ErrorCode::kSchemaError), 400);
  EXPECT_EQ(HttpStatus(ErrorCode::kUnknownDevice), 404);
  EXPECT_EQ(HttpStatus(ErrorCode::kDeviceNotSynced), 409);
  EXPECT_EQ(HttpStatus(ErrorCode::kSerialNotAllowed), 409);
  EXPECT_EQ(HttpStatus(ErrorCode::kInternal), 500);
  EXPECT_EQ(ExitCode(ErrorCode::kInvalidArgument), kExitUsage);
  EXPECT_EQ(ExitCode(ErrorCode::kPermissionDenied), kExitDomain);
}

TEST(Status, OneLineFoldsNewlines) {
  std::string line = OneLine(Error(ErrorCode::kCompileError, "a\nb"));
  EXPECT_EQ(line, "CompileError: a; b");
}

class ApiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ui_ = TempDir("ui");
    std::ofstream(ui_ / "index.html") << "<html>dash</html>";
    fs::create_directories(ui_ / "js");
    std::ofstream(ui_ / "js" / "app.js") << "main();";
    std::ofstream(ui_.parent_path() / "sdwanlab_gateway_secret.txt") << "secret";
    api_ = std::make_unique<Api>(session_, ui_);
  }

  void TearDown() override {
    fs::remove_all(ui_);
    fs::remove(ui_.parent_path() / "sdwanlab_gateway_secret.txt");
  }

  Response Call(const std::string& method, const std::string& path,
                const json& body = nullptr,
                std::map<std::string, std::string> query = {}) {
    Request request{method, path, std::move(query), body.is_null() ? "" : body.dump()};
    return api_->Handle(request);
  }

  json Body(const Response& response) { return json::parse(response.body); }

  std::string ErrorCodeOf(const Response& response) {
    return Body(response)["error"]["code"].get<std::string>();
  }

  void LoadAndRun(const std::string& name, bool provision) {
    ASSERT_EQ(Call("POST", "/api/v1/scenarios", {{"path", ScenarioPath(name)}}).status, 201);
    Response run = Call("POST", "/api/v1/scenarios/" + name + "/run", {{"provision", provision}});
    ASSERT_EQ(run.status, 200) << run.body;
  }

  Session session_;
  fs::path ui_;
  std::unique_ptr<Api> api_;
};

TEST_F(ApiTest, ServiceRoot) {
  Response root = Call("GET", "/api/v1");
  EXPECT_EQ(root.status, 200);
  EXPECT_EQ(Body(root)["version"], "v1");
  EXPECT_EQ(Call("GET", "/api/v1/health").status, 200);
  EXPECT_EQ(Call("GET", "/api/v2/devices").status, 404);
  EXPECT_EQ(Call("GET", "/api/v1/nothing").status, 404);
}

TEST_F(ApiTest, NothingRunningIsNotFound) {
  Response response = Call("GET", "/api/v1/devices");
  EXPECT_EQ(response.status, 404);
  EXPECT_EQ(ErrorCodeOf(response), "NotFound");
}

TEST_F(ApiTest, ScenarioLoading) {
  Response bad = Call("POST", "/api/v1/scenarios", {{"path", "/nonexistent.json"}});
  EXPECT_EQ(bad.status, 404);
  EXPECT_EQ(Call("POST", "/api/v1/scenarios", json::object()).status, 400);
  EXPECT_EQ(Call("POST", "/api/v1/scenarios", json("[")).status, 400);
  Request malformed{"POST", "/api/v1/scenarios", {}, "{not json"};
  EXPECT_EQ(api_->Handle(malformed).status, 400);
  LoadAndRun("sdwan", false);
  json list = Body(Call("GET", "/api/v1/scenarios"));
  ASSERT_EQ(list.size(), 1u);
  EXPECT_EQ(list[0]["name"], "sdwan");
  EXPECT_EQ(list[0]["running"], true);
  EXPECT_EQ(Call("DELETE", "/api/v1/scenarios").status, 405);
}

TEST_F(ApiTest, FullOnboardingListsFiveDevices) {
  LoadAndRun("sdwan", true);
  Response response = Call("GET", "/api/v1/devices");
  ASSERT_EQ(response.status, 200);
  json devices = Body(response);
  ASSERT_EQ(devices.size(), 5u);
  for (const auto& device : devices) {
    std::string state = device["state"];
    EXPECT_TRUE(state == "synced" || state == "managed") << device.dump();
  }
}

TEST_F(ApiTest, DeviceReads) {
  LoadAndRun("sdwan", true);
  json device = Body(Call("GET", "/api/v1/devices/E40"));
  EXPECT_EQ(device["id"], "E40");
  EXPECT_EQ(device["mode"], "template_managed");
  EXPECT_EQ(Body(Call("GET", "/api/v1/devices/VEDGE-40-0001"))["id"], "E40");

  json hardware = Body(Call("GET", "/api/v1/devices/E40/hardware"));
  for (const char* field : {"cpu_pct", "mem_pct"}) {
    EXPECT_GE(hardware[field].get<double>(), 0.0);
    EXPECT_LE(hardware[field].get<double>(), 100.0);
  }
  json rib = Body(Call("GET", "/api/v1/devices/DC-R1/routes"));
  bool branch3 = false;
  for (const auto& route : rib["routes"]) branch3 |= route["prefix"] == "10.4.0.0/16";
  EXPECT_TRUE(branch3);

  Response missing = Call("GET", "/api/v1/devices/NOPE");
  EXPECT_EQ(missing.status, 404);
  EXPECT_EQ(Call("GET", "/api/v1/devices/NOPE/hardware").status, 404);
  EXPECT_EQ(Call("GET", "/api/v1/devices/E40/colour").status, 404);
  EXPECT_EQ(Call("POST", "/api/v1/devices/E40/hardware").status, 405);
}

TEST_F(ApiTest, OnboardingErrors) {
  LoadAndRun("sdwan", false);
  Response unlisted = Call("POST", "/api/v1/onboard", {{"serial", "VEDGE-99-0001"}});
  EXPECT_EQ(unlisted.status, 409);
  EXPECT_EQ(ErrorCodeOf(unlisted), "SerialNotAllowed");
  EXPECT_EQ(Call("POST", "/api/v1/onboard", json::object()).status, 400);
  EXPECT_EQ(Call("POST", "/api/v1/onboard", {{"serial", 40}}).status, 400);
  Response ok = Call("POST", "/api/v1/onboard", {{"serial", "VEDGE-40-0001"}});
  ASSERT_EQ(ok.status, 200) << ok.body;
  EXPECT_EQ(Body(ok)["state"], "synced");
  EXPECT_EQ(Body(Call("GET", "/api/v1/connections")).size(), 2u);
}

TEST_F(ApiTest, TemplateLifecycle) {
  LoadAndRun("sdwan", false);
  std::ifstream in(TemplatePath("branch3"));
  json tmpl = json::parse(in);

  Response created = Call("POST", "/api/v1/templates", tmpl);
  EXPECT_EQ(created.status, 201) << created.body;
  EXPECT_EQ(Call("POST", "/api/v1/templates", tmpl).status, 200);
  EXPECT_EQ(Body(Call("GET", "/api/v1/templates")).size(), 1u);
  EXPECT_EQ(Body(Call("GET", "/api/v1/templates/branch3-border"))["id"], "branch3-border");
  EXPECT_EQ(Call("GET", "/api/v1/templates/nope").status, 404);

  json invalid = tmpl;
  invalid["features"].erase(0);
  EXPECT_EQ(Call("POST", "/api/v1/templates", invalid).status, 400);
  json malformed = tmpl;
  malformed["colour"] = "blue";
  EXPECT_EQ(Call("POST", "/api/v1/templates", malformed).status, 400);

  json push = {{"serial", "VEDGE-40-0001"},
               {"variables", session_.Scenario("sdwan").sdwan->provisioning[0].variables}};
  Response unsynced = Call("POST", "/api/v1/templates/branch3-border/push", push);
  EXPECT_EQ(unsynced.status, 409);
  EXPECT_EQ(ErrorCodeOf(unsynced), "DeviceNotSynced");

  ASSERT_EQ(Call("POST", "/api/v1/onboard", {{"serial", "VEDGE-40-0001"}}).status, 200);
  json bad_vars = push;
  bad_vars["variables"].erase("lan_ip");
  EXPECT_EQ(Call("POST", "/api/v1/templates/branch3-border/push", bad_vars).status, 400);

  Response pushed = Call("POST", "/api/v1/templates/branch3-border/push", push);
  ASSERT_EQ(pushed.status, 200) << pushed.body;
  EXPECT_FALSE(Body(pushed)["diff"]["empty"].get<bool>());
  Response again = Call("POST", "/api/v1/templates/branch3-border/push", push);
  EXPECT_TRUE(Body(again)["diff"]["empty"].get<bool>());

  Response denied = Call("POST", "/api/v1/devices/E40/exec",
                         {{"command", "set-hostname rogue"}});
  EXPECT_EQ(denied.status, 409);
  EXPECT_EQ(ErrorCodeOf(denied), "PermissionDenied");
  EXPECT_EQ(Call("POST", "/api/v1/devices/E40/exec", {{"command", "show-config"}}).status, 200);
  EXPECT_EQ(Call("POST", "/api/v1/devices/E40/exec", {{"command", "format-disk"}}).status, 400);
}

TEST_F(ApiTest, PingExperimentAndReports) {
  LoadAndRun("traditional", false);
  Response created = Call("POST", "/api/v1/experiments/ping",
                          {{"src", "HQ-H1"}, {"dst", "DC-H1"}, {"count", 5}, {"seed", 3}});
  ASSERT_EQ(created.status, 201) << created.body;
  std::string id = Body(created)["id"];
  EXPECT_EQ(Body(created)["report"]["ttl"], 61);

  Response fetched = Call("GET", "/api/v1/reports/" + id);
  ASSERT_EQ(fetched.status, 200);
  EXPECT_EQ(Body(fetched)["report"], Body(created)["report"]);
  EXPECT_EQ(Body(Call("GET", "/api/v1/reports")).size(), 1u);
  EXPECT_EQ(Call("GET", "/api/v1/reports/ping-99").status, 404);

  EXPECT_EQ(Call("POST", "/api/v1/experiments/ping", {{"src", "HQ-H1"}, {"dst", "HQ-H1"}}).status,
            400);
  EXPECT_EQ(Call("POST", "/api/v1/experiments/ping", {{"src", "HQ-H1"}, {"dst", "X"}}).status,
            404);
  EXPECT_EQ(Call("POST", "/api/v1/experiments/ping",
                 {{"src", "HQ-H1"}, {"dst", "DC-H1"}, {"count", 0}})
                .status,
            400);
}

TEST_F(ApiTest, ComparisonExperiment) {
  ASSERT_EQ(Call("POST", "/api/v1/scenarios", {{"path", ScenarioPath("traditional")}}).status, 201);
  ASSERT_EQ(Call("POST", "/api/v1/scenarios", {{"path", ScenarioPath("sdwan")}}).status, 201);
  json request = {{"traditional", "traditional"}, {"sdwan", "sdwan"},
                  {"name", "baseline"},              {"count", 5}};
  Response first = Call("POST", "/api/v1/experiments/compare", request);
  ASSERT_EQ(first.status, 201) << first.body;
  EXPECT_EQ(Body(first)["id"], "baseline");
  EXPECT_EQ(Body(first)["report"]["paths"].size(), 3u);
  EXPECT_EQ(Body(Call("POST", "/api/v1/experiments/compare", request))["id"], "baseline-2");
  request["sdwan"] = "missing";
  EXPECT_EQ(Call("POST", "/api/v1/experiments/compare", request).status, 404);
}

TEST_F(ApiTest, ReadsDoNotChangeState) {
  LoadAndRun("sdwan", true);
  Call("POST", "/api/v1/experiments/ping", {{"src", "vManage"}, {"dst", "E40"}, {"count", 3}});
  const uint64_t before = session_.StateHash();
  const std::vector<std::string> reads = {
      "/api/v1",
      "/api/v1/health",
      "/api/v1/scenarios",
      "/api/v1/devices",
      "/api/v1/devices/E40",
      "/api/v1/devices/vManage/hardware",
      "/api/v1/devices/E50/hardware",
      "/api/v1/devices/DC-R1/routes",
      "/api/v1/allowlist",
      "/api/v1/connections",
      "/api/v1/templates",
      "/api/v1/reports",
      "/api/v1/reports/ping-1",
      "/api/v1/devices/NOPE",
      "/ui/",
  };
  for (int round = 0; round < 2; ++round) {
    for (const auto& path : reads) Call("GET", path);
  }
  EXPECT_EQ(session_.StateHash(), before);
  // A read-set exec goes through the command path but must not mutate either.
  Call("POST", "/api/v1/devices/E40/exec", {{"command", "show-routes"}});
  EXPECT_EQ(session_.StateHash(), before);
  Call("POST", "/api/v1/onboard", {{"serial", "VEDGE-40-0001"}});
  Call("POST", "/api/v1/devices/E40/exec", {{"command", "set-hostname x"}});
  EXPECT_EQ(session_.StateHash(), before);
}

TEST_F(ApiTest, StateHashSeesMutations) {
  LoadAndRun("sdwan", false);
  const uint64_t before = session_.StateHash();
  Call("POST", "/api/v1/onboard", {{"serial", "VEDGE-40-0001"}});
  EXPECT_NE(session_.StateHash(), before);
}

TEST_F(ApiTest, StaticDashboard) {
  Response redirect = Call("GET", "/");
  EXPECT_EQ(redirect.status, 302);
  EXPECT_EQ(redirect.headers["Location"], "/ui/");
  Response index = Call("GET", "/ui/");
  EXPECT_EQ(index.status, 200);
  EXPECT_EQ(index.body, "<html>dash</html>");
  EXPECT_EQ(index.content_type.rfind("text/html", 0), 0u);
  Response script = Call("GET", "/ui/js/app.js");
  EXPECT_EQ(script.body, "main();");
  EXPECT_NE(script.content_type.find("javascript"), std::string::npos);
  EXPECT_EQ(Call("GET", "/ui/missing.css").status, 404);
  EXPECT_EQ(Call("GET", "/ui/../sdwanlab_gateway_secret.txt").status, 404);
  EXPECT_EQ(Call("GET", "/ui/js/../../sdwanlab_gateway_secret.txt").status, 404);
  EXPECT_EQ(Call("POST", "/ui/").status, 405);
}

TEST(Api, MissingDashboardIsNotFound) {
  Session session;
  Api api(session, "/nonexistent/ui");
  Response response = api.Handle({"GET", "/ui/", {}, ""});
  EXPECT_EQ(response.status, 404);
  EXPECT_NE(response.body.find("dashboard is not installed"), std::string::npos);
  // The API itself does not depend on the dashboard.
  EXPECT_EQ(api.Handle({"GET", "/api/v1/health", {}, ""}).status, 200);
}

TEST(Port, FlagThenEnvironmentThenDefault) {
  unsetenv("SDWANLAB_PORT");
  EXPECT_EQ(ResolvePort(-1), kDefaultPort);
  setenv("SDWANLAB_PORT", "9191", 1);
  EXPECT_EQ(ResolvePort(-1), 9191);
  EXPECT_EQ(ResolvePort(7000), 7000);
  setenv("SDWANLAB_PORT", "ninety", 1);
  EXPECT_THROW(ResolvePort(-1), Error);
  unsetenv("SDWANLAB_PORT");
}

TEST(HttpServer, ServesOverTheWire) {
  Session session;
  fs::path ui = TempDir("live_ui");
  std::ofstream(ui / "index.html") << "live";
  Api api(session, ui);
  HttpServer server(api);
  int port = server.Bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread thread([&] { server.Listen(); });

  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(std::chrono::seconds(5));
  auto loaded = client.Post("/api/v1/scenarios",
                            json{{"path", ScenarioPath("sdwan")}}.dump(), "application/json");
  ASSERT_TRUE(loaded);
  EXPECT_EQ(loaded->status, 201);
  auto run = client.Post("/api/v1/scenarios/sdwan/run", R"({"provision": true})",
                         "application/json");
  ASSERT_TRUE(run);
  EXPECT_EQ(run->status, 200);
  auto devices = client.Get("/api/v1/devices?scenario=sdwan");
  ASSERT_TRUE(devices);
  EXPECT_EQ(devices->status, 200);
  EXPECT_EQ(json::parse(devices->body).size(), 5u);
  EXPECT_NE(devices->get_header_value("Content-Type").find("application/json"),
            std::string::npos);
  auto onboard = client.Post("/api/v1/onboard", R"({"serial": "X"})", "application/json");
  ASSERT_TRUE(onboard);
  EXPECT_EQ(onboard->status, 409);
  auto page = client.Get("/ui/");
  ASSERT_TRUE(page);
  EXPECT_EQ(page->body, "live");

  server.Stop();
  thread.join();
  fs::remove_all(ui);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    env_.state_dir = TempDir("cli_state");
    env_.ui_dir = env_.state_dir / "ui";
  }
  void TearDown() override { fs::remove_all(env_.state_dir); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_, env_);
  }

  CliEnvironment env_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Run({"ping", "sdwan"}), kExitUsage);
  EXPECT_EQ(Run({"ping", ScenarioPath("traditional"), "HQ-H1", "HQ-H1"}), kExitUsage);
  const std::string message = err_.str();
  EXPECT_EQ(message.rfind("error: ", 0), 0u) << message;
  EXPECT_EQ(std::count(message.begin(), message.end(), '\n'), 1);
  EXPECT_EQ(Run({"ping", ScenarioPath("traditional"), "HQ-H1", "DC-H1", "--count", "x"}),
            kExitUsage);
}

TEST_F(CliTest, WorkflowAcrossInvocations) {
  const std::string sdwan = ScenarioPath("sdwan");
  ASSERT_EQ(Run({"load", sdwan}), kExitOk) << err_.str();
  ASSERT_EQ(Run({"run", "sdwan"}), kExitOk) << err_.str();

  EXPECT_EQ(Run({"onboard", "sdwan", "VEDGE-99-0001"}), kExitDomain);
  EXPECT_NE(err_.str().find("SerialNotAllowed"), std::string::npos) << err_.str();
  ASSERT_EQ(Run({"onboard", "sdwan", "VEDGE-40-0001"}), kExitOk) << err_.str();

  ASSERT_EQ(Run({"push", "sdwan", TemplatePath("branch3"), "VEDGE-40-0001"}), kExitOk)
      << err_.str();
  EXPECT_EQ(Run({"exec", "sdwan", "E40", "set-interface", "eth1", "10.4.9.1/24"}),
            kExitDomain);
  EXPECT_NE(err_.str().find("read-only"), std::string::npos) << err_.str();
  EXPECT_EQ(Run({"exec", "sdwan", "E40", "show-routes"}), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("10.2.0.0/16"), std::string::npos);

  ASSERT_EQ(Run({"ping", "sdwan", "vManage", "E40", "--count", "5"}), kExitOk) << err_.str();
  EXPECT_NE(out_.str().find("ttl 60"), std::string::npos) << out_.str();

  // E50 was never onboarded, so its LAN is still unconfigured.
  EXPECT_EQ(Run({"push", "sdwan", TemplatePath("branch4"), "VEDGE-50-0001"}), kExitDomain);
  EXPECT_NE(err_.str().find("DeviceNotSynced"), std::string::npos) << err_.str();

  ASSERT_EQ(Run({"reset"}), kExitOk);
  EXPECT_EQ(Run({"exec", "sdwan", "E40", "show-routes"}), kExitDomain);
}

TEST_F(CliTest, JournalReplayRebuildsTheSameState) {
  const std::string sdwan = ScenarioPath("sdwan");
  ASSERT_EQ(Run({"load", sdwan}), kExitOk);
  ASSERT_EQ(Run({"run", "sdwan"}), kExitOk);
  ASSERT_EQ(Run({"onboard", "sdwan", "VEDGE-40-0001"}), kExitOk);
  ASSERT_EQ(Run({"push", "sdwan", TemplatePath("branch3"), "VEDGE-40-0001"}), kExitOk);
  ASSERT_EQ(Run({"ping", "sdwan", "vManage", "E40", "--count", "2"}), kExitOk);

  Journal journal(env_.state_dir / "journal.jsonl");
  auto entries = journal.Read();
  ASSERT_EQ(entries.size(), 4u);  // pings are not journaled
  Session a, b;
  for (const auto& entry : entries) ApplyEntry(a, entry, nullptr);
  for (const auto& entry : entries) ApplyEntry(b, entry, nullptr);
  EXPECT_EQ(a.StateHash(), b.StateHash());
  EXPECT_EQ(a.Lab("sdwan").fabric->FindBySerial("VEDGE-40-0001")->state,
            OnboardingState::kManaged);
}

TEST_F(CliTest, CompareWritesDeterministicFiles) {
  fs::path one = env_.state_dir / "one", two = env_.state_dir / "two";
  const std::string traditional = ScenarioPath("traditional");
  const std::string sdwan = ScenarioPath("sdwan");
  ASSERT_EQ(Run({"compare", traditional, sdwan, "--out", one.string(), "--count", "10"}),
            kExitOk)
      << err_.str();
  ASSERT_EQ(Run({"compare", traditional, sdwan, "--out", two.string(), "--count", "10"}),
            kExitOk);
  auto read = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  for (const char* file : {"pings.csv", "hardware.csv"}) {
    EXPECT_FALSE(read(one / file).empty());
    EXPECT_EQ(read(one / file), read(two / file)) << file;
  }
  EXPECT_TRUE(fs::exists(one / "summary.txt"));
}

TEST_F(CliTest, MissingScenarioIsADomainError) {
  EXPECT_EQ(Run({"run", "nowhere"}), kExitDomain);
  EXPECT_NE(err_.str().find("NotFound"), std::string::npos) << err_.str();
}

}  // namespace
}  // namespace sdwanlab::gateway
