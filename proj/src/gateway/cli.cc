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

#include "sdwanlab/gateway/cli.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "sdwanlab/error.h"
#include "sdwanlab/gateway/api.h"
#include "sdwanlab/gateway/status.h"
#include "sdwanlab/hash.h"
#include "sdwanlab/measurement/measurement.h"
#include "sdwanlab/sdwan/lab.h"

namespace sdwanlab::gateway {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Raised for command-line misuse that CLI11 cannot detect on its own.
struct UsageError {
  std::string message;
};

std::string Column(const std::string& text, size_t width) {
  return text.size() >= width ? text + " "
                              : text + std::string(width - text.size(), ' ');
}

void PrintDevices(const sdwan::Fabric& fabric, std::ostream& out) {
  out << Column("DEVICE", 10) << Column("SERIAL", 16) << Column("ROLE", 8)
      << Column("STATE", 15) << Column("REACHABLE", 11) << "MODE\n";
  for (const auto& record : fabric.Records()) {
    out << Column(record.node.str(), 10) << Column(record.identity.serial, 16)
        << Column(std::string(RoleName(record.identity.role)), 8)
        << Column(std::string(OnboardingStateName(record.state)), 15)
        << Column(record.reachable ? "yes" : "no", 11)
        << ManagementModeName(record.mode) << "\n";
  }
}

sdwan::Fabric& RequireFabric(sdwan::Lab& lab) {
  if (lab.fabric == nullptr) {
    throw Error(ErrorCode::kControllerNotReady,
                "scenario " + lab.spec.name + " has no SD-WAN controllers");
  }
  return *lab.fabric;
}

NodeId RequireDevice(const sdwan::Lab& lab, const std::string& id) {
  NodeId node(id);
  if (lab.sim->network().FindNode(node) != nullptr) return node;
  if (lab.fabric != nullptr) {
    if (const auto* record = lab.fabric->FindBySerial(id)) return record->node;
  }
  throw Error(ErrorCode::kUnknownDevice, "unknown device " + id);
}

std::map<std::string, std::string> EntryVariables(const json& entry) {
  std::map<std::string, std::string> out;
  if (auto it = entry.find("variables"); it != entry.end()) {
    for (const auto& [key, value] : it->items()) {
      out[key] = value.get<std::string>();
    }
  }
  return out;
}

bool IsWriteCommand(const std::string& command_line) {
  std::istringstream in(command_line);
  std::string verb;
  in >> verb;
  const auto& writes = sdwan::WriteCommands();
  return std::find(writes.begin(), writes.end(), verb) != writes.end();
}

// Everything a command needs: the replayed session plus its journal.
class Context {
 public:
  explicit Context(const CliEnvironment& env)
      : env_(env), journal_(env.state_dir / "journal.jsonl") {}

  void Replay() {
    std::vector<json> entries = journal_.Read();
    for (size_t i = 0; i < entries.size(); ++i) {
      try {
        ApplyEntry(session_, entries[i], nullptr);
      } catch (const Error& e) {
        throw Error(ErrorCode::kInternal,
                    "journal " + journal_.file().string() + " entry " +
                        std::to_string(i + 1) + " no longer applies (" +
                        OneLine(e) + "); run 'sdwanlab reset'");
      }
    }
  }

  // Applies and records a state-changing entry.
  void Commit(const json& entry, std::ostream* out) {
    ApplyEntry(session_, entry, out);
    journal_.Append(entry);
  }

  // A loaded scenario name, or a file that gets loaded.
  std::string Scenario(const std::string& arg, std::ostream* out) {
    if (session_.HasScenario(arg)) return arg;
    fs::path path = fs::absolute(scenario::ResolveScenarioPath(arg))
                        .lexically_normal();
    std::string name = scenario::LoadScenarioFile(path).name;
    if (session_.HasScenario(name) && session_.SourceOf(name) == path) {
      return name;
    }
    Commit({{"op", "load"}, {"path", path.string()}}, out);
    return name;
  }

  sdwan::Lab& Running(const std::string& arg, std::ostream* out) {
    std::string name = Scenario(arg, out);
    if (!session_.IsRunning(name)) {
      Commit({{"op", "run"}, {"scenario", name}, {"provision", false}}, out);
    }
    return session_.Lab(name);
  }

  Session& session() { return session_; }
  Journal& journal() { return journal_; }
  const CliEnvironment& env() const { return env_; }

 private:
  const CliEnvironment& env_;
  Journal journal_;
  Session session_;
};

// File path as given (with or without .json), relative to the scenario, or
// the id or file stem of one of the scenario's provisioning templates.
fs::path ResolveTemplate(const scenario::ScenarioSpec& spec,
                         const std::string& arg) {
  for (const fs::path& candidate :
       {fs::path(arg), fs::path(arg + ".json"), spec.base_dir / arg,
        spec.base_dir / (arg + ".json")}) {
    if (fs::is_regular_file(candidate)) {
      return fs::absolute(candidate).lexically_normal();
    }
  }
  if (spec.sdwan) {
    for (const auto& provisioning : spec.sdwan->provisioning) {
      fs::path path = spec.base_dir / provisioning.template_path;
      if (path.stem() == arg || (fs::is_regular_file(path) &&
                                 templates::LoadTemplateFile(path.string()).id == arg)) {
        return fs::absolute(path).lexically_normal();
      }
    }
  }
  throw Error(ErrorCode::kNotFound, "no template " + arg);
}

std::map<std::string, std::string> ParseVars(const std::vector<std::string>& vars) {
  std::map<std::string, std::string> out;
  for (const auto& var : vars) {
    size_t eq = var.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError{"--var expects name=value, got '" + var + "'"};
    }
    out[var.substr(0, eq)] = var.substr(eq + 1);
  }
  return out;
}

void PrintPing(const measurement::PingReport& report, int size_bytes,
               std::ostream& out) {
  char line[160];
  out << "PING " << report.src.str() << " -> " << report.dst.str() << ": "
      << report.sent << " packets of " << size_bytes << " bytes\n";
  double loss = report.sent == 0
                    ? 0.0
                    : 100.0 * (report.sent - report.received) / report.sent;
  std::snprintf(line, sizeof(line), "sent %d, received %d, loss %.1f%%, ttl ",
                report.sent, report.received, loss);
  out << line
      << (report.observed_ttl >= 0 ? std::to_string(report.observed_ttl) : "-")
      << (report.ttl_stable ? "" : " (varies)") << "\n";
  if (report.received > 0) {
    std::snprintf(line, sizeof(line), "rtt min/avg/max = %.3f/%.3f/%.3f ms\n",
                  report.min_ms, report.avg_ms, report.max_ms);
    out << line;
  }
}

}  // namespace

CliEnvironment EnvironmentFromEnv() {
  CliEnvironment env;
  if (const char* dir = std::getenv("SDWANLAB_STATE_DIR"); dir && *dir) {
    env.state_dir = dir;
  }
  if (const char* dir = std::getenv("SDWANLAB_UI_DIR"); dir && *dir) {
    env.ui_dir = dir;
  }
  return env;
}

std::vector<json> Journal::Read() const {
  std::vector<json> entries;
  std::ifstream in(file_);
  if (!in) return entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    json entry = json::parse(line, nullptr, false);
    if (entry.is_discarded() || !entry.is_object()) {
      throw Error(ErrorCode::kSchemaError, file_.string() + ":" +
                                               std::to_string(number) +
                                               ": malformed journal entry");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

void Journal::Append(const json& entry) const {
  std::error_code ec;
  fs::create_directories(file_.parent_path().empty() ? fs::path(".")
                                                     : file_.parent_path(),
                         ec);
  std::ofstream out(file_, std::ios::app);
  out << entry.dump() << "\n";
  if (!out) throw Error(ErrorCode::kInternal, "cannot write " + file_.string());
}

void Journal::Clear() const {
  std::error_code ec;
  fs::remove(file_, ec);
}

void ApplyEntry(Session& session, const json& entry, std::ostream* out) {
  std::string op = entry.value("op", "");
  if (op == "load") {
    std::string name = session.LoadFile(entry.at("path").get<std::string>());
    if (out) {
      const auto& spec = session.Scenario(name);
      *out << "loaded " << name << ": " << spec.nodes.size() << " nodes, "
           << spec.links.size() << " links, " << spec.probes.size()
           << " probes\n";
    }
  } else if (op == "run") {
    std::string name = entry.at("scenario").get<std::string>();
    sdwan::Lab& lab = session.Run(name, entry.value("provision", false));
    if (out) {
      *out << "running " << name << ": "
           << lab.sim->network().nodes().size() << " nodes converged\n";
      if (lab.fabric != nullptr) PrintDevices(*lab.fabric, *out);
    }
  } else if (op == "onboard") {
    sdwan::Lab& lab = session.Lab(entry.at("scenario").get<std::string>());
    sdwan::DeviceRecord record =
        RequireFabric(lab).OnboardEdge(entry.at("serial").get<std::string>());
    if (out) {
      *out << "onboarded " << record.identity.serial << " ("
           << record.node.str() << "): " << OnboardingStateName(record.state)
           << "\n";
    }
  } else if (op == "push") {
    sdwan::Lab& lab = session.Lab(entry.at("scenario").get<std::string>());
    templates::DeviceTemplate tmpl =
        templates::LoadTemplateFile(entry.at("template").get<std::string>());
    sdwan::PushResult result = RequireFabric(lab).PushTemplate(
        tmpl, entry.at("serial").get<std::string>(), EntryVariables(entry));
    session.PutTemplate(tmpl);
    if (out) {
      *out << "pushed " << result.template_id << " to " << result.serial
           << ": config " << HexDigest(result.previous_hash) << " -> "
           << HexDigest(result.config_hash) << ", " << result.diff.size()
           << " directive change" << (result.diff.size() == 1 ? "" : "s")
           << "\n";
    }
  } else if (op == "exec") {
    sdwan::Lab& lab = session.Lab(entry.at("scenario").get<std::string>());
    NodeId device = RequireDevice(lab, entry.at("device").get<std::string>());
    std::string output =
        RequireFabric(lab).CliExec(device, entry.at("command").get<std::string>());
    if (out) {
      *out << output;
      if (!output.empty() && output.back() != '\n') *out << "\n";
    }
  } else {
    throw Error(ErrorCode::kSchemaError, "unknown journal op '" + op + "'");
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, const CliEnvironment& env) {
  CLI::App app{"SD-WAN lab simulator", "sdwanlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string scenario_arg, file, serial, template_arg, src, dst, device;
  std::string traditional_arg, sdwan_arg, out_dir, report_name, host = "127.0.0.1";
  std::vector<std::string> vars, command, paths;
  bool provision = false;
  int count = measurement::kDefaultCount;
  int size = measurement::kDefaultSizeBytes;
  int64_t seed = -1;
  int port = 0;

  auto* load = app.add_subcommand("load", "Load and validate a scenario file");
  load->add_option("file", file, "Scenario file")->required();

  auto* run = app.add_subcommand("run", "Build a scenario and bring up its controllers");
  run->add_option("scenario", scenario_arg, "Scenario name or file")->required();
  run->add_flag("--provision", provision,
                "Also onboard and provision every allowlisted edge");

  auto* onboard = app.add_subcommand("onboard", "Onboard an edge by serial");
  onboard->add_option("scenario", scenario_arg)->required();
  onboard->add_option("serial", serial)->required();

  auto* push = app.add_subcommand("push", "Push a feature template to an edge");
  push->add_option("scenario", scenario_arg)->required();
  push->add_option("template", template_arg, "Template file or id")->required();
  push->add_option("serial", serial)->required();
  push->add_option("--var", vars, "Variable binding name=value")->take_all();

  auto* ping = app.add_subcommand("ping", "Run a ping campaign");
  ping->add_option("scenario", scenario_arg)->required();
  ping->add_option("src", src)->required();
  ping->add_option("dst", dst)->required();
  ping->add_option("--count", count)->check(CLI::PositiveNumber);
  ping->add_option("--size", size)->check(CLI::PositiveNumber);
  ping->add_option("--seed", seed)->check(CLI::NonNegativeNumber);

  auto* compare = app.add_subcommand("compare", "Compare a traditional and an SD-WAN scenario");
  compare->add_option("traditional", traditional_arg)->required();
  compare->add_option("sdwan", sdwan_arg)->required();
  compare->add_option("--out", out_dir, "Report directory");
  compare->add_option("--name", report_name, "Report name");
  compare->add_option("--path", paths, "Probe name (repeatable)")->take_all();
  compare->add_option("--count", count)->check(CLI::PositiveNumber);
  compare->add_option("--size", size)->check(CLI::PositiveNumber);
  compare->add_option("--seed", seed)->check(CLI::NonNegativeNumber);

  auto* exec = app.add_subcommand("exec", "Run a device CLI command");
  exec->add_option("scenario", scenario_arg)->required();
  exec->add_option("device", device)->required();
  exec->add_option("command", command)->required()->take_all();
  exec->allow_extras(false);
  exec->positionals_at_end();
  exec->prefix_command();

  auto* status = app.add_subcommand("status", "Show loaded scenarios and devices");
  auto* reset = app.add_subcommand("reset", "Forget the recorded session");

  auto* serve = app.add_subcommand("serve", "Serve the HTTP API and dashboard");
  serve->add_option("--port", port, "Port (default SDWANLAB_PORT or 8080)")
      ->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Bind address");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  Context context(env);
  try {
    if (*reset) {
      context.journal().Clear();
      out << "session cleared\n";
      return kExitOk;
    }
    if (*compare) {
      auto load_spec = [&](const std::string& arg) {
        return scenario::LoadScenarioFile(arg);
      };
      scenario::ScenarioSpec traditional = load_spec(traditional_arg);
      scenario::ScenarioSpec sdwan = load_spec(sdwan_arg);
      measurement::ComparisonOptions options;
      if (out_dir.empty()) {
        options.name = report_name.empty() ? "comparison" : report_name;
        out_dir = (fs::path("report") / options.name).string();
      } else {
        options.name = report_name.empty()
                           ? fs::path(out_dir).lexically_normal().filename().string()
                           : report_name;
        if (options.name.empty()) options.name = "comparison";
      }
      options.paths = paths;
      options.count = count;
      options.size_bytes = size;
      options.seed = seed >= 0 ? static_cast<uint64_t>(seed)
                               : traditional.defaults.seed;
      measurement::ComparisonReport report =
          measurement::RunComparison(traditional, sdwan, options);
      measurement::WriteReport(report, out_dir);
      out << measurement::SummaryText(report) << "\nwrote "
          << (fs::path(out_dir) / "summary.txt").string() << ", pings.csv, hardware.csv\n";
      return kExitOk;
    }

    context.Replay();
    Session& session = context.session();

    if (*load) {
      fs::path path = fs::absolute(scenario::ResolveScenarioPath(file))
                          .lexically_normal();
      context.Commit({{"op", "load"}, {"path", path.string()}}, &out);
    } else if (*run) {
      std::string name = context.Scenario(scenario_arg, &out);
      context.Commit({{"op", "run"}, {"scenario", name}, {"provision", provision}}, &out);
    } else if (*onboard) {
      std::string name = context.Running(scenario_arg, &out).spec.name;
      context.Commit({{"op", "onboard"}, {"scenario", name}, {"serial", serial}}, &out);
    } else if (*push) {
      std::map<std::string, std::string> bindings = ParseVars(vars);
      sdwan::Lab& lab = context.Running(scenario_arg, &out);
      fs::path template_path = ResolveTemplate(lab.spec, template_arg);
      std::map<std::string, std::string> variables;
      if (lab.spec.sdwan) {
        for (const auto& provisioning : lab.spec.sdwan->provisioning) {
          fs::path declared = fs::absolute(lab.spec.base_dir / provisioning.template_path)
                                  .lexically_normal();
          if (provisioning.serial == serial && declared == template_path) {
            variables = provisioning.variables;
          }
        }
      }
      for (const auto& [key, value] : bindings) variables[key] = value;
      context.Commit({{"op", "push"},
                      {"scenario", lab.spec.name},
                      {"template", template_path.string()},
                      {"serial", serial},
                      {"variables", variables}},
                     &out);
    } else if (*ping) {
      if (src == dst) throw UsageError{"ping source and destination are the same"};
      sdwan::Lab& lab = context.Running(scenario_arg, &out);
      measurement::PingCampaign campaign;
      campaign.src = RequireDevice(lab, src);
      campaign.dst = RequireDevice(lab, dst);
      if (campaign.src == campaign.dst) {
        throw UsageError{"ping source and destination are the same"};
      }
      campaign.count = count;
      campaign.size_bytes = size;
      campaign.seed = seed >= 0 ? static_cast<uint64_t>(seed) : lab.spec.defaults.seed;
      PrintPing(measurement::RunPing(*lab.sim, campaign), size, out);
    } else if (*exec) {
      std::string command_line;
      for (const auto& word : command) {
        command_line += (command_line.empty() ? "" : " ") + word;
      }
      sdwan::Lab& lab = context.Running(scenario_arg, &out);
      json entry = {{"op", "exec"},
                    {"scenario", lab.spec.name},
                    {"device", device},
                    {"command", command_line}};
      if (IsWriteCommand(command_line)) {
        context.Commit(entry, &out);
      } else {
        ApplyEntry(session, entry, &out);
      }
    } else if (*status) {
      if (session.ScenarioNames().empty()) out << "no scenarios loaded\n";
      for (const auto& name : session.ScenarioNames()) {
        out << name << (session.IsRunning(name) ? " (running" : " (loaded")
            << (session.active() == name ? ", active)" : ")") << "\n";
        if (session.IsRunning(name) && session.Lab(name).fabric != nullptr) {
          PrintDevices(*session.Lab(name).fabric, out);
        }
      }
    } else if (*serve) {
      int bound_port = ResolvePort(port);
      Api api(session, env.ui_dir);
      HttpServer server(api);
      server.Bind(host, bound_port);
      out << "serving http://" << host << ":" << bound_port << kApiPrefix
          << " and " << kUiPrefix << std::endl;
      server.Listen();
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: usage: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << OneLine(e) << "\n";
    return ExitCode(e.code());
  } catch (const std::exception& e) {
    err << "error: " << OneLine(Error(ErrorCode::kInternal, e.what())) << "\n";
    return kExitDomain;
  }
}

}  // namespace sdwanlab::gateway
