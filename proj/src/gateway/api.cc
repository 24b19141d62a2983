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

#include "sdwanlab/gateway/api.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "httplib.h"
#include "sdwanlab/error.h"
#include "sdwanlab/gateway/codec.h"
#include "sdwanlab/gateway/status.h"
#include "sdwanlab/hash.h"
#include "sdwanlab/measurement/measurement.h"

namespace sdwanlab::gateway {
namespace {

using nlohmann::json;

std::vector<std::string> Segments(std::string_view path) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= path.size()) {
    size_t end = path.find('/', start);
    if (end == std::string_view::npos) end = path.size();
    if (end > start) out.emplace_back(path.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

Response JsonResponse(int status, const json& body) {
  Response response;
  response.status = status;
  response.body = body.dump(2) + "\n";
  return response;
}

Response ErrorResponse(int status, std::string_view code,
                       const std::string& message) {
  return JsonResponse(status,
                      {{"error", {{"code", code}, {"message", message}}}});
}

json ParseBody(const Request& request) {
  if (request.body.empty()) return json::object();
  json body = json::parse(request.body, nullptr, false);
  if (body.is_discarded()) {
    throw Error(ErrorCode::kSchemaError, "request body is not valid JSON");
  }
  if (!body.is_object()) {
    throw Error(ErrorCode::kSchemaError, "request body must be an object");
  }
  return body;
}

std::string RequireString(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string()) {
    throw Error(ErrorCode::kSchemaError,
                std::string(key) + ": expected a string");
  }
  return it->get<std::string>();
}

std::string OptionalString(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return "";
  if (!it->is_string()) {
    throw Error(ErrorCode::kSchemaError,
                std::string(key) + ": expected a string");
  }
  return it->get<std::string>();
}

int64_t OptionalInteger(const json& body, const char* key, int64_t fallback) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return fallback;
  if (!it->is_number_integer()) {
    throw Error(ErrorCode::kSchemaError,
                std::string(key) + ": expected an integer");
  }
  return it->get<int64_t>();
}

bool OptionalBool(const json& body, const char* key, bool fallback) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return fallback;
  if (!it->is_boolean()) {
    throw Error(ErrorCode::kSchemaError,
                std::string(key) + ": expected a boolean");
  }
  return it->get<bool>();
}

std::vector<std::string> StringList(const json& body, const char* key) {
  std::vector<std::string> out;
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw Error(ErrorCode::kSchemaError,
                std::string(key) + ": expected an array of strings");
  }
  for (const auto& item : *it) {
    if (!item.is_string()) {
      throw Error(ErrorCode::kSchemaError,
                  std::string(key) + ": expected an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> Variables(const json& body) {
  std::map<std::string, std::string> out;
  auto it = body.find("variables");
  if (it == body.end() || it->is_null()) return out;
  if (!it->is_object()) {
    throw Error(ErrorCode::kSchemaError, "variables: expected an object");
  }
  for (const auto& [name, value] : it->items()) {
    if (value.is_string()) {
      out[name] = value.get<std::string>();
    } else if (value.is_number_integer()) {
      out[name] = std::to_string(value.get<int64_t>());
    } else {
      throw Error(ErrorCode::kSchemaError,
                  "variables." + name + ": expected a string or integer");
    }
  }
  return out;
}

// Explicit ?scenario= or body field, else the active lab.
std::string ScenarioOf(const Request& request, const json& body) {
  auto it = request.query.find("scenario");
  if (it != request.query.end()) return it->second;
  return OptionalString(body, "scenario");
}

sdwan::Fabric& FabricOf(sdwan::Lab& lab) {
  if (lab.fabric == nullptr) {
    throw Error(ErrorCode::kControllerNotReady,
                "scenario " + lab.spec.name + " has no SD-WAN controllers");
  }
  return *lab.fabric;
}

// Node id first, then serial.
NodeId DeviceOf(const sdwan::Lab& lab, const std::string& id) {
  NodeId node(id);
  if (lab.sim->network().FindNode(node) != nullptr) return node;
  if (lab.fabric != nullptr) {
    if (const auto* record = lab.fabric->FindBySerial(id)) return record->node;
  }
  throw Error(ErrorCode::kUnknownDevice, "unknown device " + id);
}

std::string ContentType(const std::filesystem::path& path) {
  static const std::map<std::string, std::string> kTypes = {
      {".html", "text/html; charset=utf-8"},
      {".js", "text/javascript; charset=utf-8"},
      {".mjs", "text/javascript; charset=utf-8"},
      {".css", "text/css; charset=utf-8"},
      {".json", "application/json"},
      {".svg", "image/svg+xml"},
      {".png", "image/png"},
      {".ico", "image/x-icon"},
      {".txt", "text/plain; charset=utf-8"},
      {".map", "application/json"},
  };
  auto it = kTypes.find(path.extension().string());
  return it == kTypes.end() ? "application/octet-stream" : it->second;
}

class Router {
 public:
  Router(Session& session, const Request& request)
      : session_(session), request_(request) {}

  Response Route(const std::vector<std::string>& s);

 private:
  bool Is(std::string_view method) const { return request_.method == method; }
  const json& body() {
    if (!body_) body_ = ParseBody(request_);
    return *body_;
  }
  sdwan::Lab& RunningLab() {
    return session_.Lab(session_.ResolveRunning(ScenarioOf(request_, body())));
  }

  Response Scenarios(const std::vector<std::string>& s);
  Response Devices(const std::vector<std::string>& s);
  Response Templates(const std::vector<std::string>& s);
  Response Experiments(const std::vector<std::string>& s);
  Response Reports(const std::vector<std::string>& s);

  Session& session_;
  const Request& request_;
  std::optional<json> body_;
};

Response MethodNotAllowed() {
  return ErrorResponse(405, "MethodNotAllowed", "method not allowed");
}

Response Router::Route(const std::vector<std::string>& s) {
  // s excludes the "api", "v1" prefix.
  if (s.empty()) {
    return JsonResponse(200, {{"service", "sdwanlab"}, {"version", "v1"}});
  }
  const std::string& head = s[0];
  if (head == "health" && s.size() == 1) {
    if (!Is("GET")) return MethodNotAllowed();
    return JsonResponse(200, {{"status", "ok"}});
  }
  if (head == "scenarios") return Scenarios(s);
  if (head == "devices") return Devices(s);
  if (head == "templates") return Templates(s);
  if (head == "experiments") return Experiments(s);
  if (head == "reports") return Reports(s);
  if (head == "onboard" && s.size() == 1) {
    if (!Is("POST")) return MethodNotAllowed();
    sdwan::Fabric& fabric = FabricOf(RunningLab());
    sdwan::DeviceRecord record = fabric.OnboardEdge(RequireString(body(), "serial"));
    return JsonResponse(200, ToJson(record));
  }
  if (head == "certificates" && s.size() == 1) {
    if (!Is("POST")) return MethodNotAllowed();
    sdwan::Lab& lab = RunningLab();
    NodeId device = DeviceOf(lab, RequireString(body(), "device"));
    std::string token = FabricOf(lab).IssueCertificate(device);
    return JsonResponse(200, {{"device", device.str()}, {"certificate", token}});
  }
  if (head == "allowlist" && s.size() == 1) {
    sdwan::Lab& lab = RunningLab();
    sdwan::Fabric& fabric = FabricOf(lab);
    if (Is("PUT")) {
      fabric.UploadAllowlist(StringList(body(), "serials"));
    } else if (!Is("GET")) {
      return MethodNotAllowed();
    }
    return JsonResponse(200, {{"serials", fabric.allowlist()},
                              {"available", fabric.AvailableDevices()}});
  }
  if (head == "connections" && s.size() == 1) {
    if (!Is("GET")) return MethodNotAllowed();
    json out = json::array();
    for (const auto& connection : FabricOf(RunningLab()).Connections()) {
      out.push_back(ToJson(connection));
    }
    return JsonResponse(200, out);
  }
  throw Error(ErrorCode::kNotFound, "no route " + request_.path);
}

Response Router::Scenarios(const std::vector<std::string>& s) {
  if (s.size() == 1) {
    if (Is("GET")) {
      json out = json::array();
      for (const auto& name : session_.ScenarioNames()) {
        const auto& spec = session_.Scenario(name);
        out.push_back({{"name", name},
                       {"nodes", spec.nodes.size()},
                       {"links", spec.links.size()},
                       {"probes", spec.probes.size()},
                       {"sdwan", spec.sdwan.has_value()},
                       {"running", session_.IsRunning(name)},
                       {"active", session_.active() == name}});
      }
      return JsonResponse(200, out);
    }
    if (Is("POST")) {
      std::string name = session_.LoadFile(RequireString(body(), "path"));
      return JsonResponse(201, {{"name", name}});
    }
    return MethodNotAllowed();
  }
  if (s.size() == 3 && s[2] == "run") {
    if (!Is("POST")) return MethodNotAllowed();
    sdwan::Lab& lab = session_.Run(s[1], OptionalBool(body(), "provision", false));
    json devices = json::array();
    if (lab.fabric != nullptr) {
      for (const auto& record : lab.fabric->Records()) {
        devices.push_back(ToJson(record));
      }
    }
    return JsonResponse(200, {{"name", lab.spec.name}, {"devices", devices}});
  }
  throw Error(ErrorCode::kNotFound, "no route " + request_.path);
}

Response Router::Devices(const std::vector<std::string>& s) {
  sdwan::Lab& lab = RunningLab();
  if (s.size() == 1) {
    if (!Is("GET")) return MethodNotAllowed();
    json out = json::array();
    if (lab.fabric != nullptr) {
      for (const auto& record : lab.fabric->Records()) {
        out.push_back(ToJson(record));
      }
    }
    return JsonResponse(200, out);
  }
  NodeId device = DeviceOf(lab, s[1]);
  if (s.size() == 2) {
    if (!Is("GET")) return MethodNotAllowed();
    const sim::Node& node = lab.sim->network().node(device);
    json out = {{"id", device.str()},
                {"role", RoleName(node.role)},
                {"area", node.area},
                {"hostname", node.config.hostname},
                {"mode", ManagementModeName(node.mode)},
                {"config_hash", HexDigest(node.config.Hash())},
                {"record", nullptr}};
    if (lab.fabric != nullptr) {
      if (const auto* record = lab.fabric->FindByNode(device)) {
        out["record"] = ToJson(*record);
      }
    }
    return JsonResponse(200, out);
  }
  if (s.size() != 3) throw Error(ErrorCode::kNotFound, "no route " + request_.path);
  const std::string& action = s[2];
  if (action == "hardware") {
    if (!Is("GET")) return MethodNotAllowed();
    return JsonResponse(
        200, ToJson(measurement::SampleHardware(*lab.sim, lab.fabric.get(), device)));
  }
  if (action == "routes") {
    if (!Is("GET")) return MethodNotAllowed();
    return JsonResponse(200, ToJson(lab.sim->RibOf(device)));
  }
  if (action == "sync") {
    if (!Is("POST")) return MethodNotAllowed();
    sdwan::Fabric& fabric = FabricOf(lab);
    fabric.Sync(device);
    return JsonResponse(200, ToJson(*fabric.FindByNode(device)));
  }
  if (action == "exec") {
    if (!Is("POST")) return MethodNotAllowed();
    std::string command = RequireString(body(), "command");
    std::string output = FabricOf(lab).CliExec(device, command);
    return JsonResponse(200, {{"device", device.str()},
                              {"command", command},
                              {"output", output}});
  }
  throw Error(ErrorCode::kNotFound, "no route " + request_.path);
}

Response Router::Templates(const std::vector<std::string>& s) {
  if (s.size() == 1) {
    if (Is("GET")) {
      json out = json::array();
      for (const auto& [id, tmpl] : session_.templates()) {
        out.push_back(templates::TemplateToJson(tmpl));
      }
      return JsonResponse(200, out);
    }
    if (Is("POST")) {
      templates::DeviceTemplate tmpl = templates::ParseTemplate(request_.body);
      json out = templates::TemplateToJson(tmpl);
      bool created = session_.PutTemplate(std::move(tmpl));
      return JsonResponse(created ? 201 : 200, out);
    }
    return MethodNotAllowed();
  }
  if (s.size() == 2) {
    if (!Is("GET")) return MethodNotAllowed();
    return JsonResponse(200, templates::TemplateToJson(session_.Template(s[1])));
  }
  if (s.size() == 3 && s[2] == "push") {
    if (!Is("POST")) return MethodNotAllowed();
    const templates::DeviceTemplate& tmpl = session_.Template(s[1]);
    sdwan::Fabric& fabric = FabricOf(RunningLab());
    sdwan::PushResult result = fabric.PushTemplate(
        tmpl, RequireString(body(), "serial"), Variables(body()));
    return JsonResponse(200, ToJson(result));
  }
  throw Error(ErrorCode::kNotFound, "no route " + request_.path);
}

Response Router::Experiments(const std::vector<std::string>& s) {
  if (s.size() != 2) throw Error(ErrorCode::kNotFound, "no route " + request_.path);
  if (!Is("POST")) return MethodNotAllowed();
  if (s[1] == "ping") {
    std::string name = session_.ResolveRunning(ScenarioOf(request_, body()));
    sdwan::Lab& lab = session_.Lab(name);
    measurement::PingCampaign campaign;
    campaign.src = DeviceOf(lab, RequireString(body(), "src"));
    campaign.dst = DeviceOf(lab, RequireString(body(), "dst"));
    campaign.count = static_cast<int>(
        OptionalInteger(body(), "count", measurement::kDefaultCount));
    campaign.size_bytes = static_cast<int>(
        OptionalInteger(body(), "size", measurement::kDefaultSizeBytes));
    campaign.seed = static_cast<uint64_t>(
        OptionalInteger(body(), "seed", static_cast<int64_t>(lab.spec.defaults.seed)));
    measurement::PingReport report = measurement::RunPing(*lab.sim, campaign);
    std::string id = session_.AddPingReport(name, report);
    return JsonResponse(201, {{"id", id}, {"scenario", name}, {"report", ToJson(report)}});
  }
  if (s[1] == "compare") {
    const auto& traditional = session_.Scenario(RequireString(body(), "traditional"));
    const auto& sdwan = session_.Scenario(RequireString(body(), "sdwan"));
    measurement::ComparisonOptions options;
    std::string name = OptionalString(body(), "name");
    if (!name.empty()) options.name = name;
    options.paths = StringList(body(), "paths");
    options.count = static_cast<int>(
        OptionalInteger(body(), "count", measurement::kDefaultCount));
    options.size_bytes = static_cast<int>(
        OptionalInteger(body(), "size", measurement::kDefaultSizeBytes));
    options.seed = static_cast<uint64_t>(OptionalInteger(
        body(), "seed", static_cast<int64_t>(traditional.defaults.seed)));
    measurement::ComparisonReport report =
        measurement::RunComparison(traditional, sdwan, options);
    std::string id = session_.AddComparison(report);
    return JsonResponse(201, {{"id", id}, {"report", ToJson(report)}});
  }
  throw Error(ErrorCode::kNotFound, "no route " + request_.path);
}

Response Router::Reports(const std::vector<std::string>& s) {
  if (!Is("GET")) return MethodNotAllowed();
  if (s.size() == 1) {
    json out = json::array();
    for (const auto& [id, report] : session_.reports()) {
      out.push_back({{"id", id}, {"kind", report.kind}, {"scenario", report.scenario}});
    }
    return JsonResponse(200, out);
  }
  if (s.size() == 2) {
    const StoredReport& report = session_.Report(s[1]);
    return JsonResponse(200, {{"id", report.id},
                              {"kind", report.kind},
                              {"scenario", report.scenario},
                              {"report", report.body}});
  }
  throw Error(ErrorCode::kNotFound, "no route " + request_.path);
}

}  // namespace

Response Api::Handle(const Request& request) {
  std::lock_guard<std::mutex> lock(mutex_);
  try {
    return Dispatch(request);
  } catch (const Error& e) {
    return ErrorResponse(HttpStatus(e.code()), ErrorCodeName(e.code()), e.what());
  } catch (const std::exception& e) {
    return ErrorResponse(500, ErrorCodeName(ErrorCode::kInternal), e.what());
  }
}

Response Api::Dispatch(const Request& request) {
  const std::string& path = request.path;
  if (path == "/" && request.method == "GET") {
    Response response;
    response.status = 302;
    response.content_type = "text/plain";
    response.headers["Location"] = std::string(kUiPrefix) + "/";
    return response;
  }
  std::vector<std::string> segments = Segments(path);
  if (segments.size() >= 2 && segments[0] == "api" && segments[1] == "v1") {
    segments.erase(segments.begin(), segments.begin() + 2);
    return Router(session_, request).Route(segments);
  }
  if (!segments.empty() && segments[0] == "ui") {
    if (request.method != "GET" && request.method != "HEAD") {
      return MethodNotAllowed();
    }
    std::string relative;
    for (size_t i = 1; i < segments.size(); ++i) {
      if (segments[i] == "..") {
        throw Error(ErrorCode::kNotFound, "no such file " + path);
      }
      relative += (relative.empty() ? "" : "/") + segments[i];
    }
    return ServeUi(relative);
  }
  throw Error(ErrorCode::kNotFound, "no route " + path);
}

Response Api::ServeUi(const std::string& relative) const {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path root = fs::weakly_canonical(ui_dir_, ec);
  if (ec || !fs::is_directory(root)) {
    throw Error(ErrorCode::kNotFound, "dashboard is not installed");
  }
  fs::path file = fs::weakly_canonical(root / relative, ec);
  if (!ec && fs::is_directory(file)) file /= "index.html";
  auto [root_end, unused] =
      std::mismatch(root.begin(), root.end(), file.begin(), file.end());
  if (ec || root_end != root.end() || !fs::is_regular_file(file)) {
    throw Error(ErrorCode::kNotFound, "no such file /ui/" + relative);
  }
  std::ifstream in(file, std::ios::binary);
  std::ostringstream content;
  content << in.rdbuf();
  Response response;
  response.content_type = ContentType(file);
  response.body = content.str();
  return response;
}

int ResolvePort(int flag_port) {
  int port = kDefaultPort;
  if (flag_port > 0) {
    port = flag_port;
  } else if (const char* env = std::getenv("SDWANLAB_PORT");
             env != nullptr && *env != '\0') {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > 65535) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("SDWANLAB_PORT is not a port number: ") + env);
    }
    port = static_cast<int>(value);
  }
  if (port < 1 || port > 65535) {
    throw Error(ErrorCode::kInvalidArgument,
                "port out of range: " + std::to_string(port));
  }
  return port;
}

struct HttpServer::Impl {
  Api& api;
  httplib::Server server;
};

HttpServer::HttpServer(Api& api) : impl_(new Impl{api, {}}) {
  auto handler = [this](const httplib::Request& in, httplib::Response& out) {
    Request request;
    request.method = in.method;
    request.path = in.path;
    for (const auto& [key, value] : in.params) request.query[key] = value;
    request.body = in.body;
    Response response = impl_->api.Handle(request);
    out.status = response.status;
    for (const auto& [key, value] : response.headers) out.set_header(key, value);
    out.set_content(response.body, response.content_type);
  };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Put(".*", handler);
  impl_->server.Delete(".*", handler);
  impl_->server.Patch(".*", handler);
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw Error(ErrorCode::kInternal, "cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error(ErrorCode::kInternal,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::Listen() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace sdwanlab::gateway
