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

#ifndef SDWANLAB_GATEWAY_API_H_
#define SDWANLAB_GATEWAY_API_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "sdwanlab/gateway/session.h"

namespace sdwanlab::gateway {

inline constexpr int kDefaultPort = 8080;
inline constexpr const char* kApiPrefix = "/api/v1";
inline constexpr const char* kUiPrefix = "/ui";

struct Request {
  std::string method;  // upper case
  std::string path;    // without query string
  std::map<std::string, std::string> query;
  std::string body;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;
};

// Transport-independent request handling. One lock serializes every request,
// so mutations of a lab never interleave and reads see a consistent state.
class Api {
 public:
  Api(Session& session, std::filesystem::path ui_dir)
      : session_(session), ui_dir_(std::move(ui_dir)) {}

  // Never throws: domain errors become their mapped status, anything else 500.
  Response Handle(const Request& request);

 private:
  Response Dispatch(const Request& request);
  Response ServeUi(const std::string& relative) const;

  Session& session_;
  std::filesystem::path ui_dir_;
  std::mutex mutex_;
};

// --port, then SDWANLAB_PORT, then 8080. Throws kInvalidArgument on a
// malformed value.
int ResolvePort(int flag_port);

// Blocking HTTP front end over an Api.
class HttpServer {
 public:
  explicit HttpServer(Api& api);
  ~HttpServer();

  // Binds; port 0 picks a free port. Returns the bound port.
  int Bind(const std::string& host, int port);
  // Serves until Stop(). Call after Bind.
  void Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sdwanlab::gateway

#endif  // SDWANLAB_GATEWAY_API_H_
