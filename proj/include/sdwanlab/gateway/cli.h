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

#ifndef SDWANLAB_GATEWAY_CLI_H_
#define SDWANLAB_GATEWAY_CLI_H_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdwanlab/gateway/session.h"

namespace sdwanlab::gateway {

struct CliEnvironment {
  // Holds journal.jsonl, the replayable record of state-changing commands.
  std::filesystem::path state_dir = ".sdwanlab";
  std::filesystem::path ui_dir = "ui";
};

// SDWANLAB_STATE_DIR and SDWANLAB_UI_DIR override the defaults.
CliEnvironment EnvironmentFromEnv();

// Append-only JSON-lines log. Replaying it into a fresh Session rebuilds
// the state left by earlier invocations.
class Journal {
 public:
  explicit Journal(std::filesystem::path file) : file_(std::move(file)) {}

  std::vector<nlohmann::json> Read() const;
  void Append(const nlohmann::json& entry) const;
  void Clear() const;
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
};

// Applies one journal entry ({"op": "load"|"run"|"onboard"|"push"|"exec"}),
// writing human-readable output when `out` is set.
void ApplyEntry(Session& session, const nlohmann::json& entry,
                std::ostream* out);

// Entry point of the sdwanlab tool; args exclude the program name. Returns
// 0, 1 for domain errors or 2 for usage errors, with one line on `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, const CliEnvironment& env);

}  // namespace sdwanlab::gateway

#endif  // SDWANLAB_GATEWAY_CLI_H_
