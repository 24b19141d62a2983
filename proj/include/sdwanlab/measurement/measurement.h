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

#ifndef SDWANLAB_MEASUREMENT_MEASUREMENT_H_
#define SDWANLAB_MEASUREMENT_MEASUREMENT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sdwanlab/scenario/scenario.h"
#include "sdwanlab/sdwan/fabric.h"
#include "sdwanlab/sdwan/lab.h"
#include "sdwanlab/sim/simulator.h"

namespace sdwanlab::measurement {

inline constexpr int kDefaultCount = 100;
inline constexpr int kDefaultSizeBytes = 84;
inline constexpr double kPingIntervalMs = 1000.0;

struct PingCampaign {
  NodeId src;
  NodeId dst;
  int count = kDefaultCount;
  int size_bytes = kDefaultSizeBytes;
  uint64_t seed = 1;
};

struct PingReport {
  NodeId src;
  NodeId dst;
  int sent = 0;
  int received = 0;
  int observed_ttl = -1;  // -1 when nothing came back
  bool ttl_stable = true;
  double min_ms = 0.0;
  double max_ms = 0.0;
  double avg_ms = 0.0;
  std::vector<double> rtts_ms;  // in sequence order of the replies
};

// Sends `count` echo requests one second apart and waits for the network
// to go idle. Reseeds the simulator with campaign.seed first, so a campaign
// is reproducible regardless of what ran before. Throws kUnknownEndpoint and
// kInvalidArgument.
PingReport RunPing(sim::Simulator& sim, const PingCampaign& campaign);

struct HardwareSample {
  NodeId device;
  int num_cpus = 0;
  int memory_total_mb = 0;
  double cpu_pct = 0.0;
  double mem_pct = 0.0;
  double at_ms = 0.0;
};

// Objects a device keeps state for: inventory and templates on manage,
// allowlisted serials on bond, control connections on smart, routes
// elsewhere.
int ManagedObjects(const sim::Simulator& sim, const sdwan::Fabric* fabric,
                   const NodeId& device);

// Pure read of the hardware model at the current simulation time.
// Throws kUnknownDevice.
HardwareSample SampleHardware(const sim::Simulator& sim,
                              const sdwan::Fabric* fabric,
                              const NodeId& device);

struct PathComparison {
  std::string name;
  std::string src_area;
  std::string dst_area;
  PingReport traditional;
  PingReport sdwan;
  double avg_ratio = 0.0;     // sdwan / traditional
  double avg_delta_ms = 0.0;  // sdwan - traditional
  int ttl_delta = 0;          // sdwan - traditional
};

struct ComparisonReport {
  std::string name;
  std::string traditional_scenario;
  std::string sdwan_scenario;
  int count = kDefaultCount;
  int size_bytes = kDefaultSizeBytes;
  uint64_t seed = 1;
  std::vector<PathComparison> paths;
  std::vector<HardwareSample> hardware;
};

struct ComparisonOptions {
  std::string name = "comparison";
  // Probe names from the traditional scenario; empty means all of them.
  std::vector<std::string> paths;
  int count = kDefaultCount;
  int size_bytes = kDefaultSizeBytes;
  uint64_t seed = 1;
};

// Builds and brings up both scenarios, then runs matched campaigns. Probes
// are matched on (source area, destination area).
ComparisonReport RunComparison(const scenario::ScenarioSpec& traditional,
                               const scenario::ScenarioSpec& sdwan,
                               const ComparisonOptions& options);

// SD-WAN devices in display order: manage, bond, smart, then edges by id.
std::vector<HardwareSample> HardwareTable(const sdwan::Lab& lab);

std::string PingsCsv(const ComparisonReport& report);
std::string HardwareCsv(const ComparisonReport& report);
std::string SummaryText(const ComparisonReport& report);

// Writes summary.txt, pings.csv and hardware.csv into `dir`.
void WriteReport(const ComparisonReport& report,
                 const std::filesystem::path& dir);

}  // namespace sdwanlab::measurement

#endif  // SDWANLAB_MEASUREMENT_MEASUREMENT_H_
