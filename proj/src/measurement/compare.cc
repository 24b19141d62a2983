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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sdwanlab/error.h"
#include "sdwanlab/measurement/measurement.h"

namespace sdwanlab::measurement {
namespace {

std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string Pad(const std::string& text, size_t width) {
  return text.size() >= width ? text + " " : text + std::string(width - text.size(), ' ');
}

const scenario::ProbeSpec* MatchProbe(const scenario::ScenarioSpec& spec,
                                      const scenario::ProbeSpec& probe) {
  for (const auto& candidate : spec.probes) {
    if (candidate.src_area == probe.src_area &&
        candidate.dst_area == probe.dst_area) {
      return &candidate;
    }
  }
  return nullptr;
}

std::string Endpoint(const std::string& area, const NodeId& node) {
  return area + " (" + node.str() + ")";
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw Error(ErrorCode::kInternal, "cannot write " + path.string());
}

}  // namespace

ComparisonReport RunComparison(const scenario::ScenarioSpec& traditional,
                               const scenario::ScenarioSpec& sdwan,
                               const ComparisonOptions& options) {
  std::vector<const scenario::ProbeSpec*> selected;
  if (options.paths.empty()) {
    for (const auto& probe : traditional.probes) selected.push_back(&probe);
  } else {
    for (const auto& name : options.paths) {
      const scenario::ProbeSpec* probe = traditional.FindProbe(name);
      if (probe == nullptr) {
        throw Error(ErrorCode::kNotFound, "no probe named " + name + " in " +
                                              traditional.name);
      }
      selected.push_back(probe);
    }
  }
  if (selected.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no paths to compare");
  }
  std::vector<std::pair<const scenario::ProbeSpec*, const scenario::ProbeSpec*>>
      pairs;
  for (const auto* probe : selected) {
    const scenario::ProbeSpec* match = MatchProbe(sdwan, *probe);
    if (match == nullptr) {
      throw Error(ErrorCode::kValidationError,
                  "no path from " + probe->src_area + " to " + probe->dst_area +
                      " in " + sdwan.name);
    }
    pairs.emplace_back(probe, match);
  }

  sdwan::Lab trad_lab = sdwan::MakeLab(traditional);
  sdwan::BringUp(trad_lab);
  sdwan::Lab sdwan_lab = sdwan::MakeLab(sdwan);
  sdwan::BringUp(sdwan_lab);

  ComparisonReport report;
  report.name = options.name;
  report.traditional_scenario = traditional.name;
  report.sdwan_scenario = sdwan.name;
  report.count = options.count;
  report.size_bytes = options.size_bytes;
  report.seed = options.seed;
  for (const auto& [trad_probe, sdwan_probe] : pairs) {
    PathComparison path;
    path.name = trad_probe->name;
    path.src_area = trad_probe->src_area;
    path.dst_area = trad_probe->dst_area;
    path.traditional = RunPing(
        *trad_lab.sim, PingCampaign{trad_probe->src, trad_probe->dst,
                                    options.count, options.size_bytes,
                                    options.seed});
    path.sdwan = RunPing(
        *sdwan_lab.sim, PingCampaign{sdwan_probe->src, sdwan_probe->dst,
                                     options.count, options.size_bytes,
                                     options.seed});
    path.avg_delta_ms = path.sdwan.avg_ms - path.traditional.avg_ms;
    path.avg_ratio = path.traditional.avg_ms > 0
                         ? path.sdwan.avg_ms / path.traditional.avg_ms
                         : 0.0;
    path.ttl_delta = path.sdwan.observed_ttl - path.traditional.observed_ttl;
    report.paths.push_back(std::move(path));
  }
  report.hardware = HardwareTable(sdwan_lab);
  return report;
}

std::string PingsCsv(const ComparisonReport& report) {
  std::ostringstream out;
  out << "scenario,src,dst,sent,received,ttl,min_ms,max_ms,avg_ms\n";
  auto row = [&](const std::string& scenario, const PingReport& ping) {
    out << scenario << "," << ping.src.str() << "," << ping.dst.str() << ","
        << ping.sent << "," << ping.received << "," << ping.observed_ttl << ","
        << Fixed(ping.min_ms, 3) << "," << Fixed(ping.max_ms, 3) << ","
        << Fixed(ping.avg_ms, 3) << "\n";
  };
  for (const auto& path : report.paths) row(report.traditional_scenario, path.traditional);
  for (const auto& path : report.paths) row(report.sdwan_scenario, path.sdwan);
  return out.str();
}

std::string HardwareCsv(const ComparisonReport& report) {
  std::ostringstream out;
  out << "device,num_cpus,mem_total_mb,cpu_pct,mem_pct\n";
  for (const auto& sample : report.hardware) {
    out << sample.device.str() << "," << sample.num_cpus << ","
        << sample.memory_total_mb << "," << Fixed(sample.cpu_pct, 2) << ","
        << Fixed(sample.mem_pct, 2) << "\n";
  }
  return out.str();
}

std::string SummaryText(const ComparisonReport& report) {
  std::ostringstream out;
  out << "Comparison report: " << report.name << "\n"
      << "Scenarios: " << report.traditional_scenario << " vs "
      << report.sdwan_scenario << "\n"
      << "Campaign: " << report.count << " packets of " << report.size_bytes
      << " bytes per path, seed " << report.seed << "\n";

  auto transmission = [&](const std::string& title, bool sdwan_side) {
    out << "\nTransmission performance: " << title << "\n"
        << Pad("Source", 28) << Pad("Destination", 28) << Pad("Packet Size", 13)
        << Pad("TTL", 5) << Pad("Max RTT", 12) << Pad("Min RTT", 12)
        << "Avg RTT\n";
    for (const auto& path : report.paths) {
      const PingReport& ping = sdwan_side ? path.sdwan : path.traditional;
      out << Pad(Endpoint(path.src_area, ping.src), 28)
          << Pad(Endpoint(path.dst_area, ping.dst), 28)
          << Pad(std::to_string(report.size_bytes) + " bytes", 13)
          << Pad(std::to_string(ping.observed_ttl), 5)
          << Pad(Fixed(ping.max_ms, 3) + " ms", 12)
          << Pad(Fixed(ping.min_ms, 3) + " ms", 12) << Fixed(ping.avg_ms, 3)
          << " ms";
      if (ping.received != ping.sent) {
        out << "  (" << ping.received << "/" << ping.sent << " replies)";
      }
      out << "\n";
    }
  };
  transmission(report.traditional_scenario, false);
  transmission(report.sdwan_scenario, true);

  out << "\nAverage RTT by path (ms)\n"
      << Pad("Path", 14) << Pad(report.traditional_scenario, 14)
      << Pad(report.sdwan_scenario, 14) << Pad("Delta", 10) << "Ratio\n";
  for (const auto& path : report.paths) {
    out << Pad(path.name, 14) << Pad(Fixed(path.traditional.avg_ms, 3), 14)
        << Pad(Fixed(path.sdwan.avg_ms, 3), 14)
        << Pad(Fixed(path.avg_delta_ms, 3), 10) << Fixed(path.avg_ratio, 3)
        << "\n";
  }

  out << "\nObserved TTL by path\n"
      << Pad("Path", 14) << Pad(report.traditional_scenario, 14)
      << Pad(report.sdwan_scenario, 14) << "Delta\n";
  for (const auto& path : report.paths) {
    out << Pad(path.name, 14)
        << Pad(std::to_string(path.traditional.observed_ttl), 14)
        << Pad(std::to_string(path.sdwan.observed_ttl), 14) << path.ttl_delta
        << "\n";
  }

  out << "\nDevice CPU and memory usage (" << report.sdwan_scenario << ")\n";
  if (report.hardware.empty()) {
    out << "(no SD-WAN devices)\n";
  } else {
    out << Pad("Device", 12) << Pad("Number of CPUs", 16)
        << Pad("Memory Total", 14) << Pad("CPU Usage", 11) << "Memory Usage\n";
    for (const auto& sample : report.hardware) {
      out << Pad(sample.device.str(), 12)
          << Pad(std::to_string(sample.num_cpus), 16)
          << Pad(std::to_string(sample.memory_total_mb) + " MB", 14)
          << Pad(Fixed(sample.cpu_pct, 2) + "%", 11)
          << Fixed(sample.mem_pct, 2) << "%\n";
    }
  }
  return out.str();
}

void WriteReport(const ComparisonReport& report,
                 const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorCode::kInternal,
                "cannot create " + dir.string() + ": " + ec.message());
  }
  WriteFile(dir / "summary.txt", SummaryText(report));
  WriteFile(dir / "pings.csv", PingsCsv(report));
  WriteFile(dir / "hardware.csv", HardwareCsv(report));
}

}  // namespace sdwanlab::measurement
