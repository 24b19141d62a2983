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

#ifndef SDWANLAB_SIM_EVENT_QUEUE_H_
#define SDWANLAB_SIM_EVENT_QUEUE_H_

#include <cstdint>
#include <functional>
#include <vector>

namespace sdwanlab::sim {

struct EventHandle {
  uint64_t seq = 0;
};

// Single-threaded discrete-event clock. Events fire in (time, insertion
// sequence) order, so equal-time events run in the order they were scheduled.
class EventQueue {
 public:
  using Action = std::function<void()>;

  double now() const { return now_; }
  size_t pending() const { return heap_.size(); }
  uint64_t fired() const { return fired_; }

  // Throws Error(kSchedulingInPast) when at_ms < now().
  EventHandle Schedule(double at_ms, Action action);
  EventHandle ScheduleAfter(double delay_ms, Action action);

  // Runs the earliest event; false when the queue is empty.
  bool Step();
  void RunUntilIdle();
  // Runs every event with time <= until_ms and leaves the clock at until_ms.
  void RunUntil(double until_ms);

 private:
  struct Entry {
    double at;
    uint64_t seq;
    Action action;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      return a.at != b.at ? a.at > b.at : a.seq > b.seq;
    }
  };

  std::vector<Entry> heap_;
  double now_ = 0.0;
  uint64_t next_seq_ = 0;
  uint64_t fired_ = 0;
};

}  // namespace sdwanlab::sim

#endif  // SDWANLAB_SIM_EVENT_QUEUE_H_
