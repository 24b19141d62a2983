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

#include "sdwanlab/sim/event_queue.h"

#include <algorithm>
#include <sstream>

#include "sdwanlab/error.h"

namespace sdwanlab::sim {

EventHandle EventQueue::Schedule(double at_ms, Action action) {
  if (at_ms < now_) {
    std::ostringstream message;
    message << "cannot schedule at t=" << at_ms << " ms, clock is at " << now_
            << " ms";
    throw Error(ErrorCode::kSchedulingInPast, message.str());
  }
  EventHandle handle{next_seq_++};
  heap_.push_back(Entry{at_ms, handle.seq, std::move(action)});
  std::push_heap(heap_.begin(), heap_.end(), Later());
  return handle;
}

EventHandle EventQueue::ScheduleAfter(double delay_ms, Action action) {
  return Schedule(now_ + delay_ms, std::move(action));
}

bool EventQueue::Step() {
  if (heap_.empty()) return false;
  std::pop_heap(heap_.begin(), heap_.end(), Later());
  Entry entry = std::move(heap_.back());
  heap_.pop_back();
  now_ = entry.at;
  ++fired_;
  entry.action();
  return true;
}

void EventQueue::RunUntilIdle() {
  while (Step()) {
  }
}

void EventQueue::RunUntil(double until_ms) {
  while (!heap_.empty() && heap_.front().at <= until_ms) Step();
  if (until_ms > now_) now_ = until_ms;
}

}  // namespace sdwanlab::sim
