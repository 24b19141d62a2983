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

#include <gtest/gtest.h>

#include "sdwanlab/error.h"
#include "sdwanlab/scenario/scenario.h"
#include "sdwanlab/sim/event_queue.h"
#include "sdwanlab/sim/link_model.h"
#include "sdwanlab/sim/simulator.h"
#include "support/oracles.h"

namespace sdwanlab::sim {
namespace {

TEST(EventQueue, RunsInTimeOrderAndFifoOnTies) {
  EventQueue queue;
  std::vector<int> order;
  queue.Schedule(5.0, [&] { order.push_back(3); });
  queue.Schedule(1.0, [&] { order.push_back(1); });
  queue.Schedule(1.0, [&] { order.push_back(2); });
  queue.Schedule(9.0, [&] { order.push_back(4); });
  queue.RunUntilIdle();
  EXPECT_EQ(order, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_DOUBLE_EQ(queue.now(), 9.0);
  EXPECT_EQ(queue.fired(), 4u);
}

TEST(EventQueue, RejectsSchedulingInThePast) {
  EventQueue queue;
  queue.Schedule(3.0, [] {});
  queue.RunUntilIdle();
  try {
    queue.Schedule(2.0, [] {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchedulingInPast);
  }
}

TEST(EventQueue, EventsMayScheduleMoreEvents) {
  EventQueue queue;
  int fired = 0;
  std::function<void()> tick = [&] {
    if (++fired < 5) queue.ScheduleAfter(2.0, tick);
  };
  queue.Schedule(0.0, tick);
  queue.RunUntilIdle();
  EXPECT_EQ(fired, 5);
  EXPECT_DOUBLE_EQ(queue.now(), 8.0);
}

TEST(EventQueue, RunUntilStopsAtTheHorizon) {
  EventQueue queue;
  int fired = 0;
  queue.Schedule(1.0, [&] { ++fired; });
  queue.Schedule(4.0, [&] { ++fired; });
  queue.RunUntil(2.5);
  EXPECT_EQ(fired, 1);
  EXPECT_DOUBLE_EQ(queue.now(), 2.5);
  EXPECT_EQ(queue.pending(), 1u);
}

TEST(LinkModel, DelayStaysWithinLatencyPlusJitter) {
  Link link;
  link.latency_ms = 0.05;
  link.jitter_ms = 0.17;
  std::mt19937_64 rng(1);
  double sum = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    Transmission tx = Transmit(link, rng);
    ASSERT_FALSE(tx.dropped);
    ASSERT_GE(tx.delay_ms, 0.05);
    ASSERT_LE(tx.delay_ms, 0.22);
    sum += tx.delay_ms;
  }
  EXPECT_NEAR(sum / n, 0.05 + 0.085, 0.005);
}

TEST(LinkModel, LossExtremesAndDeterminism) {
  Link link;
  link.latency_ms = 1.0;
  std::mt19937_64 rng(3);
  link.loss_pct = 100.0;
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(Transmit(link, rng).dropped);
  link.loss_pct = 0.0;
  for (int i = 0; i < 100; ++i) EXPECT_FALSE(Transmit(link, rng).dropped);
  link.loss_pct = 30.0;
  link.jitter_ms = 0.5;
  std::mt19937_64 a(11), b(11);
  for (int i = 0; i < 100; ++i) {
    Transmission x = Transmit(link, a), y = Transmit(link, b);
    EXPECT_EQ(x.dropped, y.dropped);
    EXPECT_EQ(x.delay_ms, y.delay_ms);
  }
}

class RandomTopologyTest : public ::testing::Test {
 protected:
  std::unique_ptr<Simulator> Make(const testing::RttTopology& topology) {
    return scenario::Build(scenario::LoadScenario(topology.document));
  }
};

TEST_F(RandomTopologyTest, TracedPathMatchesTheUniqueShortestPath) {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 20; ++trial) {
    auto topology = testing::RandomRttTopology(rng);
    auto sim = Make(topology);
    NetAddress dst = *sim->network().node(topology.dst).PrimaryAddress();
    PathTrace trace = sim->TracePath(topology.src, dst);
    ASSERT_TRUE(trace.delivered) << trace.failure;
    EXPECT_EQ(trace.hops, topology.path);
    EXPECT_NEAR(2 * trace.one_way_delay_ms, topology.expected_rtt_ms, 1e-9);
    EXPECT_TRUE(sim->Reachable(topology.src, topology.dst));
  }
}

TEST_F(RandomTopologyTest, TtlDropsByOnePerRouter) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    auto topology = testing::RandomRttTopology(rng);
    auto sim = Make(topology);
    int routers = 0;
    for (const auto& hop : topology.path) {
      if (sim->network().node(hop).forwards()) ++routers;
    }
    NetAddress dst = *sim->network().node(topology.dst).PrimaryAddress();
    PathTrace trace = sim->TracePath(topology.src, dst);
    EXPECT_EQ(trace.ttl_decrements, routers);
    EXPECT_EQ(trace.final_ttl, kDefaultInitialTtl - routers);
  }
}

// Sends one echo request and returns what the source consumed.
std::vector<Packet> Exchange(Simulator& sim, const NodeId& src,
                             const NodeId& dst, int ttl) {
  std::vector<Packet> received;
  int token = sim.AddListener([&](const NodeId& at, const Packet& p, double) {
    if (at == src) received.push_back(p);
  });
  Packet packet;
  packet.src = *sim.network().node(src).PrimaryAddress();
  packet.dst = *sim.network().node(dst).PrimaryAddress();
  packet.ttl = ttl;
  packet.seq = 1;
  sim.Send(src, packet);
  sim.RunUntilIdle();
  sim.RemoveListener(token);
  return received;
}

TEST_F(RandomTopologyTest, ExpiredTtlReturnsTimeExceeded) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto topology = testing::RandomRttTopology(rng);
    auto sim = Make(topology);
    int routers = 0;
    for (const auto& hop : topology.path) {
      if (sim->network().node(hop).forwards()) ++routers;
    }
    auto ok = Exchange(*sim, topology.src, topology.dst, routers + 1);
    ASSERT_EQ(ok.size(), 1u);
    EXPECT_EQ(ok[0].kind, PacketKind::kEchoReply);
    auto expired = Exchange(*sim, topology.src, topology.dst, routers);
    ASSERT_EQ(expired.size(), 1u);
    EXPECT_EQ(expired[0].kind, PacketKind::kTtlExceeded);
    EXPECT_EQ(sim->stats().nonpositive_ttl_sent, 0u);
    EXPECT_EQ(sim->stats().ttl_expired, 1u);
  }
}

TEST_F(RandomTopologyTest, SameSeedSameTrace) {
  std::mt19937_64 rng(12);
  auto topology = testing::RandomRttTopology(rng, /*jitter_ms=*/0.3);
  auto first = Make(topology);
  auto second = Make(topology);
  for (int i = 0; i < 5; ++i) {
    Exchange(*first, topology.src, topology.dst, 64);
    Exchange(*second, topology.src, topology.dst, 64);
  }
  EXPECT_FALSE(first->trace().empty());
  EXPECT_EQ(first->trace(), second->trace());
}

TEST_F(RandomTopologyTest, UnknownDestinationIsUnreachable) {
  std::mt19937_64 rng(13);
  auto topology = testing::RandomRttTopology(rng);
  auto sim = Make(topology);
  std::vector<Packet> received;
  sim->AddListener([&](const NodeId& at, const Packet& p, double) {
    if (at == topology.src) received.push_back(p);
  });
  Packet packet;
  packet.src = *sim->network().node(topology.src).PrimaryAddress();
  packet.dst = *NetAddress::Parse("192.0.2.1");
  sim->Send(topology.src, packet);
  sim->RunUntilIdle();
  ASSERT_EQ(received.size(), 1u);
  EXPECT_EQ(received[0].kind, PacketKind::kUnreachable);
  EXPECT_EQ(sim->stats().no_route, 1u);
}

TEST(Simulator, ActivityDecaysBetweenEvents) {
  auto spec = scenario::LoadScenarioFile(testing::CanonicalScenario("traditional"));
  auto sim = scenario::Build(spec);
  NodeId r1("HQ-R1");
  EXPECT_EQ(sim->ActivityOf(r1).events, 0u);
  sim->RecordActivity(r1);
  EXPECT_DOUBLE_EQ(sim->ActivityOf(r1).load, 1.0);
  double tau = sim->network().node(r1).hardware.cpu_decay_ms;
  sim->events().Schedule(tau, [] {});
  sim->RunUntilIdle();
  sim->RecordActivity(r1);
  EXPECT_NEAR(sim->ActivityOf(r1).load, 1.0 + std::exp(-1.0), 1e-12);
  EXPECT_EQ(sim->ActivityOf(r1).events, 2u);
}

}  // namespace
}  // namespace sdwanlab::sim
