#include "wsnsim/network.hpp"

#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"

namespace wsnsim {
namespace {

TEST(Distance, HandValues) {
  EXPECT_DOUBLE_EQ(distance({0, 0}, {3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(distance({7.5, -2}, {7.5, -2}), 0.0);
  // sqrt(2) by hand
  EXPECT_DOUBLE_EQ(distance({0, 0}, {1, 1}), 1.4142135623730951);
}

TEST(Deploy, Scenario1Shape) {
  const NetworkConfig config;  // defaults match the 100x100 / 80-node setup
  const Network net = deploy(config);
  ASSERT_EQ(net.size(), 81u);  // sensors plus the sink
  EXPECT_EQ(net.sink_id, 80u);
  EXPECT_DOUBLE_EQ(net.sink().position.x, 50.0);
  EXPECT_DOUBLE_EQ(net.sink().position.y, 50.0);
  EXPECT_TRUE(net.sink().is_super);
  for (const SensorNode& node : net.nodes) {
    EXPECT_DOUBLE_EQ(node.residual_energy, 5.0);
    EXPECT_TRUE(node.alive);
  }
}

TEST(Deploy, PositionsInsideArea) {
  NetworkConfig config;
  config.node_count = 200;
  config.rng_seed = 9;
  const Network net = deploy(config);
  for (const SensorNode& node : net.nodes) {
    EXPECT_GE(node.position.x, 0.0);
    EXPECT_LE(node.position.x, config.area_side);
    EXPECT_GE(node.position.y, 0.0);
    EXPECT_LE(node.position.y, config.area_side);
  }
}

TEST(Deploy, SingleSensor) {
  NetworkConfig config;
  config.node_count = 1;
  config.comm_range = 1.0;  // likely out of range of the sink
  Network net = deploy(config);
  discover_neighbors(net);
  ASSERT_EQ(net.size(), 2u);
  EXPECT_EQ(net.sink_id, 1u);
}

TEST(Deploy, DeterministicForSeed) {
  NetworkConfig config;
  config.rng_seed = 42;
  EXPECT_EQ(serialize(deploy(config)), serialize(deploy(config)));
  config.rng_seed = 43;
  EXPECT_NE(serialize(deploy(NetworkConfig{})), serialize(deploy(config)));
}

TEST(Deploy, RejectsBadConfig) {
  NetworkConfig config;
  config.area_side = 0.0;
  EXPECT_THROW(deploy(config), std::invalid_argument);
  config = NetworkConfig{};
  config.node_count = 0;
  EXPECT_THROW(deploy(config), std::invalid_argument);
  config = NetworkConfig{};
  config.comm_range = -1.0;
  EXPECT_THROW(deploy(config), std::invalid_argument);
  config = NetworkConfig{};
  config.sink_position = {250.0, 50.0};
  EXPECT_THROW(deploy(config), std::invalid_argument);
}

TEST(Deploy, SuperFlaggingUsesCommRangeByDefault) {
  NetworkConfig config;
  config.super_sensors = true;
  config.rng_seed = 7;
  const Network net = deploy(config);
  for (const SensorNode& node : net.nodes) {
    if (net.is_sink(node.id)) {
      continue;
    }
    const bool near = distance(node.position, config.sink_position) <= config.comm_range;
    EXPECT_EQ(node.is_super, near) << "node " << node.id;
  }
}

TEST(Deploy, ScaleFreeModeKeepsInvariants) {
  NetworkConfig config;
  config.deployment = DeploymentMode::kScaleFree;
  config.node_count = 120;
  config.rng_seed = 5;
  const Network a = deploy(config);
  const Network b = deploy(config);
  EXPECT_EQ(serialize(a), serialize(b));
  std::set<std::pair<double, double>> seen;
  for (const SensorNode& node : a.nodes) {
    EXPECT_GE(node.position.x, 0.0);
    EXPECT_LE(node.position.x, config.area_side);
    EXPECT_GE(node.position.y, 0.0);
    EXPECT_LE(node.position.y, config.area_side);
    EXPECT_TRUE(seen.insert({node.position.x, node.position.y}).second);
  }
}

TEST(DiscoverNeighbors, BruteForceRangeOracle) {
  NetworkConfig config;
  config.node_count = 60;
  config.rng_seed = 11;
  Network net = deploy(config);
  discover_neighbors(net);
  for (const SensorNode& a : net.nodes) {
    for (const SensorNode& b : net.nodes) {
      if (a.id == b.id) {
        EXPECT_EQ(find_neighbor(a, b.id), nullptr);
        continue;
      }
      const double d = distance(a.position, b.position);
      const NeighborEntry* entry = find_neighbor(a, b.id);
      if (d <= config.comm_range) {
        ASSERT_NE(entry, nullptr);
        EXPECT_DOUBLE_EQ(entry->distance, d);
        EXPECT_DOUBLE_EQ(entry->last_known_energy, b.residual_energy);
      } else {
        EXPECT_EQ(entry, nullptr);
      }
    }
  }
}

TEST(DiscoverNeighbors, SymmetricAndSorted) {
  NetworkConfig config;
  config.node_count = 50;
  config.rng_seed = 3;
  Network net = deploy(config);
  discover_neighbors(net);
  for (const SensorNode& node : net.nodes) {
    NodeId prev = 0;
    bool first = true;
    for (const NeighborEntry& entry : node.neighbors) {
      EXPECT_TRUE(first || entry.id > prev);
      prev = entry.id;
      first = false;
      const NeighborEntry* back = find_neighbor(net.nodes[entry.id], node.id);
      ASSERT_NE(back, nullptr);
      EXPECT_DOUBLE_EQ(back->distance, entry.distance);
    }
  }
}

TEST(DiscoverNeighbors, InAndOutOfRange) {
  const Network within =
      test::make_network({{0, 0}, {15, 0}}, {500, 500}, 20.0);
  EXPECT_NE(find_neighbor(within.nodes[0], 1), nullptr);
  EXPECT_NE(find_neighbor(within.nodes[1], 0), nullptr);

  const Network apart = test::make_network({{0, 0}, {25, 0}}, {500, 500}, 20.0);
  EXPECT_EQ(find_neighbor(apart.nodes[0], 1), nullptr);
  EXPECT_EQ(find_neighbor(apart.nodes[1], 0), nullptr);
}

TEST(DiscoverNeighbors, ExactRangeIsNeighbor) {
  const Network net = test::make_network({{0, 0}, {20, 0}}, {500, 500}, 20.0);
  const NeighborEntry* entry = find_neighbor(net.nodes[0], 1);
  ASSERT_NE(entry, nullptr);
  EXPECT_DOUBLE_EQ(entry->distance, 20.0);
}

TEST(DiscoverNeighbors, RejectsCoLocatedNodes) {
  Network net;
  net.config.comm_range = 10.0;
  for (NodeId id = 0; id < 2; ++id) {
    SensorNode node;
    node.id = id;
    node.position = {5.0, 5.0};
    net.nodes.push_back(node);
  }
  net.sink_id = 1;
  EXPECT_THROW(discover_neighbors(net), std::invalid_argument);
}

TEST(RefreshEnergyViews, PropagatesSpending) {
  Network net = test::make_network({{0, 0}, {10, 0}, {20, 0}}, {10, 10}, 15.0);
  net.nodes[1].residual_energy = 2.5;
  refresh_energy_views(net);
  for (const SensorNode& node : net.nodes) {
    for (const NeighborEntry& entry : node.neighbors) {
      EXPECT_DOUBLE_EQ(entry.last_known_energy,
                       net.nodes[entry.id].residual_energy);
    }
  }
  const NeighborEntry* view = find_neighbor(net.nodes[0], 1);
  ASSERT_NE(view, nullptr);
  EXPECT_DOUBLE_EQ(view->last_known_energy, 2.5);
}

TEST(RefreshEnergyViews, FreshNetworkSeesInitialEnergy) {
  NetworkConfig config;
  config.node_count = 30;
  Network net = deploy(config);
  discover_neighbors(net);
  refresh_energy_views(net);
  for (const SensorNode& node : net.nodes) {
    for (const NeighborEntry& entry : node.neighbors) {
      EXPECT_DOUBLE_EQ(entry.last_known_energy, 5.0);
    }
  }
}

TEST(Serialize, CarriesConfigAndNodes) {
  NetworkConfig config;
  config.node_count = 3;
  config.rng_seed = 2;
  const Network net = deploy(config);
  const std::string text = serialize(net);
  EXPECT_NE(text.find("# wsnsim-network"), std::string::npos);
  EXPECT_NE(text.find("node_count=3"), std::string::npos);
  EXPECT_NE(text.find("seed=2"), std::string::npos);
  // header + three sensors + sink
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

}  // namespace
}  // namespace wsnsim
