#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace wsnsim {

using NodeId = std::uint32_t;

struct Position {
  double x = 0.0;
  double y = 0.0;
};

/// Euclidean distance in meters.
double distance(const Position& a, const Position& b);

enum class DeploymentMode { kUniformRandom, kScaleFree };

const char* to_string(DeploymentMode mode);

/// Static description of one deployment. `node_count` counts sensors only;
/// the sink is added on top of it and takes the last id.
struct NetworkConfig {
  double area_side = 100.0;  // square side, meters
  std::uint32_t node_count = 80;
  double comm_range = 20.0;  // meters
  Position sink_position{50.0, 50.0};
  DeploymentMode deployment = DeploymentMode::kUniformRandom;
  std::uint64_t rng_seed = 1;
  double initial_energy = 5.0;  // joules per sensor
  bool super_sensors = false;   // exempt sensors near the sink from energy death
  double super_radius = 0.0;    // meters around the sink; 0 means comm_range
};

/// One row of a node's information table. `last_known_energy` is what the
/// owner believes the neighbor has left; it is refreshed once per round, so
/// it can be stale between refreshes.
struct NeighborEntry {
  NodeId id = 0;
  double distance = 0.0;  // meters, in (0, comm_range]
  double last_known_energy = 0.0;
};

struct SensorNode {
  NodeId id = 0;
  Position position;
  double residual_energy = 0.0;
  bool is_super = false;
  bool alive = true;
  std::vector<NeighborEntry> neighbors;  // ascending id, never a self entry
};

struct Network {
  std::vector<SensorNode> nodes;  // sensors 0..node_count-1, sink last
  NodeId sink_id = 0;
  NetworkConfig config;

  const SensorNode& sink() const { return nodes[sink_id]; }
  bool is_sink(NodeId id) const { return id == sink_id; }
  std::size_t size() const { return nodes.size(); }
};

/// Binary search in a node's sorted neighbor table. Null when `id` is not a
/// neighbor.
inline const NeighborEntry* find_neighbor(const SensorNode& node, NodeId id) {
  const auto it = std::lower_bound(
      node.neighbors.begin(), node.neighbors.end(), id,
      [](const NeighborEntry& e, NodeId v) { return e.id < v; });
  return (it != node.neighbors.end() && it->id == id) ? &*it : nullptr;
}

/// Places `node_count` sensors inside the square and the sink at its
/// configured position (always energy-exempt). Positions come from
/// mt19937_64(rng_seed), so equal configs produce bit-identical networks.
/// When `super_sensors` is set, sensors within `super_radius` of the sink
/// are flagged energy-exempt as well.
///
/// Throws std::invalid_argument on a non-positive area, count, or range,
/// or a sink outside the square.
Network deploy(const NetworkConfig& config);

/// Hello-packet phase: rebuilds every neighbor table with exactly the other
/// nodes within comm_range, their exact distances, and their current
/// energies. A node at exactly comm_range is a neighbor (closed ball).
/// Throws std::invalid_argument if two distinct nodes share a position.
void discover_neighbors(Network& net);

/// Copies each node's current residual energy into every table entry that
/// references it.
void refresh_energy_views(Network& net);

/// Line-oriented text form: a header carrying the config, then one node per
/// line `id x y energy is_super`. Doubles are printed with full round-trip
/// precision so the output doubles as a determinism fingerprint.
std::string serialize(const Network& net);

}  // namespace wsnsim
