#pragma once

#include <vector>

#include "wsnsim/network.hpp"

namespace wsnsim::test {

// Hand-built network: explicit sensor positions plus a sink, neighbor
// tables filled. Sensors get ids 0..n-1 in the order given; the sink takes
// id n.
inline Network make_network(const std::vector<Position>& sensors,
                            Position sink_position, double comm_range,
                            double initial_energy = 5.0,
                            double area_side = 1000.0) {
  Network net;
  net.config.area_side = area_side;
  net.config.node_count = static_cast<std::uint32_t>(sensors.size());
  net.config.comm_range = comm_range;
  net.config.sink_position = sink_position;
  net.config.initial_energy = initial_energy;
  for (NodeId id = 0; id < sensors.size(); ++id) {
    SensorNode node;
    node.id = id;
    node.position = sensors[id];
    node.residual_energy = initial_energy;
    net.nodes.push_back(node);
  }
  SensorNode sink;
  sink.id = static_cast<NodeId>(sensors.size());
  sink.position = sink_position;
  sink.residual_energy = initial_energy;
  sink.is_super = true;
  net.nodes.push_back(sink);
  net.sink_id = sink.id;
  discover_neighbors(net);
  return net;
}

}  // namespace wsnsim::test
