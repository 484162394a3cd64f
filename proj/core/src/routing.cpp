#include "wsnsim/routing.hpp"

#include <stdexcept>
#include <string>

namespace wsnsim {

const char* to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kModifiedAco:
      return "modified-aco";
    case ProtocolKind::kClassicAco:
      return "classic-aco";
    case ProtocolKind::kEnergyGreedy:
      return "energy-greedy";
    case ProtocolKind::kRandomWalk:
      return "random-walk";
  }
  return "?";
}

ProtocolKind protocol_from_string(std::string_view name) {
  if (name == "modified-aco") return ProtocolKind::kModifiedAco;
  if (name == "classic-aco") return ProtocolKind::kClassicAco;
  if (name == "energy-greedy") return ProtocolKind::kEnergyGreedy;
  if (name == "random-walk") return ProtocolKind::kRandomWalk;
  throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

const char* to_string(RouteStatus status) {
  switch (status) {
    case RouteStatus::kDelivered:
      return "delivered";
    case RouteStatus::kDroppedTtl:
      return "dropped-ttl";
    case RouteStatus::kDroppedDeadEnd:
      return "dropped-deadend";
    case RouteStatus::kDroppedSourceDead:
      return "dropped-source-dead";
  }
  return "?";
}

Packet make_packet(const Network& net, NodeId source, std::uint32_t ttl,
                   std::uint32_t bits) {
  Packet pkt;
  pkt.source = source;
  pkt.current = source;
  pkt.path.push_back(source);
  pkt.visited.assign(net.size(), 0);
  pkt.visited[source] = 1;
  pkt.ttl = ttl;
  pkt.bits = bits;
  return pkt;
}

std::vector<NodeId> allowed_set(const Network& net, const Packet& packet) {
  const SensorNode& node = net.nodes[packet.current];
  std::vector<NodeId> out;
  out.reserve(node.neighbors.size());
  for (const NeighborEntry& entry : node.neighbors) {
    if (packet.visited[entry.id]) {
      continue;
    }
    if (!net.nodes[entry.id].alive) {
      continue;
    }
    out.push_back(entry.id);
  }
  return out;  // ascending: neighbor tables are sorted by id
}

TransitionDistribution classic_aco_probabilities(NodeId current,
                                                 const std::vector<NodeId>& allowed,
                                                 const Network& net,
                                                 const PheromoneTable& tau,
                                                 const AcoParams& p) {
  if (allowed.empty()) {
    throw std::invalid_argument("classic_aco_probabilities: empty allowed set");
  }
  const SensorNode& node = net.nodes[current];
  double tau_ref = 0.0;
  for (const NodeId id : allowed) {
    tau_ref = std::max(tau_ref, tau.get(current, id));
  }
  TransitionDistribution dist(allowed.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    const NeighborEntry* entry = find_neighbor(node, allowed[i]);
    if (entry == nullptr) {
      throw std::invalid_argument("classic_aco_probabilities: candidate is not a neighbor");
    }
    // Ratios against the strongest candidate keep the rule stable however
    // small the absolute pheromone levels get; all-zero levels cancel out.
    double w = tau_ref > 0.0
                   ? std::pow(tau.get(current, allowed[i]) / tau_ref, p.alpha)
                   : 1.0;
    if (p.energy_term_enabled) {
      // The baseline always reads the energy term as residual energy.
      w *= std::pow(entry->last_known_energy, p.gamma);
    }
    dist[i].id = allowed[i];
    dist[i].probability = w;
    sum += w;
  }
  if (sum > 0.0) {
    for (TransitionEntry& e : dist) {
      e.probability /= sum;
    }
  } else {
    const double uniform = 1.0 / static_cast<double>(dist.size());
    for (TransitionEntry& e : dist) {
      e.probability = uniform;
    }
  }
  return dist;
}

namespace {

NodeId greedy_next_hop(const SensorNode& node, const std::vector<NodeId>& allowed) {
  NodeId best = allowed.front();
  double best_energy = -1.0;
  for (const NodeId id : allowed) {  // ascending, so ties keep the lowest id
    const NeighborEntry* entry = find_neighbor(node, id);
    if (entry->last_known_energy > best_energy) {
      best_energy = entry->last_known_energy;
      best = id;
    }
  }
  return best;
}

}  // namespace

RouteOutcome route_packet(Network& net, ProtocolKind kind, Packet packet,
                          const PheromoneTable& tau, const AcoParams& aco,
                          const EnergyParams& energy, EnergyLedger& ledger,
                          Rng& rng) {
  RouteOutcome out;
  out.path = packet.path;
  if (!net.nodes[packet.source].alive) {
    out.status = RouteStatus::kDroppedSourceDead;
    return out;
  }

  while (true) {
    if (packet.current == net.sink_id) {
      out.status = RouteStatus::kDelivered;
      break;
    }
    if (packet.hops >= packet.ttl) {
      out.status = RouteStatus::kDroppedTtl;
      break;
    }
    if (!net.nodes[packet.current].alive) {
      // The relay spent its last energy receiving and cannot transmit.
      out.status = RouteStatus::kDroppedDeadEnd;
      break;
    }
    const std::vector<NodeId> allowed = allowed_set(net, packet);
    if (allowed.empty()) {
      out.status = RouteStatus::kDroppedDeadEnd;
      break;
    }

    NodeId next = 0;
    switch (kind) {
      case ProtocolKind::kModifiedAco:
        next = select_next_hop(
            transition_probabilities(packet.current, allowed, net, tau, aco), rng);
        break;
      case ProtocolKind::kClassicAco:
        next = select_next_hop(
            classic_aco_probabilities(packet.current, allowed, net, tau, aco), rng);
        break;
      case ProtocolKind::kEnergyGreedy:
        next = greedy_next_hop(net.nodes[packet.current], allowed);
        break;
      case ProtocolKind::kRandomWalk:
        next = allowed[uniform_index(rng, allowed.size())];
        break;
    }

    const NeighborEntry* entry = find_neighbor(net.nodes[packet.current], next);
    const double hop_distance = entry->distance;
    const double ledger_before = ledger.total();
    charge(net.nodes[packet.current], tx_energy(packet.bits, hop_distance, energy),
           ledger);
    charge(net.nodes[next], rx_energy(packet.bits, energy), ledger);
    out.energy_spent += ledger.total() - ledger_before;
    out.path_length += hop_distance;

    packet.current = next;
    packet.visited[next] = 1;
    packet.hops += 1;
    out.path.push_back(next);
  }

  out.hops = packet.hops;
  return out;
}

}  // namespace wsnsim
