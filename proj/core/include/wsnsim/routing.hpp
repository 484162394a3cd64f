#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "wsnsim/aco.hpp"
#include "wsnsim/energy.hpp"
#include "wsnsim/network.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

enum class ProtocolKind { kModifiedAco, kClassicAco, kEnergyGreedy, kRandomWalk };

const char* to_string(ProtocolKind kind);
/// Throws std::invalid_argument on an unknown name.
ProtocolKind protocol_from_string(std::string_view name);

struct Packet {
  NodeId source = 0;
  NodeId current = 0;
  std::vector<NodeId> path;            // traversal order, starts at source
  std::vector<std::uint8_t> visited;   // indexed by node id
  std::uint32_t hops = 0;
  std::uint32_t ttl = 1;
  std::uint32_t bits = 1024;
};

Packet make_packet(const Network& net, NodeId source, std::uint32_t ttl,
                   std::uint32_t bits);

enum class RouteStatus {
  kDelivered,
  kDroppedTtl,
  kDroppedDeadEnd,
  kDroppedSourceDead,
};

const char* to_string(RouteStatus status);

struct RouteOutcome {
  RouteStatus status = RouteStatus::kDroppedDeadEnd;
  std::vector<NodeId> path;     // nodes actually traversed, source first
  std::uint32_t hops = 0;
  double path_length = 0.0;     // meters, sum of consecutive hop distances
  double energy_spent = 0.0;    // joules drawn across all traversed hops
};

/// Live, unvisited neighbors of packet.current, ascending by id. The sink
/// qualifies whenever it is in range: it cannot die and is never an
/// intermediate hop, so neither filter can touch it. Empty means dead end.
std::vector<NodeId> allowed_set(const Network& net, const Packet& packet);

/// The conventional baseline rule: pheromone and residual energy only, no
/// distance term. Same normalization contract as transition_probabilities.
TransitionDistribution classic_aco_probabilities(NodeId current,
                                                 const std::vector<NodeId>& allowed,
                                                 const Network& net,
                                                 const PheromoneTable& tau,
                                                 const AcoParams& p);

/// Walks the packet hop by hop under the chosen protocol until it reaches
/// the sink (delivered), runs out of candidates (dead end), or exhausts its
/// hop budget (ttl). Every traversed hop charges tx to the sender and rx to
/// the receiver, whether or not the packet ultimately makes it. A dead
/// source yields kDroppedSourceDead with zero hops.
RouteOutcome route_packet(Network& net, ProtocolKind kind, Packet packet,
                          const PheromoneTable& tau, const AcoParams& aco,
                          const EnergyParams& energy, EnergyLedger& ledger,
                          Rng& rng);

}  // namespace wsnsim
