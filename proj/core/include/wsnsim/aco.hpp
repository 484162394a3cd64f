#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wsnsim/network.hpp"
#include "wsnsim/rng.hpp"

namespace wsnsim {

/// Two readings of the per-candidate energy term. kResidual weights a
/// candidate by the energy it has left (the default); kConsumedDifference
/// weights it by what it has already burned, which steers traffic into
/// depleted nodes and is kept only so the effect can be measured.
enum class EnergyHeuristicMode { kResidual, kConsumedDifference };

const char* to_string(EnergyHeuristicMode mode);

struct AcoParams {
  double alpha = 2.0;  // pheromone exponent
  double beta = 3.0;   // inverse-distance exponent
  double gamma = 1.0;  // energy exponent
  double rho = 0.5;    // evaporation rate, in [0, 1]
  double q = 1.0;      // deposit constant
  double tau0 = 1.0;   // initial pheromone
  EnergyHeuristicMode energy_mode = EnergyHeuristicMode::kResidual;
  // Ablation switches for experiments.
  bool deposit_enabled = true;
  bool energy_term_enabled = true;
};

struct TransitionEntry {
  NodeId id = 0;
  double probability = 0.0;
};

/// Candidates in ascending id order; probabilities sum to 1.
using TransitionDistribution = std::vector<TransitionEntry>;

/// Pheromone per directed edge. An edge that was never written reads as
/// tau0; init_uniform materializes every directed neighbor edge so that
/// evaporation reaches all of them, matching the uniform initial
/// assignment over all connections.
class PheromoneTable {
 public:
  explicit PheromoneTable(double tau0 = 1.0) : tau0_(tau0) {}

  double get(NodeId from, NodeId to) const;
  void set(NodeId from, NodeId to, double value);

  /// One entry per directed neighbor edge of the network, all at tau0.
  void init_uniform(const Network& net);

  /// tau <- (1 - rho) * tau on every stored edge. rho outside [0, 1] is
  /// rejected.
  void evaporate(double rho);

  /// Adds q / path_length to every directed edge along a delivered path.
  /// Rejects paths with fewer than two nodes or a non-positive length.
  void deposit(const std::vector<NodeId>& path, double path_length, double q);

  double tau0() const { return tau0_; }
  std::size_t edge_count() const { return tau_.size(); }
  const std::map<std::pair<NodeId, NodeId>, double>& edges() const { return tau_; }

 private:
  std::map<std::pair<NodeId, NodeId>, double> tau_;
  double tau0_;
};

/// Inverse distance, 1/d. d == 0 means two distinct nodes share a position;
/// that is a malformed topology and is rejected.
double heuristic_eta(double d);

/// Energy term for one candidate, per the selected mode. Zero is a valid
/// result and zeroes the candidate's weight whenever gamma > 0.
double heuristic_delta(double neighbor_energy, double initial_energy,
                       EnergyHeuristicMode mode);

/// Next-hop distribution over `allowed` as seen from `current`: weight
/// tau^alpha * (1/d)^beta * delta^gamma per candidate, normalized.
/// Distances and energies are read from current's neighbor table, so every
/// allowed node must be a neighbor. Pheromone enters as a ratio against the
/// strongest candidate, which makes the rule invariant under scaling the
/// whole table by any positive factor; uniformly zero pheromone cancels out
/// just like the uniform initial assignment does. When every weight is
/// still zero (all energy terms zero under the consumed-difference mode)
/// the choice degenerates to uniform over the allowed set.
TransitionDistribution transition_probabilities(NodeId current,
                                                const std::vector<NodeId>& allowed,
                                                const Network& net,
                                                const PheromoneTable& tau,
                                                const AcoParams& p);

/// Roulette-wheel draw from a valid distribution.
NodeId select_next_hop(const TransitionDistribution& dist, Rng& rng);

}  // namespace wsnsim
