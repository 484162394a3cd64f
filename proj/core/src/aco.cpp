#include "wsnsim/aco.hpp"

#include <cmath>
#include <stdexcept>

namespace wsnsim {

const char* to_string(EnergyHeuristicMode mode) {
  switch (mode) {
    case EnergyHeuristicMode::kResidual:
      return "residual";
    case EnergyHeuristicMode::kConsumedDifference:
      return "as-written-difference";
  }
  return "?";
}

double PheromoneTable::get(NodeId from, NodeId to) const {
  const auto it = tau_.find({from, to});
  return it != tau_.end() ? it->second : tau0_;
}

void PheromoneTable::set(NodeId from, NodeId to, double value) {
  if (value < 0.0) {
    throw std::invalid_argument("PheromoneTable: negative pheromone");
  }
  tau_[{from, to}] = value;
}

void PheromoneTable::init_uniform(const Network& net) {
  tau_.clear();
  for (const SensorNode& node : net.nodes) {
    for (const NeighborEntry& entry : node.neighbors) {
      tau_[{node.id, entry.id}] = tau0_;
    }
  }
}

void PheromoneTable::evaporate(double rho) {
  if (rho < 0.0 || rho > 1.0) {
    throw std::invalid_argument("evaporate: rho outside [0, 1]");
  }
  const double keep = 1.0 - rho;
  for (auto& [edge, value] : tau_) {
    value *= keep;
  }
}

void PheromoneTable::deposit(const std::vector<NodeId>& path, double path_length,
                             double q) {
  if (path.size() < 2) {
    throw std::invalid_argument("deposit: path needs at least one edge");
  }
  if (!(path_length > 0.0)) {
    throw std::invalid_argument("deposit: path_length must be positive");
  }
  const double dtau = q / path_length;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const std::pair<NodeId, NodeId> edge{path[i], path[i + 1]};
    const auto it = tau_.find(edge);
    if (it != tau_.end()) {
      it->second += dtau;
    } else {
      tau_[edge] = tau0_ + dtau;
    }
  }
}

double heuristic_eta(double d) {
  if (!(d > 0.0)) {
    throw std::invalid_argument("heuristic_eta: non-positive distance");
  }
  return 1.0 / d;
}

double heuristic_delta(double neighbor_energy, double initial_energy,
                       EnergyHeuristicMode mode) {
  switch (mode) {
    case EnergyHeuristicMode::kResidual:
      return neighbor_energy;
    case EnergyHeuristicMode::kConsumedDifference:
      return initial_energy - neighbor_energy;
  }
  return 0.0;
}

namespace {

// Largest pheromone among the candidates. The transition rule only depends
// on tau ratios, so weights are computed against this reference: scaling
// every value by any positive factor leaves the distribution untouched, and
// long evaporation runs cannot underflow the rule into a different shape.
// When every candidate reads zero (rho = 1 wipes the table) the equal
// values cancel out of the rule entirely, exactly as at round one.
double max_tau(const PheromoneTable& tau, NodeId current,
               const std::vector<NodeId>& allowed) {
  double best = 0.0;
  for (const NodeId id : allowed) {
    best = std::max(best, tau.get(current, id));
  }
  return best;
}

void normalize_or_fall_back(TransitionDistribution& dist, double sum) {
  if (sum > 0.0) {
    for (TransitionEntry& e : dist) {
      e.probability /= sum;
    }
  } else {
    // Every weight vanished (all energy terms zero): choose blind.
    const double uniform = 1.0 / static_cast<double>(dist.size());
    for (TransitionEntry& e : dist) {
      e.probability = uniform;
    }
  }
}

}  // namespace

TransitionDistribution transition_probabilities(NodeId current,
                                                const std::vector<NodeId>& allowed,
                                                const Network& net,
                                                const PheromoneTable& tau,
                                                const AcoParams& p) {
  if (allowed.empty()) {
    throw std::invalid_argument("transition_probabilities: empty allowed set");
  }
  const SensorNode& node = net.nodes[current];
  const double tau_ref = max_tau(tau, current, allowed);
  TransitionDistribution dist(allowed.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    const NeighborEntry* entry = find_neighbor(node, allowed[i]);
    if (entry == nullptr) {
      throw std::invalid_argument("transition_probabilities: candidate is not a neighbor");
    }
    double w = std::pow(heuristic_eta(entry->distance), p.beta);
    if (tau_ref > 0.0) {
      w *= std::pow(tau.get(current, allowed[i]) / tau_ref, p.alpha);
    }
    if (p.energy_term_enabled) {
      w *= std::pow(heuristic_delta(entry->last_known_energy,
                                    net.config.initial_energy, p.energy_mode),
                    p.gamma);
    }
    dist[i].id = allowed[i];
    dist[i].probability = w;
    sum += w;
  }
  normalize_or_fall_back(dist, sum);
  return dist;
}

NodeId select_next_hop(const TransitionDistribution& dist, Rng& rng) {
  if (dist.empty()) {
    throw std::invalid_argument("select_next_hop: empty distribution");
  }
  const double u = uniform_double(rng);
  double cumulative = 0.0;
  for (const TransitionEntry& e : dist) {
    cumulative += e.probability;
    if (u < cumulative) {
      return e.id;
    }
  }
  return dist.back().id;  // rounding shortfall
}

}  // namespace wsnsim
