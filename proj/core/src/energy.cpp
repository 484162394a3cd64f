#include "wsnsim/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsnsim {

double crossover_d0(const EnergyParams& p) {
  return std::sqrt(p.eps_fs / p.eps_mp);
}

double tx_energy(std::uint32_t bits, double d, const EnergyParams& p) {
  if (d < 0.0) {
    throw std::invalid_argument("tx_energy: negative distance");
  }
  const double b = static_cast<double>(bits);
  const double amp = d < p.d0 ? p.eps_fs * d * d : p.eps_mp * d * d * d * d;
  return b * p.e_elec + b * amp;
}

double rx_energy(std::uint32_t bits, const EnergyParams& p) {
  return static_cast<double>(bits) * p.e_elec;
}

void EnergyLedger::record(NodeId id, double amount) {
  if (id >= per_node_.size()) {
    per_node_.resize(id + 1, 0.0);
  }
  per_node_[id] += amount;
  total_ += amount;
}

double EnergyLedger::consumed(NodeId id) const {
  return id < per_node_.size() ? per_node_[id] : 0.0;
}

double EnergyLedger::total_non_super(const Network& net) const {
  double sum = 0.0;
  for (const SensorNode& node : net.nodes) {
    if (!node.is_super) {
      sum += consumed(node.id);
    }
  }
  return sum;
}

void charge(SensorNode& node, double amount, EnergyLedger& ledger) {
  if (amount < 0.0) {
    throw std::invalid_argument("charge: negative amount");
  }
  double draw = amount;
  if (!node.is_super) {
    draw = std::min(amount, node.residual_energy);
    node.residual_energy -= draw;
    if (node.residual_energy <= 0.0) {
      node.residual_energy = 0.0;
      node.alive = false;
    }
  }
  ledger.record(node.id, draw);
}

}  // namespace wsnsim
