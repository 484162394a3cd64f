#include "wsnsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsnsim {

SenderQuota SenderQuota::from_fraction(double f) {
  SenderQuota q;
  q.kind = Kind::kFraction;
  q.fraction = f;
  return q;
}

SenderQuota SenderQuota::from_count(std::uint32_t c) {
  SenderQuota q;
  q.kind = Kind::kCount;
  q.count = c;
  return q;
}

std::size_t SenderQuota::resolve(std::size_t pool_size) const {
  if (pool_size == 0) {
    return 0;
  }
  if (kind == Kind::kCount) {
    return std::min<std::size_t>(count, pool_size);
  }
  const auto n = static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(pool_size)));
  return std::clamp<std::size_t>(n, 1, pool_size);
}

std::uint32_t default_ttl(const NetworkConfig& scenario) {
  return 2 * static_cast<std::uint32_t>(
                 std::ceil(scenario.area_side / scenario.comm_range));
}

void validate(const SimConfig& c) {
  if (c.rounds < 1) {
    throw std::invalid_argument("sim: rounds must be at least 1");
  }
  if (c.ttl < 1) {
    throw std::invalid_argument("sim: ttl must be at least 1");
  }
  if (c.senders.kind == SenderQuota::Kind::kFraction &&
      !(c.senders.fraction > 0.0 && c.senders.fraction <= 1.0)) {
    throw std::invalid_argument("sim: senders fraction must be in (0, 1]");
  }
  if (c.senders.kind == SenderQuota::Kind::kCount && c.senders.count < 1) {
    throw std::invalid_argument("sim: senders count must be at least 1");
  }
  if (c.aco.rho < 0.0 || c.aco.rho > 1.0) {
    throw std::invalid_argument("aco: rho must be in [0, 1]");
  }
  if (!(c.aco.tau0 > 0.0)) {
    throw std::invalid_argument("aco: tau0 must be positive");
  }
  if (!(c.aco.q > 0.0)) {
    throw std::invalid_argument("aco: q must be positive");
  }
  if (c.aco.alpha < 0.0 || c.aco.beta < 0.0 || c.aco.gamma < 0.0) {
    throw std::invalid_argument("aco: exponents must be non-negative");
  }
  if (!(c.energy.e_elec > 0.0) || !(c.energy.eps_fs > 0.0) ||
      !(c.energy.eps_mp > 0.0) || !(c.energy.d0 > 0.0)) {
    throw std::invalid_argument("energy: radio constants must be positive");
  }
  if (!(c.energy.initial_energy > 0.0)) {
    throw std::invalid_argument("energy: initial_energy must be positive");
  }
  if (c.energy.packet_bits == 0) {
    throw std::invalid_argument("energy: packet_bits must be positive");
  }
  if (!(c.scenario.area_side > 0.0) || c.scenario.node_count == 0 ||
      !(c.scenario.comm_range > 0.0)) {
    throw std::invalid_argument("net: area, node count, and range must be positive");
  }
  if (c.scenario.sink_position.x < 0.0 ||
      c.scenario.sink_position.x > c.scenario.area_side ||
      c.scenario.sink_position.y < 0.0 ||
      c.scenario.sink_position.y > c.scenario.area_side) {
    throw std::invalid_argument("net: sink position outside the area");
  }
}

SimConfig resolve(SimConfig config) {
  config.scenario.initial_energy = config.energy.initial_energy;
  config.scenario.super_sensors = config.super_sensors_enabled;
  config.scenario.rng_seed = config.seed;
  if (config.ttl == 0) {
    config.ttl = default_ttl(config.scenario);
  }
  validate(config);
  return config;
}

SimState make_state(const SimConfig& config) {
  SimState state;
  state.net = deploy(config.scenario);
  discover_neighbors(state.net);
  state.tau = PheromoneTable(config.aco.tau0);
  state.tau.init_uniform(state.net);
  state.ledger = EnergyLedger(state.net.size());
  // Offset keeps the round stream independent of the deployment stream,
  // which consumed the raw seed.
  state.rng.seed(config.seed + 0x9e3779b97f4a7c15ULL);
  return state;
}

namespace {

std::vector<NodeId> sender_pool(const Network& net) {
  std::vector<NodeId> pool;
  for (const SensorNode& node : net.nodes) {
    // Super sensors relay but never originate traffic; once only they
    // remain, the network has nothing left to report.
    if (!net.is_sink(node.id) && node.alive && !node.is_super) {
      pool.push_back(node.id);
    }
  }
  return pool;
}

}  // namespace

RoundMetrics run_round(SimState& state, const SimConfig& config,
                       const PacketObserver& observer) {
  RoundMetrics metrics;
  metrics.round = state.rounds_done + 1;

  std::vector<NodeId> pool = sender_pool(state.net);
  const std::size_t quota = config.senders.resolve(pool.size());
  std::vector<NodeId> senders =
      sample_without_replacement(std::move(pool), quota, state.rng);
  std::sort(senders.begin(), senders.end());

  metrics.sent = static_cast<std::uint32_t>(senders.size());
  const double ledger_before = state.ledger.total();

  std::vector<RouteOutcome> delivered;
  double hops_sum = 0.0;
  double length_sum = 0.0;
  for (const NodeId source : senders) {
    Packet packet =
        make_packet(state.net, source, config.ttl, config.energy.packet_bits);
    RouteOutcome outcome =
        route_packet(state.net, config.protocol, std::move(packet), state.tau,
                     config.aco, config.energy, state.ledger, state.rng);
    if (outcome.status == RouteStatus::kDelivered) {
      metrics.delivered += 1;
      hops_sum += outcome.hops;
      length_sum += outcome.path_length;
      delivered.push_back(outcome);
    } else {
      metrics.dropped += 1;
    }
    if (observer) {
      observer(metrics.round, source, outcome);
    }
  }

  state.tau.evaporate(config.aco.rho);
  if (config.aco.deposit_enabled) {
    for (const RouteOutcome& outcome : delivered) {
      state.tau.deposit(outcome.path, outcome.path_length, config.aco.q);
    }
  }
  refresh_energy_views(state.net);

  metrics.energy_consumed = state.ledger.total() - ledger_before;
  for (const SensorNode& node : state.net.nodes) {
    if (!state.net.is_sink(node.id) && node.alive) {
      metrics.alive_nodes += 1;
    }
  }
  if (metrics.delivered > 0) {
    metrics.mean_hops_delivered = hops_sum / metrics.delivered;
    metrics.mean_path_length_m = length_sum / metrics.delivered;
  }

  state.rounds_done = metrics.round;
  return metrics;
}

SimResult run_simulation(const SimConfig& raw, const PacketObserver& observer) {
  const SimConfig config = resolve(raw);
  SimState state = make_state(config);
  return run_simulation(state, config, observer);
}

SimResult run_simulation(SimState& state, const SimConfig& config,
                         const PacketObserver& observer) {
  std::uint32_t mortal_total = 0;
  for (const SensorNode& node : state.net.nodes) {
    if (!node.is_super) {
      mortal_total += 1;
    }
  }

  SimResult result;
  for (std::uint32_t round = 1; round <= config.rounds; ++round) {
    const RoundMetrics metrics = run_round(state, config, observer);
    result.rounds.push_back(metrics);
    result.total_sent += metrics.sent;
    result.total_delivered += metrics.delivered;
    result.total_energy += metrics.energy_consumed;

    std::uint32_t dead = 0;
    for (const SensorNode& node : state.net.nodes) {
      if (!node.is_super && !node.alive) {
        dead += 1;
      }
    }
    if (mortal_total > 0) {
      if (!result.fnd_round && dead >= 1) {
        result.fnd_round = round;
      }
      if (!result.hnd_round && 2 * dead >= mortal_total) {
        result.hnd_round = round;
      }
      if (!result.lnd_round && dead == mortal_total) {
        result.lnd_round = round;
      }
    }
    if (result.lnd_round || metrics.sent == 0) {
      break;  // nothing mortal left to send
    }
  }

  if (result.total_sent > 0) {
    result.success_ratio = static_cast<double>(result.total_delivered) /
                           static_cast<double>(result.total_sent);
  }
  return result;
}

std::vector<std::pair<std::uint32_t, SimResult>> ttl_sweep(
    const SimConfig& base, const std::vector<std::uint32_t>& ttl_values) {
  if (ttl_values.empty()) {
    throw std::invalid_argument("ttl_sweep: no ttl values");
  }
  std::vector<std::pair<std::uint32_t, SimResult>> results;
  results.reserve(ttl_values.size());
  for (const std::uint32_t ttl : ttl_values) {
    SimConfig config = base;
    config.ttl = ttl;
    results.emplace_back(ttl, run_simulation(config));
  }
  return results;
}

}  // namespace wsnsim
