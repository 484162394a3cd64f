#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "wsnsim/routing.hpp"

namespace wsnsim {

/// How many senders transmit each round: a fraction of the alive pool
/// (floor, at least one) or an absolute count (capped by the pool).
struct SenderQuota {
  enum class Kind { kFraction, kCount };

  Kind kind = Kind::kFraction;
  double fraction = 0.1;
  std::uint32_t count = 1;

  static SenderQuota from_fraction(double f);
  static SenderQuota from_count(std::uint32_t c);

  std::size_t resolve(std::size_t pool_size) const;
};

struct SimConfig {
  NetworkConfig scenario;
  EnergyParams energy;
  AcoParams aco;
  ProtocolKind protocol = ProtocolKind::kModifiedAco;
  std::uint32_t rounds = 1000;
  SenderQuota senders;
  std::uint32_t ttl = 0;  // 0 = default rule, see default_ttl
  bool super_sensors_enabled = false;
  std::uint64_t seed = 1;
};

/// Hop budget scaled to the network: 2 * ceil(area_side / comm_range).
std::uint32_t default_ttl(const NetworkConfig& scenario);

/// Throws std::invalid_argument naming the offending field.
void validate(const SimConfig& config);

/// Copies the run-level knobs (seed, initial energy, super flag) into the
/// scenario, fills a zero ttl with the default rule, and validates. Every
/// entry point into the engine resolves first.
SimConfig resolve(SimConfig config);

struct RoundMetrics {
  std::uint32_t round = 0;  // 1-based
  std::uint32_t sent = 0;
  std::uint32_t delivered = 0;
  std::uint32_t dropped = 0;
  double energy_consumed = 0.0;   // joules drawn this round, all nodes
  std::uint32_t alive_nodes = 0;  // alive sensors at round end, sink excluded
  double mean_hops_delivered = 0.0;  // 0 when nothing was delivered
  double mean_path_length_m = 0.0;   // over delivered packets, 0 when none
};

struct SimResult {
  std::vector<RoundMetrics> rounds;
  // Lifetime milestones over the non-super population; empty when the
  // milestone was not reached within the horizon.
  std::optional<std::uint32_t> fnd_round;
  std::optional<std::uint32_t> hnd_round;
  std::optional<std::uint32_t> lnd_round;
  std::uint64_t total_sent = 0;
  std::uint64_t total_delivered = 0;
  double success_ratio = 0.0;  // delivered / sent
  double total_energy = 0.0;   // joules, equals the ledger total
};

/// Owned state of one run. Mutated by run_round only; never shared between
/// concurrent runs.
struct SimState {
  Network net;
  PheromoneTable tau;
  EnergyLedger ledger;
  Rng rng;
  std::uint32_t rounds_done = 0;
};

/// Deploys, discovers neighbors, and lays uniform pheromone. `config` must
/// already be resolved. The round-loop rng stream is decorrelated from the
/// deployment stream.
SimState make_state(const SimConfig& config);

using PacketObserver =
    std::function<void(std::uint32_t round, NodeId source, const RouteOutcome&)>;

/// One operational round: draw the sender set from the alive non-super
/// pool, route one packet per sender in ascending source order, evaporate
/// every edge once, deposit on each delivered path, refresh the neighbor
/// energy views, and report the round's metrics. An empty sender pool
/// yields sent == 0, which callers treat as the end of useful life.
RoundMetrics run_round(SimState& state, const SimConfig& config,
                       const PacketObserver& observer = {});

/// Runs up to config.rounds rounds, stopping early once every non-super
/// sensor is dead (that final round is still recorded) or nothing is left
/// to send. Deterministic for a fixed config and seed.
SimResult run_simulation(const SimConfig& config,
                         const PacketObserver& observer = {});

/// Same loop over caller-owned state, which `config` must have produced via
/// make_state. Leaves the final network, pheromone, and ledger inspectable.
SimResult run_simulation(SimState& state, const SimConfig& config,
                         const PacketObserver& observer = {});

/// One independent simulation per TTL value, each on a fresh network from
/// the same seed, so only the hop budget varies.
std::vector<std::pair<std::uint32_t, SimResult>> ttl_sweep(
    const SimConfig& base, const std::vector<std::uint32_t>& ttl_values);

}  // namespace wsnsim
