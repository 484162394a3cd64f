#include "wsnsim/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace wsnsim {

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kNone:
      return "none";
    case SweepAxis::kTtl:
      return "ttl";
    case SweepAxis::kRho:
      return "rho";
  }
  return "?";
}

void apply_scenario_preset(ExperimentSpec& spec, int which) {
  NetworkConfig& net = spec.base.scenario;
  switch (which) {
    case 1:
      net.area_side = 100.0;
      net.node_count = 80;
      net.comm_range = 20.0;
      break;
    case 2:
      net.area_side = 200.0;
      net.node_count = 160;
      net.comm_range = 28.0;
      break;
    case 3:
      net.area_side = 300.0;
      net.node_count = 240;
      net.comm_range = 35.0;
      break;
    default:
      throw std::invalid_argument("unknown scenario preset " + std::to_string(which));
  }
  net.sink_position = {net.area_side / 2.0, net.area_side / 2.0};
  spec.scenario_label = "scenario" + std::to_string(which);
}

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
  throw ConfigError(origin + ":" + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view v, const std::string& origin, int line) {
  const std::string s(v);
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) {
    fail(origin, line, "expected a number, got '" + s + "'");
  }
  return x;
}

std::uint64_t parse_u64(std::string_view v, const std::string& origin, int line) {
  const std::string s(v);
  char* end = nullptr;
  const unsigned long long x = std::strtoull(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || s.empty()) {
    fail(origin, line, "expected a non-negative integer, got '" + s + "'");
  }
  return x;
}

std::uint32_t parse_u32(std::string_view v, const std::string& origin, int line) {
  const std::uint64_t x = parse_u64(v, origin, line);
  if (x > 0xffffffffULL) {
    fail(origin, line, "value out of range: '" + std::string(v) + "'");
  }
  return static_cast<std::uint32_t>(x);
}

bool parse_bool(std::string_view v, const std::string& origin, int line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  fail(origin, line, "expected true/false, got '" + std::string(v) + "'");
}

std::vector<std::string_view> split_csv(std::string_view v) {
  std::vector<std::string_view> parts;
  while (true) {
    const std::size_t comma = v.find(',');
    if (comma == std::string_view::npos) {
      parts.push_back(trim(v));
      return parts;
    }
    parts.push_back(trim(v.substr(0, comma)));
    v.remove_prefix(comma + 1);
  }
}

double positive(double x, std::string_view key, const std::string& origin, int line) {
  if (!(x > 0.0)) {
    fail(origin, line, std::string(key) + " must be positive");
  }
  return x;
}

void apply_key(ExperimentSpec& spec, std::string_view key, std::string_view value,
               const std::string& origin, int line) {
  SimConfig& base = spec.base;
  if (key == "scenario") {
    if (value == "scenario1") {
      apply_scenario_preset(spec, 1);
    } else if (value == "scenario2") {
      apply_scenario_preset(spec, 2);
    } else if (value == "scenario3") {
      apply_scenario_preset(spec, 3);
    } else {
      fail(origin, line, "unknown scenario '" + std::string(value) + "'");
    }
  } else if (key == "net.area_side") {
    base.scenario.area_side = positive(parse_double(value, origin, line), key, origin, line);
    spec.scenario_label = "custom";
  } else if (key == "net.node_count") {
    base.scenario.node_count = parse_u32(value, origin, line);
    if (base.scenario.node_count == 0) {
      fail(origin, line, "net.node_count must be positive");
    }
    spec.scenario_label = "custom";
  } else if (key == "net.comm_range") {
    base.scenario.comm_range = positive(parse_double(value, origin, line), key, origin, line);
    spec.scenario_label = "custom";
  } else if (key == "net.sink_x") {
    base.scenario.sink_position.x = parse_double(value, origin, line);
    spec.scenario_label = "custom";
  } else if (key == "net.sink_y") {
    base.scenario.sink_position.y = parse_double(value, origin, line);
    spec.scenario_label = "custom";
  } else if (key == "net.deployment") {
    if (value == "uniform-random") {
      base.scenario.deployment = DeploymentMode::kUniformRandom;
    } else if (value == "scale-free") {
      base.scenario.deployment = DeploymentMode::kScaleFree;
    } else {
      fail(origin, line, "unknown deployment mode '" + std::string(value) + "'");
    }
  } else if (key == "net.super_radius") {
    base.scenario.super_radius = parse_double(value, origin, line);
    if (base.scenario.super_radius < 0.0) {
      fail(origin, line, "net.super_radius must be non-negative");
    }
  } else if (key == "energy.e_elec") {
    base.energy.e_elec = positive(parse_double(value, origin, line), key, origin, line);
  } else if (key == "energy.eps_fs") {
    base.energy.eps_fs = positive(parse_double(value, origin, line), key, origin, line);
  } else if (key == "energy.eps_mp") {
    base.energy.eps_mp = positive(parse_double(value, origin, line), key, origin, line);
  } else if (key == "energy.d0") {
    if (value == "crossover") {
      base.energy.d0 = crossover_d0(base.energy);
    } else {
      base.energy.d0 = positive(parse_double(value, origin, line), key, origin, line);
    }
  } else if (key == "energy.initial") {
    base.energy.initial_energy =
        positive(parse_double(value, origin, line), key, origin, line);
  } else if (key == "energy.packet_bits") {
    base.energy.packet_bits = parse_u32(value, origin, line);
    if (base.energy.packet_bits == 0) {
      fail(origin, line, "energy.packet_bits must be positive");
    }
  } else if (key == "aco.alpha") {
    base.aco.alpha = parse_double(value, origin, line);
  } else if (key == "aco.beta") {
    base.aco.beta = parse_double(value, origin, line);
  } else if (key == "aco.gamma") {
    base.aco.gamma = parse_double(value, origin, line);
  } else if (key == "aco.rho") {
    base.aco.rho = parse_double(value, origin, line);
    if (base.aco.rho < 0.0 || base.aco.rho > 1.0) {
      fail(origin, line, "aco.rho must be in [0, 1]");
    }
  } else if (key == "aco.q") {
    base.aco.q = positive(parse_double(value, origin, line), key, origin, line);
  } else if (key == "aco.tau0") {
    base.aco.tau0 = positive(parse_double(value, origin, line), key, origin, line);
  } else if (key == "aco.energy_heuristic") {
    if (value == "residual") {
      base.aco.energy_mode = EnergyHeuristicMode::kResidual;
    } else if (value == "as-written-difference") {
      base.aco.energy_mode = EnergyHeuristicMode::kConsumedDifference;
    } else {
      fail(origin, line, "unknown energy heuristic '" + std::string(value) + "'");
    }
  } else if (key == "aco.deposit_enabled") {
    base.aco.deposit_enabled = parse_bool(value, origin, line);
  } else if (key == "aco.energy_term_enabled") {
    base.aco.energy_term_enabled = parse_bool(value, origin, line);
  } else if (key == "sim.protocol") {
    try {
      base.protocol = protocol_from_string(value);
    } catch (const std::invalid_argument& e) {
      fail(origin, line, e.what());
    }
    spec.protocols = {base.protocol};
  } else if (key == "sim.rounds") {
    base.rounds = parse_u32(value, origin, line);
    if (base.rounds == 0) {
      fail(origin, line, "sim.rounds must be at least 1");
    }
  } else if (key == "sim.ttl") {
    base.ttl = parse_u32(value, origin, line);
    if (base.ttl == 0) {
      fail(origin, line, "sim.ttl must be at least 1");
    }
  } else if (key == "sim.senders_fraction") {
    const double f = parse_double(value, origin, line);
    if (!(f > 0.0 && f <= 1.0)) {
      fail(origin, line, "sim.senders_fraction must be in (0, 1]");
    }
    base.senders = SenderQuota::from_fraction(f);
  } else if (key == "sim.senders_count") {
    const std::uint32_t n = parse_u32(value, origin, line);
    if (n == 0) {
      fail(origin, line, "sim.senders_count must be at least 1");
    }
    base.senders = SenderQuota::from_count(n);
  } else if (key == "sim.super_sensors") {
    base.super_sensors_enabled = parse_bool(value, origin, line);
  } else if (key == "run.protocols") {
    spec.protocols.clear();
    for (const std::string_view part : split_csv(value)) {
      try {
        spec.protocols.push_back(protocol_from_string(part));
      } catch (const std::invalid_argument& e) {
        fail(origin, line, e.what());
      }
    }
  } else if (key == "run.seeds") {
    spec.seeds.clear();
    for (const std::string_view part : split_csv(value)) {
      spec.seeds.push_back(parse_u64(part, origin, line));
    }
  } else if (key == "run.sweep") {
    const std::size_t eq = value.find('=');
    if (eq == std::string_view::npos) {
      fail(origin, line, "expected run.sweep=<axis>=<v1,v2,...>");
    }
    const std::string_view axis = trim(value.substr(0, eq));
    const std::string_view values = value.substr(eq + 1);
    if (axis == "ttl") {
      spec.sweep = SweepAxis::kTtl;
    } else if (axis == "rho") {
      spec.sweep = SweepAxis::kRho;
    } else {
      fail(origin, line, "unknown sweep axis '" + std::string(axis) + "'");
    }
    spec.sweep_values.clear();
    for (const std::string_view part : split_csv(values)) {
      const double v = parse_double(part, origin, line);
      if (spec.sweep == SweepAxis::kTtl && (v < 1.0 || v != std::floor(v))) {
        fail(origin, line, "ttl sweep values must be positive integers");
      }
      if (spec.sweep == SweepAxis::kRho && (v < 0.0 || v > 1.0)) {
        fail(origin, line, "rho sweep values must be in [0, 1]");
      }
      spec.sweep_values.push_back(v);
    }
  } else if (key == "run.out") {
    spec.out_dir = std::string(value);
  } else if (key == "run.trace") {
    spec.trace = parse_bool(value, origin, line);
  } else {
    fail(origin, line, "unknown key '" + std::string(key) + "'");
  }
}

}  // namespace

ExperimentSpec parse_config_text(std::string_view text, const std::string& origin) {
  ExperimentSpec spec;
  apply_scenario_preset(spec, 1);

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++lineno;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    const std::string_view stripped = trim(raw);
    if (stripped.empty()) {
      continue;
    }
    const std::size_t eq = stripped.find('=');
    if (eq == std::string_view::npos) {
      fail(origin, lineno, "expected key=value");
    }
    const std::string_view key = trim(stripped.substr(0, eq));
    const std::string_view value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      fail(origin, lineno, "empty key");
    }
    apply_key(spec, key, value, origin, lineno);
  }

  if (spec.protocols.empty()) {
    throw ConfigError(origin + ": no protocols selected");
  }
  if (spec.seeds.empty()) {
    throw ConfigError(origin + ": no seeds selected");
  }
  if (spec.sweep != SweepAxis::kNone && spec.sweep_values.empty()) {
    throw ConfigError(origin + ": sweep axis chosen but no values given");
  }

  // Surface any cross-field problem now rather than at run time.
  try {
    resolve(spec.base);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  return spec;
}

ExperimentSpec load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError(path + ": cannot open config file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

std::string config_key_reference() {
  return
      "scenario=scenario1|scenario2|scenario3   preset geometry, sink at center\n"
      "net.area_side=<m>  net.node_count=<n>  net.comm_range=<m>\n"
      "net.sink_x=<m>  net.sink_y=<m>\n"
      "net.deployment=uniform-random|scale-free\n"
      "net.super_radius=<m>            0 = comm_range\n"
      "energy.e_elec=<J/bit>  energy.eps_fs=<J/bit/m2>  energy.eps_mp=<J/bit/m4>\n"
      "energy.d0=<m>|crossover  energy.initial=<J>  energy.packet_bits=<bits>\n"
      "aco.alpha= aco.beta= aco.gamma= aco.rho= aco.q= aco.tau0=\n"
      "aco.energy_heuristic=residual|as-written-difference\n"
      "aco.deposit_enabled=true|false  aco.energy_term_enabled=true|false\n"
      "sim.protocol=modified-aco|classic-aco|energy-greedy|random-walk\n"
      "sim.rounds=<n>  sim.ttl=<hops>  sim.super_sensors=true|false\n"
      "sim.senders_fraction=<0..1>  or  sim.senders_count=<n>\n"
      "run.protocols=<p1,p2,...>  run.seeds=<s1,s2,...>\n"
      "run.sweep=ttl=<v1,v2,...>  or  run.sweep=rho=<v1,v2,...>\n"
      "run.out=<dir>  run.trace=true|false\n";
}

}  // namespace wsnsim
