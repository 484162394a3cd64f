#include "wsnsim/network.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "wsnsim/rng.hpp"

namespace wsnsim {

double distance(const Position& a, const Position& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

const char* to_string(DeploymentMode mode) {
  switch (mode) {
    case DeploymentMode::kUniformRandom:
      return "uniform-random";
    case DeploymentMode::kScaleFree:
      return "scale-free";
  }
  return "?";
}

namespace {

void validate(const NetworkConfig& c) {
  if (!(c.area_side > 0.0)) {
    throw std::invalid_argument("deploy: area_side must be positive");
  }
  if (c.node_count == 0) {
    throw std::invalid_argument("deploy: node_count must be positive");
  }
  if (!(c.comm_range > 0.0)) {
    throw std::invalid_argument("deploy: comm_range must be positive");
  }
  if (c.sink_position.x < 0.0 || c.sink_position.x > c.area_side ||
      c.sink_position.y < 0.0 || c.sink_position.y > c.area_side) {
    throw std::invalid_argument("deploy: sink_position outside the area");
  }
  if (!(c.initial_energy > 0.0)) {
    throw std::invalid_argument("deploy: initial_energy must be positive");
  }
  if (c.super_radius < 0.0) {
    throw std::invalid_argument("deploy: super_radius must be non-negative");
  }
}

bool taken(const std::vector<Position>& pts, const Position& p) {
  for (const Position& q : pts) {
    if (q.x == p.x && q.y == p.y) {
      return true;
    }
  }
  return false;
}

Position draw_uniform(Rng& rng, double side) {
  return Position{uniform_double(rng) * side, uniform_double(rng) * side};
}

std::vector<Position> place_uniform(const NetworkConfig& c, Rng& rng) {
  std::vector<Position> pts;
  pts.reserve(c.node_count);
  pts.push_back(c.sink_position);  // sentinel so sensors never land on the sink
  while (pts.size() < c.node_count + 1) {
    const Position p = draw_uniform(rng, c.area_side);
    if (!taken(pts, p)) {
      pts.push_back(p);
    }
  }
  pts.erase(pts.begin());
  return pts;
}

// Preferential placement: each new sensor is dropped near an anchor chosen
// with probability proportional to (range-graph degree + 1), which grows
// hub-heavy geometric topologies. The generator is a stand-in; standard
// runs use uniform placement.
std::vector<Position> place_scale_free(const NetworkConfig& c, Rng& rng) {
  std::vector<Position> pts;
  std::vector<std::uint64_t> degree;
  pts.push_back(c.sink_position);
  degree.push_back(0);
  while (pts.size() < c.node_count + 1) {
    std::uint64_t total = 0;
    for (const std::uint64_t d : degree) {
      total += d + 1;
    }
    std::uint64_t pick = uniform_index(rng, total);
    std::size_t anchor = 0;
    for (std::size_t i = 0; i < degree.size(); ++i) {
      const std::uint64_t w = degree[i] + 1;
      if (pick < w) {
        anchor = i;
        break;
      }
      pick -= w;
    }
    Position p;
    bool placed = false;
    for (int attempt = 0; attempt < 32 && !placed; ++attempt) {
      const double r = c.comm_range * std::sqrt(uniform_double(rng));
      const double theta = 2.0 * std::numbers::pi * uniform_double(rng);
      p = Position{pts[anchor].x + r * std::cos(theta),
                   pts[anchor].y + r * std::sin(theta)};
      placed = p.x >= 0.0 && p.x <= c.area_side && p.y >= 0.0 &&
               p.y <= c.area_side && !taken(pts, p);
    }
    while (!placed) {
      p = draw_uniform(rng, c.area_side);
      placed = !taken(pts, p);
    }
    degree.push_back(0);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (distance(pts[i], p) <= c.comm_range) {
        ++degree[i];
        ++degree.back();
      }
    }
    pts.push_back(p);
  }
  pts.erase(pts.begin());
  return pts;
}

}  // namespace

Network deploy(const NetworkConfig& config) {
  validate(config);

  Rng rng(config.rng_seed);
  const std::vector<Position> pts = config.deployment == DeploymentMode::kScaleFree
                                        ? place_scale_free(config, rng)
                                        : place_uniform(config, rng);

  Network net;
  net.config = config;
  net.nodes.reserve(config.node_count + 1);
  for (NodeId id = 0; id < config.node_count; ++id) {
    SensorNode node;
    node.id = id;
    node.position = pts[id];
    node.residual_energy = config.initial_energy;
    net.nodes.push_back(std::move(node));
  }

  SensorNode sink;
  sink.id = config.node_count;
  sink.position = config.sink_position;
  sink.residual_energy = config.initial_energy;
  sink.is_super = true;  // the sink never runs out of energy
  net.nodes.push_back(std::move(sink));
  net.sink_id = config.node_count;

  if (config.super_sensors) {
    const double radius =
        config.super_radius > 0.0 ? config.super_radius : config.comm_range;
    for (SensorNode& node : net.nodes) {
      if (!net.is_sink(node.id) &&
          distance(node.position, config.sink_position) <= radius) {
        node.is_super = true;
      }
    }
  }
  return net;
}

void discover_neighbors(Network& net) {
  for (SensorNode& node : net.nodes) {
    node.neighbors.clear();
  }
  const double range = net.config.comm_range;
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < net.nodes.size(); ++j) {
      const double d = distance(net.nodes[i].position, net.nodes[j].position);
      if (d == 0.0) {
        throw std::invalid_argument("discover_neighbors: two nodes share a position");
      }
      if (d <= range) {
        net.nodes[i].neighbors.push_back(
            {net.nodes[j].id, d, net.nodes[j].residual_energy});
        net.nodes[j].neighbors.push_back(
            {net.nodes[i].id, d, net.nodes[i].residual_energy});
      }
    }
  }
}

void refresh_energy_views(Network& net) {
  for (SensorNode& node : net.nodes) {
    for (NeighborEntry& entry : node.neighbors) {
      entry.last_known_energy = net.nodes[entry.id].residual_energy;
    }
  }
}

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

std::string serialize(const Network& net) {
  std::string out = "# wsnsim-network area_side=";
  append_double(out, net.config.area_side);
  out += " node_count=" + std::to_string(net.config.node_count);
  out += " comm_range=";
  append_double(out, net.config.comm_range);
  out += " sink_x=";
  append_double(out, net.config.sink_position.x);
  out += " sink_y=";
  append_double(out, net.config.sink_position.y);
  out += " deployment=";
  out += to_string(net.config.deployment);
  out += " seed=" + std::to_string(net.config.rng_seed);
  out += " initial_energy=";
  append_double(out, net.config.initial_energy);
  out += " super_sensors=";
  out += net.config.super_sensors ? '1' : '0';
  out += " super_radius=";
  append_double(out, net.config.super_radius);
  out += '\n';
  for (const SensorNode& node : net.nodes) {
    out += std::to_string(node.id);
    out += ' ';
    append_double(out, node.position.x);
    out += ' ';
    append_double(out, node.position.y);
    out += ' ';
    append_double(out, node.residual_energy);
    out += ' ';
    out += node.is_super ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace wsnsim
