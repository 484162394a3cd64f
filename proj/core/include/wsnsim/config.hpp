#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wsnsim/sim.hpp"

namespace wsnsim {

/// Config-file problem with `path:line:` context in the message.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SweepAxis { kNone, kTtl, kRho };

const char* to_string(SweepAxis axis);

/// A batch of runs: protocols x seeds x sweep values over one scenario.
struct ExperimentSpec {
  std::string scenario_label = "scenario1";
  SimConfig base;
  std::vector<ProtocolKind> protocols{ProtocolKind::kModifiedAco};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  SweepAxis sweep = SweepAxis::kNone;
  std::vector<double> sweep_values;
  std::string out_dir = "out";
  bool trace = false;
};

/// Applies the preset geometry for scenarios 1..3 (side 100/200/300 m,
/// 80/160/240 sensors, range 20/28/35 m, sink at the center) and stamps the
/// label. Everything else is left alone.
void apply_scenario_preset(ExperimentSpec& spec, int which);

/// Parses flat `section.key=value` lines. `#` starts a comment, blank
/// lines are skipped, later keys override earlier ones, and `scenario=`
/// presets apply in file order. An empty file yields the full defaults:
/// scenario1, modified-aco, 1000 rounds, seeds 1..5.
ExperimentSpec parse_config_text(std::string_view text, const std::string& origin);

/// parse_config_text over the file's contents. Missing or unreadable files
/// raise ConfigError.
ExperimentSpec load_config(const std::string& path);

/// One line per recognized key, for --help and the README.
std::string config_key_reference();

}  // namespace wsnsim
