#include "wsnsim/config.hpp"

#include <gtest/gtest.h>

namespace wsnsim {
namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config_text(text, "test.cfg");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(Config, EmptyTextYieldsFullDefaults) {
  const ExperimentSpec spec = parse_config_text("", "empty.cfg");
  EXPECT_EQ(spec.scenario_label, "scenario1");
  EXPECT_EQ(spec.base.scenario.node_count, 80u);
  EXPECT_DOUBLE_EQ(spec.base.scenario.area_side, 100.0);
  EXPECT_DOUBLE_EQ(spec.base.scenario.comm_range, 20.0);
  EXPECT_DOUBLE_EQ(spec.base.scenario.sink_position.x, 50.0);
  EXPECT_EQ(spec.base.rounds, 1000u);
  EXPECT_EQ(spec.protocols, (std::vector<ProtocolKind>{ProtocolKind::kModifiedAco}));
  EXPECT_EQ(spec.seeds, (std::vector<std::uint64_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(spec.sweep, SweepAxis::kNone);
  // Radio constants at their stock values.
  EXPECT_DOUBLE_EQ(spec.base.energy.e_elec, 50e-9);
  EXPECT_DOUBLE_EQ(spec.base.energy.eps_fs, 10e-12);
  EXPECT_DOUBLE_EQ(spec.base.energy.eps_mp, 0.0013e-12);
  EXPECT_DOUBLE_EQ(spec.base.energy.d0, 50.0);
  EXPECT_DOUBLE_EQ(spec.base.energy.initial_energy, 5.0);
  EXPECT_EQ(spec.base.energy.packet_bits, 1024u);
  EXPECT_DOUBLE_EQ(spec.base.aco.alpha, 2.0);
  EXPECT_DOUBLE_EQ(spec.base.aco.beta, 3.0);
  EXPECT_DOUBLE_EQ(spec.base.aco.gamma, 1.0);
  EXPECT_DOUBLE_EQ(spec.base.aco.rho, 0.5);
  EXPECT_DOUBLE_EQ(spec.base.aco.q, 1.0);
  EXPECT_DOUBLE_EQ(spec.base.aco.tau0, 1.0);
}

TEST(Config, ScenarioPresets) {
  const ExperimentSpec s3 = parse_config_text("scenario=scenario3\n", "t.cfg");
  EXPECT_EQ(s3.scenario_label, "scenario3");
  EXPECT_DOUBLE_EQ(s3.base.scenario.area_side, 300.0);
  EXPECT_EQ(s3.base.scenario.node_count, 240u);
  EXPECT_DOUBLE_EQ(s3.base.scenario.comm_range, 35.0);
  EXPECT_DOUBLE_EQ(s3.base.scenario.sink_position.x, 150.0);
  EXPECT_DOUBLE_EQ(s3.base.scenario.sink_position.y, 150.0);

  const ExperimentSpec s2 = parse_config_text("scenario=scenario2\n", "t.cfg");
  EXPECT_EQ(s2.base.scenario.node_count, 160u);
  EXPECT_DOUBLE_EQ(s2.base.scenario.comm_range, 28.0);
}

TEST(Config, UnknownKeyCarriesLineContext) {
  const std::string msg = error_of("aco.alpha=2\n\nnot_a_key=1\n");
  EXPECT_NE(msg.find("test.cfg:3:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("unknown key 'not_a_key'"), std::string::npos) << msg;
}

TEST(Config, RejectsRhoOutOfRange) {
  const std::string msg = error_of("aco.rho=1.5\n");
  EXPECT_NE(msg.find("rho"), std::string::npos) << msg;
  EXPECT_EQ(error_of("aco.rho=0\n"), "");  // 0 is a legal ablation value
  EXPECT_EQ(error_of("aco.rho=1\n"), "");
}

TEST(Config, RejectsMalformedLinesAndValues) {
  EXPECT_NE(error_of("just some words\n"), "");
  EXPECT_NE(error_of("sim.rounds=abc\n"), "");
  EXPECT_NE(error_of("sim.rounds=0\n"), "");
  EXPECT_NE(error_of("energy.initial=-2\n"), "");
  EXPECT_NE(error_of("sim.protocol=flooding\n"), "");
  EXPECT_NE(error_of("scenario=scenario9\n"), "");
  EXPECT_NE(error_of("net.deployment=grid\n"), "");
  EXPECT_NE(error_of("sim.senders_fraction=0\n"), "");
  EXPECT_NE(error_of("run.sweep=hops=1,2\n"), "");
  EXPECT_NE(error_of("run.sweep=ttl=0,5\n"), "");
  EXPECT_NE(error_of("run.sweep=ttl=2.5\n"), "");
  EXPECT_NE(error_of("run.sweep=rho=2\n"), "");
}

TEST(Config, MissingFileFails) {
  EXPECT_THROW(load_config("/nonexistent/path.cfg"), ConfigError);
}

TEST(Config, CommentsAndWhitespaceAreTolerated) {
  const ExperimentSpec spec = parse_config_text(
      "# experiment A\n"
      "  aco.alpha = 3   # steeper pheromone\n"
      "\n"
      "\tsim.rounds=250\r\n",
      "t.cfg");
  EXPECT_DOUBLE_EQ(spec.base.aco.alpha, 3.0);
  EXPECT_EQ(spec.base.rounds, 250u);
}

TEST(Config, ProtocolAndSeedLists) {
  const ExperimentSpec spec = parse_config_text(
      "run.protocols=classic-aco, random-walk\nrun.seeds=10, 20,30\n", "t.cfg");
  EXPECT_EQ(spec.protocols, (std::vector<ProtocolKind>{ProtocolKind::kClassicAco,
                                                       ProtocolKind::kRandomWalk}));
  EXPECT_EQ(spec.seeds, (std::vector<std::uint64_t>{10, 20, 30}));
}

TEST(Config, SweepForms) {
  const ExperimentSpec ttl = parse_config_text("run.sweep=ttl=5,10,15,20\n", "t.cfg");
  EXPECT_EQ(ttl.sweep, SweepAxis::kTtl);
  EXPECT_EQ(ttl.sweep_values, (std::vector<double>{5, 10, 15, 20}));

  const ExperimentSpec rho = parse_config_text("run.sweep=rho=0.5,0.75,1\n", "t.cfg");
  EXPECT_EQ(rho.sweep, SweepAxis::kRho);
  EXPECT_EQ(rho.sweep_values, (std::vector<double>{0.5, 0.75, 1.0}));
}

TEST(Config, SenderQuotaKeys) {
  const ExperimentSpec frac = parse_config_text("sim.senders_fraction=0.25\n", "t.cfg");
  EXPECT_EQ(frac.base.senders.kind, SenderQuota::Kind::kFraction);
  EXPECT_DOUBLE_EQ(frac.base.senders.fraction, 0.25);

  const ExperimentSpec count = parse_config_text("sim.senders_count=6\n", "t.cfg");
  EXPECT_EQ(count.base.senders.kind, SenderQuota::Kind::kCount);
  EXPECT_EQ(count.base.senders.count, 6u);
}

TEST(Config, CrossoverThresholdKeyword) {
  const ExperimentSpec spec = parse_config_text("energy.d0=crossover\n", "t.cfg");
  EXPECT_NEAR(spec.base.energy.d0, 87.70580193070292, 1e-9);
}

TEST(Config, LaterKeysOverrideEarlierOnes) {
  const ExperimentSpec spec = parse_config_text(
      "scenario=scenario2\nnet.node_count=10\n", "t.cfg");
  EXPECT_EQ(spec.base.scenario.node_count, 10u);
  EXPECT_DOUBLE_EQ(spec.base.scenario.area_side, 200.0);
  EXPECT_EQ(spec.scenario_label, "custom");

  // The preset wins when it comes last.
  const ExperimentSpec preset_last = parse_config_text(
      "net.node_count=10\nscenario=scenario2\n", "t.cfg");
  EXPECT_EQ(preset_last.base.scenario.node_count, 160u);
  EXPECT_EQ(preset_last.scenario_label, "scenario2");
}

TEST(Config, OtherRunKeys) {
  const ExperimentSpec spec = parse_config_text(
      "run.out=results/exp7\nrun.trace=true\nsim.super_sensors=true\n"
      "net.super_radius=12.5\naco.energy_heuristic=as-written-difference\n"
      "aco.deposit_enabled=false\nsim.ttl=9\n",
      "t.cfg");
  EXPECT_EQ(spec.out_dir, "results/exp7");
  EXPECT_TRUE(spec.trace);
  EXPECT_TRUE(spec.base.super_sensors_enabled);
  EXPECT_DOUBLE_EQ(spec.base.scenario.super_radius, 12.5);
  EXPECT_EQ(spec.base.aco.energy_mode, EnergyHeuristicMode::kConsumedDifference);
  EXPECT_FALSE(spec.base.aco.deposit_enabled);
  EXPECT_EQ(spec.base.ttl, 9u);
}

}  // namespace
}  // namespace wsnsim
