#include "wsnsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

namespace fs = std::filesystem;

namespace wsnsim {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string round_csv(const SimResult& result) {
  std::string out = kRoundCsvHeader;
  out += '\n';
  for (const RoundMetrics& m : result.rounds) {
    out += std::to_string(m.round);
    out += ',' + std::to_string(m.sent);
    out += ',' + std::to_string(m.delivered);
    out += ',' + std::to_string(m.dropped);
    out += ',' + format_double(m.energy_consumed);
    out += ',' + std::to_string(m.alive_nodes);
    out += ',' + format_double(m.mean_hops_delivered);
    out += ',' + format_double(m.mean_path_length_m);
    out += '\n';
  }
  return out;
}

SummaryRow make_summary_row(const std::string& protocol, const std::string& scenario,
                            std::uint64_t seed, std::uint32_t ttl,
                            const SimResult& result) {
  SummaryRow row;
  row.protocol = protocol;
  row.scenario = scenario;
  row.seed = seed;
  row.ttl = ttl;
  row.success_ratio = result.success_ratio;
  row.fnd = result.fnd_round.value_or(0);
  row.hnd = result.hnd_round.value_or(0);
  row.lnd = result.lnd_round.value_or(0);
  row.total_energy = result.total_energy;
  return row;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = kSummaryCsvHeader;
  out += '\n';
  for (const SummaryRow& r : rows) {
    out += r.protocol;
    out += ',' + r.scenario;
    out += ',' + std::to_string(r.seed);
    out += ',' + std::to_string(r.ttl);
    out += ',' + format_double(r.success_ratio);
    out += ',' + std::to_string(r.fnd);
    out += ',' + std::to_string(r.hnd);
    out += ',' + std::to_string(r.lnd);
    out += ',' + format_double(r.total_energy);
    out += '\n';
  }
  return out;
}

AggregateStats aggregate(const std::vector<double>& values) {
  AggregateStats s;
  s.n = values.size();
  if (s.n == 0) {
    return s;
  }
  double sum = 0.0;
  for (const double v : values) {
    sum += v;
  }
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (const double v : values) {
      ss += (v - s.mean) * (v - s.mean);
    }
    s.stddev = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

double censor_lifetime(std::uint32_t round, std::uint32_t horizon) {
  return round == 0 ? static_cast<double>(horizon) + 1.0
                    : static_cast<double>(round);
}

std::string report_csv(const ComparisonReport& report) {
  std::string out =
      "protocol,scenario,sweep_axis,sweep_value,runs"
      ",mean_success_ratio,std_success_ratio"
      ",mean_total_energy_j,std_total_energy_j"
      ",mean_fnd,std_fnd,mean_hnd,std_hnd,mean_lnd,std_lnd";
  out += '\n';
  for (const ComparisonRow& r : report.rows) {
    out += r.protocol;
    out += ',' + r.scenario;
    out += ',';
    out += to_string(report.axis);
    out += ',' + format_double(r.sweep_value);
    out += ',' + std::to_string(r.success_ratio.n);
    out += ',' + format_double(r.success_ratio.mean);
    out += ',' + format_double(r.success_ratio.stddev);
    out += ',' + format_double(r.total_energy.mean);
    out += ',' + format_double(r.total_energy.stddev);
    out += ',' + format_double(r.fnd.mean);
    out += ',' + format_double(r.fnd.stddev);
    out += ',' + format_double(r.hnd.mean);
    out += ',' + format_double(r.hnd.stddev);
    out += ',' + format_double(r.lnd.mean);
    out += ',' + format_double(r.lnd.stddev);
    out += '\n';
  }
  return out;
}

namespace {

struct RunRecord {
  ProtocolKind protocol;
  double sweep_value;
  std::uint64_t seed;
  SimResult result;
};

std::string sweep_suffix(SweepAxis axis, double value) {
  if (axis == SweepAxis::kTtl) {
    return "_ttl" + std::to_string(static_cast<std::uint32_t>(value));
  }
  if (axis == SweepAxis::kRho) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "_rho%g", value);
    return buf;
  }
  return "";
}

std::string series_name(const ExperimentSpec& spec, ProtocolKind protocol,
                        double value) {
  std::string name = to_string(protocol);
  if (spec.sweep == SweepAxis::kTtl) {
    name += "@ttl=" + std::to_string(static_cast<std::uint32_t>(value));
  } else if (spec.sweep == SweepAxis::kRho) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "@rho=%g", value);
    name += buf;
  }
  return name;
}

void write_file(const fs::path& path, const std::string& content,
                std::size_t completed_runs) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.flush();
  if (!out) {
    throw std::runtime_error("failed to write " + path.string() + " (" +
                             std::to_string(completed_runs) +
                             " completed runs are preserved on disk)");
  }
}

// Mean/std of `pick(metrics)` per round across seeds. Seeds that terminated
// early simply stop contributing to later rounds.
template <typename Pick>
std::string per_round_series_csv(
    const char* header,
    const std::vector<std::pair<std::string, std::vector<const SimResult*>>>& series,
    Pick pick) {
  std::string out = header;
  out += '\n';
  for (const auto& [name, results] : series) {
    std::size_t max_rounds = 0;
    for (const SimResult* r : results) {
      max_rounds = std::max(max_rounds, r->rounds.size());
    }
    for (std::size_t i = 0; i < max_rounds; ++i) {
      std::vector<double> values;
      for (const SimResult* r : results) {
        if (i < r->rounds.size()) {
          values.push_back(pick(*r, i));
        }
      }
      const AggregateStats stats = aggregate(values);
      out += name;
      out += ',' + std::to_string(i + 1);
      out += ',' + format_double(stats.mean);
      out += ',' + format_double(stats.stddev);
      out += '\n';
    }
  }
  return out;
}

}  // namespace

ComparisonReport run_experiments(const ExperimentSpec& spec) {
  if (spec.protocols.empty()) {
    throw std::invalid_argument("run_experiments: no protocols");
  }
  if (spec.seeds.empty()) {
    throw std::invalid_argument("run_experiments: no seeds");
  }
  if (spec.sweep != SweepAxis::kNone && spec.sweep_values.empty()) {
    throw std::invalid_argument("run_experiments: sweep axis without values");
  }

  const fs::path out_dir(spec.out_dir);
  fs::create_directories(out_dir / "runs");
  fs::create_directories(out_dir / "plots");

  // A placeholder value keeps the loop below uniform when nothing sweeps.
  const std::vector<double> sweep_values =
      spec.sweep == SweepAxis::kNone ? std::vector<double>{0.0} : spec.sweep_values;

  std::vector<RunRecord> records;
  std::vector<SummaryRow> summary_rows;

  for (const ProtocolKind protocol : spec.protocols) {
    for (const double value : sweep_values) {
      for (const std::uint64_t seed : spec.seeds) {
        SimConfig config = spec.base;
        config.protocol = protocol;
        config.seed = seed;
        if (spec.sweep == SweepAxis::kTtl) {
          config.ttl = static_cast<std::uint32_t>(value);
        } else if (spec.sweep == SweepAxis::kRho) {
          config.aco.rho = value;
        }

        const std::string suffix = sweep_suffix(spec.sweep, value);
        const std::string run_tag =
            std::string(to_string(protocol)) + "_seed" + std::to_string(seed) + suffix;

        std::string trace;
        PacketObserver observer;
        if (spec.trace) {
          trace = kTraceCsvHeader;
          trace += '\n';
          observer = [&trace](std::uint32_t round, NodeId source,
                              const RouteOutcome& outcome) {
            trace += std::to_string(round);
            trace += ',' + std::to_string(source);
            trace += ',';
            trace += to_string(outcome.status);
            trace += ',' + std::to_string(outcome.hops);
            trace += ',' + format_double(outcome.path_length);
            trace += ',' + format_double(outcome.energy_spent);
            trace += '\n';
          };
        }

        SimResult result = run_simulation(config, observer);

        write_file(out_dir / "runs" / ("rounds_" + run_tag + ".csv"),
                   round_csv(result), records.size());
        if (spec.trace) {
          write_file(out_dir / "runs" / ("trace_" + run_tag + ".csv"), trace,
                     records.size());
        }

        std::string scenario = spec.scenario_label;
        if (spec.sweep == SweepAxis::kRho) {
          char buf[32];
          std::snprintf(buf, sizeof(buf), "#rho=%g", value);
          scenario += buf;
        }
        const std::uint32_t effective_ttl =
            config.ttl == 0 ? default_ttl(config.scenario) : config.ttl;
        summary_rows.push_back(make_summary_row(to_string(protocol), scenario, seed,
                                                effective_ttl, result));
        records.push_back(RunRecord{protocol, value, seed, std::move(result)});
      }
    }
  }

  write_file(out_dir / "summary.csv", summary_csv(summary_rows), records.size());

  ComparisonReport report;
  report.axis = spec.sweep;
  report.horizon = spec.base.rounds;

  std::vector<std::pair<std::string, std::vector<const SimResult*>>> series;
  std::size_t row_index = 0;
  for (const ProtocolKind protocol : spec.protocols) {
    for (const double value : sweep_values) {
      std::vector<double> success, energy, fnd, hnd, lnd;
      std::vector<const SimResult*> results;
      for (std::size_t s = 0; s < spec.seeds.size(); ++s, ++row_index) {
        const SummaryRow& row = summary_rows[row_index];
        success.push_back(row.success_ratio);
        energy.push_back(row.total_energy);
        fnd.push_back(censor_lifetime(row.fnd, report.horizon));
        hnd.push_back(censor_lifetime(row.hnd, report.horizon));
        lnd.push_back(censor_lifetime(row.lnd, report.horizon));
        results.push_back(&records[row_index].result);
      }
      ComparisonRow row;
      row.protocol = to_string(protocol);
      row.scenario = summary_rows[row_index - 1].scenario;
      row.sweep_value = value;
      row.success_ratio = aggregate(success);
      row.total_energy = aggregate(energy);
      row.fnd = aggregate(fnd);
      row.hnd = aggregate(hnd);
      row.lnd = aggregate(lnd);
      report.rows.push_back(std::move(row));
      series.emplace_back(series_name(spec, protocol, value), std::move(results));
    }
  }

  write_file(out_dir / "report.csv", report_csv(report), records.size());

  write_file(out_dir / "plots" / "success_vs_round.csv",
             per_round_series_csv(kSuccessVsRoundHeader, series,
                                  [](const SimResult& r, std::size_t i) {
                                    std::uint64_t sent = 0, delivered = 0;
                                    for (std::size_t k = 0; k <= i; ++k) {
                                      sent += r.rounds[k].sent;
                                      delivered += r.rounds[k].delivered;
                                    }
                                    return sent == 0 ? 0.0
                                                     : static_cast<double>(delivered) /
                                                           static_cast<double>(sent);
                                  }),
             records.size());
  write_file(out_dir / "plots" / "energy_vs_round.csv",
             per_round_series_csv(kEnergyVsRoundHeader, series,
                                  [](const SimResult& r, std::size_t i) {
                                    double cum = 0.0;
                                    for (std::size_t k = 0; k <= i; ++k) {
                                      cum += r.rounds[k].energy_consumed;
                                    }
                                    return cum;
                                  }),
             records.size());
  write_file(out_dir / "plots" / "alive_vs_round.csv",
             per_round_series_csv(kAliveVsRoundHeader, series,
                                  [](const SimResult& r, std::size_t i) {
                                    return static_cast<double>(r.rounds[i].alive_nodes);
                                  }),
             records.size());

  // Final success ratio keyed by hop budget; a single row per protocol when
  // nothing sweeps.
  std::string ttl_plot = kSuccessVsTtlHeader;
  ttl_plot += '\n';
  row_index = 0;
  for (const ProtocolKind protocol : spec.protocols) {
    for (const double value : sweep_values) {
      std::vector<double> success;
      std::uint32_t ttl = 0;
      for (std::size_t s = 0; s < spec.seeds.size(); ++s, ++row_index) {
        success.push_back(summary_rows[row_index].success_ratio);
        ttl = summary_rows[row_index].ttl;
      }
      const AggregateStats stats = aggregate(success);
      ttl_plot += to_string(protocol);
      if (spec.sweep == SweepAxis::kRho) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "@rho=%g", value);
        ttl_plot += buf;
      }
      ttl_plot += ',' + std::to_string(ttl);
      ttl_plot += ',' + format_double(stats.mean);
      ttl_plot += ',' + format_double(stats.stddev);
      ttl_plot += '\n';
    }
  }
  write_file(out_dir / "plots" / "success_vs_ttl.csv", ttl_plot, records.size());

  return report;
}

}  // namespace wsnsim
