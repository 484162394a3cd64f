#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsnsim/config.hpp"
#include "wsnsim/sim.hpp"

namespace wsnsim {

// CSV schemas are frozen; tests pin them verbatim.
inline constexpr const char* kRoundCsvHeader =
    "round,sent,delivered,dropped,energy_j,alive,mean_hops,mean_path_m";
inline constexpr const char* kSummaryCsvHeader =
    "protocol,scenario,seed,ttl,success_ratio,fnd,hnd,lnd,total_energy_j";
inline constexpr const char* kTraceCsvHeader =
    "round,source,status,hops,path_length_m,energy_j";
inline constexpr const char* kSuccessVsRoundHeader =
    "series,round,mean_success_ratio,std_success_ratio";
inline constexpr const char* kEnergyVsRoundHeader =
    "series,round,mean_cum_energy_j,std_cum_energy_j";
inline constexpr const char* kAliveVsRoundHeader =
    "series,round,mean_alive,std_alive";
inline constexpr const char* kSuccessVsTtlHeader =
    "series,ttl,mean_success_ratio,std_success_ratio";

/// Full round-trip precision (%.17g): parsing the text recovers the exact
/// double, which keeps reruns byte-identical and aggregate checks exact.
std::string format_double(double v);

/// One summary row per run. fnd/hnd/lnd hold the 1-based round of the
/// milestone, or 0 when it was not reached within the horizon.
struct SummaryRow {
  std::string protocol;
  std::string scenario;  // label; rho-sweep runs carry a `#rho=` qualifier
  std::uint64_t seed = 0;
  std::uint32_t ttl = 0;
  double success_ratio = 0.0;
  std::uint32_t fnd = 0;
  std::uint32_t hnd = 0;
  std::uint32_t lnd = 0;
  double total_energy = 0.0;
};

std::string round_csv(const SimResult& result);
std::string summary_csv(const std::vector<SummaryRow>& rows);
SummaryRow make_summary_row(const std::string& protocol, const std::string& scenario,
                            std::uint64_t seed, std::uint32_t ttl,
                            const SimResult& result);

struct AggregateStats {
  std::size_t n = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample stddev, 0 when n < 2
};

AggregateStats aggregate(const std::vector<double>& values);

/// Seed-averaged view of one (protocol, scenario, sweep value) cell.
/// Lifetime milestones that were never reached enter the averages censored
/// at horizon + 1, so "survived the whole run" aggregates as later-than-
/// any-observed-death rather than as zero.
struct ComparisonRow {
  std::string protocol;
  std::string scenario;
  double sweep_value = 0.0;  // meaningless when the axis is kNone
  AggregateStats success_ratio;
  AggregateStats total_energy;
  AggregateStats fnd;
  AggregateStats hnd;
  AggregateStats lnd;
};

struct ComparisonReport {
  SweepAxis axis = SweepAxis::kNone;
  std::uint32_t horizon = 0;  // rounds per run, for the censoring rule
  std::vector<ComparisonRow> rows;
};

/// Censoring used for lifetime aggregation: 0 (not reached) -> horizon + 1.
double censor_lifetime(std::uint32_t round, std::uint32_t horizon);

std::string report_csv(const ComparisonReport& report);

/// Runs every (protocol x sweep value x seed) simulation and writes, under
/// spec.out_dir:
///   runs/rounds_<protocol>_seed<S>[_ttl<T>|_rho<R>].csv   per-run rounds
///   runs/trace_<protocol>_seed<S>[...].csv                when spec.trace
///   summary.csv                                           one row per run
///   report.csv                                            seed aggregates
///   plots/{success_vs_round,energy_vs_round,alive_vs_round,success_vs_ttl}.csv
/// A filesystem failure aborts with the number of completed runs in the
/// message; files already written stay on disk.
ComparisonReport run_experiments(const ExperimentSpec& spec);

}  // namespace wsnsim
